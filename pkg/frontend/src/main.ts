import { ApiClient } from "./api.js";
import type { ViewContext } from "./render.js";
import { startRouter } from "./router.js";
import { initialState } from "./types.js";

const container = document.getElementById("app");
if (!container) {
  throw new Error("missing #app container");
}

const ctx: ViewContext = {
  client: new ApiClient(),
  state: initialState(),
  navigate: (hash: string) => {
    window.location.hash = hash;
  },
};

startRouter(container, ctx);
