/** Hash-based routing; every view is deep-linkable and reloading a URL
 * reproduces it. Navigation cancels requests still in flight
 * (latest-query-wins). */

import type { ViewContext } from "./render.js";
import { renderDetailView, renderProjectionView, renderSearchView } from "./render.js";
import type { Facet } from "./types.js";

const DETAIL = /^#\/verbs\/([^/]+)\/([^/]+)$/;
const PROJECTIONS = /^#\/verbs\/([^/]+)\/([^/]+)\/senses\/([^/]+)\/frames\/(\d+)\/projections$/;
const SEARCH = /^#\/(?:search)?(?:\?(.*))?$/;

export function route(container: HTMLElement, ctx: ViewContext, hash: string): void {
  ctx.client.cancel();

  const projections = PROJECTIONS.exec(hash);
  if (projections) {
    void renderProjectionView(
      container,
      ctx,
      decodeURIComponent(projections[1]!),
      decodeURIComponent(projections[2]!),
      decodeURIComponent(projections[3]!),
      Number(projections[4]),
    );
    return;
  }

  const detail = DETAIL.exec(hash);
  if (detail) {
    void renderDetailView(
      container,
      ctx,
      decodeURIComponent(detail[1]!),
      decodeURIComponent(detail[2]!),
    );
    return;
  }

  const search = SEARCH.exec(hash || "#/");
  if (search) {
    const params = new URLSearchParams(search[1] ?? "");
    const text = params.get("q") ?? ctx.state.activeQuery.text;
    const facet = (params.get("by") as Facet | null) ?? ctx.state.activeQuery.facet;
    ctx.state.activeQuery = { text, facet };
  }
  renderSearchView(container, ctx);
}

export function startRouter(container: HTMLElement, ctx: ViewContext): void {
  const onChange = () => route(container, ctx, window.location.hash);
  window.addEventListener("hashchange", onChange);
  onChange();
}
