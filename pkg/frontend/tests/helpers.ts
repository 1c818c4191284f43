import { vi } from "vitest";

import { ApiClient } from "../src/api.js";
import type { ViewContext } from "../src/render.js";
import { initialState } from "../src/types.js";

export function jsonResponse(payload: unknown, status = 200): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => payload,
  } as unknown as Response;
}

/** Installs a fetch mock that serves payloads by URL substring. */
export function mockFetch(routes: Array<[string, () => Response]>) {
  const calls: string[] = [];
  const mock = vi.fn(async (input: RequestInfo | URL) => {
    const url = String(input);
    calls.push(url);
    for (const [needle, responder] of routes) {
      if (url.includes(needle)) return responder();
    }
    return jsonResponse({ code: "not_found", message: "no route", detail: null }, 404);
  });
  vi.stubGlobal("fetch", mock);
  return { mock, calls };
}

export function makeContext(): { ctx: ViewContext; navigations: string[] } {
  const navigations: string[] = [];
  const ctx: ViewContext = {
    client: new ApiClient(),
    state: initialState(),
    navigate: (hash: string) => navigations.push(hash),
  };
  return { ctx, navigations };
}

export const FIGURE_SENTENCE = "많은 사람들이 사회의 질서를 확립하려는 …";

export const FIGURE_PROJECTION = [
  {
    sentence: FIGURE_SENTENCE,
    spans: [
      { start: 0, end: 7, label: "AGT", text: "많은 사람들이" },
      { start: 8, end: 15, label: "THM", text: "사회의 질서를" },
      { start: 16, end: 21, label: "TARGET", text: "확립하려는" },
    ],
    unmatchedSlots: [],
    error: null,
  },
];

export const ENTRY_PAYLOAD = {
  orth: "확립하다",
  pos: "vv",
  homographId: "vv.1",
  morph: {
    variants: [{ type: "spr", form: "확립을 하다" }],
    structure: "N.하",
    origin: { language: "si", form: "確立_" },
    inflectionClass: "irregular:여",
  },
  senses: [
    {
      key: "1",
      semClass: "행위",
      trans: "to establish",
      subsense: null,
      frameGroups: [
        {
          label: "1",
          frames: [
            {
              pattern: "X=N0-이 Y=N1-을 V",
              slots: [
                { positionLabel: "X", nounIndex: 0, postposition: "이",
                  thematicRole: "AGT", selectionRestrictions: ["인간"] },
                { positionLabel: "Y", nounIndex: 1, postposition: "을",
                  thematicRole: "THM", selectionRestrictions: ["사실명제"] },
              ],
              examples: [{ text: FIGURE_SENTENCE, goldSpans: null }],
            },
          ],
        },
      ],
    },
  ],
};

export const SEARCH_PAYLOAD = {
  total: 1,
  offset: 0,
  limit: 50,
  results: [
    { lemma: "확립하다", homographId: "vv.1", senseKeys: ["1"], semClass: ["행위"] },
  ],
};
