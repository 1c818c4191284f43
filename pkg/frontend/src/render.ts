/** DOM rendering for the three views: search, entry detail, projections.
 *
 * The client computes nothing linguistic: every label, span, and statistic
 * shown here is taken verbatim from an API payload. Span highlighting
 * slices the sentence by code points (the API contract's offset unit),
 * never by UTF-16 units.
 */

import { ApiClient, ApiError } from "./api.js";
import { roleColor } from "./colors.js";
import type {
  EntryPayload,
  Facet,
  FramePayload,
  ProjectionPayload,
  SearchResponse,
  ViewState,
} from "./types.js";

export const FACETS: Facet[] = ["lemma", "frame", "role", "semclass", "inflection"];

type Navigate = (hash: string) => void;

export interface ViewContext {
  client: ApiClient;
  state: ViewState;
  navigate: Navigate;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function codePointSlice(text: string, start: number, end: number): string {
  return Array.from(text).slice(start, end).join("");
}

function errorBanner(container: HTMLElement, error: unknown, retry: () => void): void {
  container.replaceChildren();
  const banner = el("div", "error-banner");
  const message =
    error instanceof ApiError ? error.message : `unexpected error: ${String(error)}`;
  banner.append(el("span", "error-message", message));
  const button = el("button", "retry", "Retry");
  button.addEventListener("click", retry);
  banner.append(button);
  container.append(banner);
}

// ---------------------------------------------------------------------------
// search view

export function renderSearchView(container: HTMLElement, ctx: ViewContext): void {
  container.replaceChildren();
  const form = el("form", "search-form");
  const facetPicker = el("select", "facet-picker");
  for (const facet of FACETS) {
    const option = el("option", undefined, facet);
    option.value = facet;
    facetPicker.append(option);
  }
  facetPicker.value = ctx.state.activeQuery.facet;
  const queryBox = el("input", "query-box");
  queryBox.type = "search";
  queryBox.value = ctx.state.activeQuery.text;
  const submit = el("button", "search-submit", "Search");
  submit.type = "submit";
  const validation = el("p", "validation-message");
  const resultsHost = el("div", "results");
  form.append(facetPicker, queryBox, submit);
  container.append(form, validation, resultsHost);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const text = queryBox.value.trim();
    const facet = facetPicker.value as Facet;
    if (!text) {
      validation.textContent = "Enter a query first.";
      return;
    }
    validation.textContent = "";
    ctx.state.activeQuery = { text, facet };
    void runSearch(resultsHost, ctx);
  });

  if (ctx.state.activeQuery.text) {
    void runSearch(resultsHost, ctx);
  }
}

async function runSearch(host: HTMLElement, ctx: ViewContext): Promise<void> {
  const { text, facet } = ctx.state.activeQuery;
  host.replaceChildren(el("p", "loading", "Searching…"));
  let page: SearchResponse;
  try {
    page = await ctx.client.searchVerbs(text, facet);
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    errorBanner(host, error, () => void runSearch(host, ctx));
    return;
  }
  ctx.state.resultPage = page;
  host.replaceChildren();
  if (page.results.length === 0) {
    host.append(el("p", "no-results", "No results."));
    return;
  }
  const list = el("ul", "result-list");
  for (const record of page.results) {
    const item = el("li", "result-row");
    const link = el("a", "result-link");
    link.href = `#/verbs/${encodeURIComponent(record.lemma)}/${encodeURIComponent(record.homographId)}`;
    link.append(
      el("span", "result-lemma", record.lemma),
      el("span", "result-homograph", record.homographId),
      el("span", "result-semclass", record.semClass.join(", ")),
    );
    link.addEventListener("click", (event) => {
      event.preventDefault();
      ctx.state.selectedEntry = {
        lemma: record.lemma,
        homographId: record.homographId,
      };
      ctx.navigate(link.getAttribute("href") ?? "#/");
    });
    item.append(link);
    list.append(item);
  }
  host.append(list, el("p", "result-count", `${page.total} result(s)`));
}

// ---------------------------------------------------------------------------
// detail view

export async function renderDetailView(
  container: HTMLElement,
  ctx: ViewContext,
  lemma: string,
  homographId: string,
): Promise<void> {
  container.replaceChildren(el("p", "loading", "Loading…"));
  let entry: EntryPayload;
  try {
    entry = await ctx.client.entryDetail(lemma, homographId);
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    errorBanner(container, error, () =>
      void renderDetailView(container, ctx, lemma, homographId));
    return;
  }
  ctx.state.selectedEntry = { lemma, homographId };

  container.replaceChildren();
  const header = el("header", "entry-header");
  header.append(el("h1", "entry-orth", entry.orth));
  const subtitle = el("div", "entry-subtitle");
  for (const variant of entry.morph.variants) {
    subtitle.append(el("span", "morph-variant", variant.form));
  }
  if (entry.morph.structure) {
    subtitle.append(el("span", "morph-structure", entry.morph.structure));
  }
  if (entry.morph.origin) {
    subtitle.append(el("span", "morph-origin", entry.morph.origin.form));
  }
  if (entry.morph.inflectionClass) {
    subtitle.append(el("span", "morph-inflection", entry.morph.inflectionClass));
  }
  header.append(subtitle, el("p", "entry-pos", `${entry.pos} · ${entry.homographId}`));
  container.append(header);

  for (const sense of entry.senses) {
    const section = el("section", "sense");
    const heading = el("h2", "sense-heading");
    heading.append(el("span", "sense-key", sense.key));
    if (sense.semClass) heading.append(el("span", "sense-semclass", sense.semClass));
    if (sense.trans) heading.append(el("span", "sense-trans", sense.trans));
    section.append(heading);
    if (sense.subsense) {
      section.append(el("p", "sense-subsense", sense.subsense));
    }
    let frameIndex = 0;
    for (const group of sense.frameGroups) {
      for (const frame of group.frames) {
        section.append(renderFrameCard(frame, frameIndex, sense.key, ctx, lemma, homographId));
        frameIndex += 1;
      }
    }
    container.append(section);
  }
}

function renderFrameCard(
  frame: FramePayload,
  frameIndex: number,
  senseKey: string,
  ctx: ViewContext,
  lemma: string,
  homographId: string,
): HTMLElement {
  const card = el("article", "frame-card");
  card.append(el("code", "frame-pattern", frame.pattern));
  const slots = el("div", "frame-slots");
  for (const slot of frame.slots) {
    const badge = el("span", "role-badge", slot.thematicRole);
    badge.style.backgroundColor = roleColor(slot.thematicRole);
    badge.title = `${slot.positionLabel}=N${slot.nounIndex}-${slot.postposition}` +
      (slot.selectionRestrictions.length ? ` · ${slot.selectionRestrictions.join(", ")}` : "");
    slots.append(badge);
  }
  card.append(slots);
  if (frame.examples.length) {
    const list = el("ul", "example-list");
    for (const example of frame.examples) {
      list.append(el("li", "example", example.text));
    }
    card.append(list);
  }
  const link = el("a", "projections-link", "View projected argument spans");
  link.href = `#/verbs/${encodeURIComponent(lemma)}/${encodeURIComponent(homographId)}` +
    `/senses/${encodeURIComponent(senseKey)}/frames/${frameIndex}/projections`;
  link.addEventListener("click", (event) => {
    event.preventDefault();
    ctx.state.selectedSense = senseKey;
    ctx.state.selectedFrame = frameIndex;
    ctx.navigate(link.getAttribute("href") ?? "#/");
  });
  card.append(link);
  return card;
}

// ---------------------------------------------------------------------------
// projection view

export async function renderProjectionView(
  container: HTMLElement,
  ctx: ViewContext,
  lemma: string,
  homographId: string,
  senseKey: string,
  frameIndex: number,
): Promise<void> {
  container.replaceChildren(el("p", "loading", "Loading…"));
  let payload: ProjectionPayload[];
  try {
    payload = await ctx.client.projections(lemma, homographId, senseKey, frameIndex);
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    errorBanner(container, error, () =>
      void renderProjectionView(container, ctx, lemma, homographId, senseKey, frameIndex));
    return;
  }
  ctx.state.selectedEntry = { lemma, homographId };
  ctx.state.selectedSense = senseKey;
  ctx.state.selectedFrame = frameIndex;

  container.replaceChildren();
  const heading = el("h1", "projection-heading",
    `${lemma} ${homographId} · sense ${senseKey} · frame ${frameIndex}`);
  container.append(heading);
  if (payload.length === 0) {
    container.append(el("p", "no-examples", "This frame has no example sentences."));
    return;
  }
  payload.forEach((projection, i) => {
    container.append(renderProjection(projection, i));
  });
}

function renderProjection(projection: ProjectionPayload, index: number): HTMLElement {
  const block = el("section", "projection");
  block.append(el("h2", "projection-index", `Example ${index + 1}`));
  const sentence = el("p", "sentence");
  if (projection.spans.length === 0) {
    sentence.textContent = projection.sentence;
    block.append(sentence, el("p", "no-spans", "no spans"));
  } else {
    let cursor = 0;
    for (const span of projection.spans) {
      if (span.start > cursor) {
        sentence.append(
          document.createTextNode(codePointSlice(projection.sentence, cursor, span.start)));
      }
      // the mark's text is exactly the span text; the role label rides
      // alongside as a subscript so extraction stays offset-faithful
      const mark = el("mark", span.label === "TARGET" ? "span target" : "span role");
      mark.textContent = codePointSlice(projection.sentence, span.start, span.end);
      mark.style.backgroundColor = roleColor(span.label);
      mark.dataset.label = span.label;
      mark.dataset.start = String(span.start);
      mark.dataset.end = String(span.end);
      sentence.append(mark, el("sub", "span-label", span.label));
      cursor = span.end;
    }
    const total = Array.from(projection.sentence).length;
    if (cursor < total) {
      sentence.append(
        document.createTextNode(codePointSlice(projection.sentence, cursor, total)));
    }
    block.append(sentence);
  }
  if (projection.unmatchedSlots.length) {
    const unmatched = el("p", "unmatched");
    unmatched.append(el("strong", undefined, "no match: "));
    unmatched.append(document.createTextNode(projection.unmatchedSlots.join(", ")));
    block.append(unmatched);
  }
  if (projection.error) {
    block.append(el("p", "projection-error", projection.error));
  }
  return block;
}
