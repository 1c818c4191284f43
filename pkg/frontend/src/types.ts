/** Payload shapes of the lexicon JSON API (see docs/api.md). */

export type Facet = "lemma" | "frame" | "role" | "semclass" | "inflection";

export interface SearchRecord {
  lemma: string;
  homographId: string;
  senseKeys: string[];
  semClass: string[];
}

export interface SearchResponse {
  total: number;
  offset: number;
  limit: number;
  results: SearchRecord[];
}

export interface MorphVariant {
  type: string;
  form: string;
}

export interface MorphPayload {
  variants: MorphVariant[];
  structure: string;
  origin: { language: string; form: string } | null;
  inflectionClass: string | null;
}

export interface SlotPayload {
  positionLabel: string;
  nounIndex: number;
  postposition: string;
  thematicRole: string;
  selectionRestrictions: string[];
}

export interface GoldSpan {
  start: number;
  end: number;
  label: string;
}

export interface ExamplePayload {
  text: string;
  goldSpans: GoldSpan[] | null;
}

export interface FramePayload {
  pattern: string;
  slots: SlotPayload[];
  examples: ExamplePayload[];
}

export interface FrameGroupPayload {
  label: string;
  frames: FramePayload[];
}

export interface SensePayload {
  key: string;
  semClass: string;
  trans: string;
  subsense: string | null;
  frameGroups: FrameGroupPayload[];
}

export interface EntryPayload {
  orth: string;
  pos: string;
  homographId: string;
  morph: MorphPayload;
  senses: SensePayload[];
}

export interface ProjectionSpan {
  start: number;
  end: number;
  label: string;
  text: string;
}

export interface ProjectionPayload {
  sentence: string;
  spans: ProjectionSpan[];
  unmatchedSlots: string[];
  error: string | null;
}

export interface StatsPayload {
  verbCount: number;
  avgFramesPerVerb: number;
}

/** Client view state; selectedEntry always comes from the last result page
 * or a direct-link load. */
export interface ViewState {
  activeQuery: { text: string; facet: Facet };
  resultPage: SearchResponse | null;
  selectedEntry: { lemma: string; homographId: string } | null;
  selectedSense: string | null;
  selectedFrame: number | null;
}

export function initialState(): ViewState {
  return {
    activeQuery: { text: "", facet: "lemma" },
    resultPage: null,
    selectedEntry: null,
    selectedSense: null,
    selectedFrame: null,
  };
}
