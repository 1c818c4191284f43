"""Frame-to-sentence projection: assign a frame's argument slots to chunks
of an example sentence and render the result as standoff annotation.

The predicate anchor (TARGET) is the first eojeol that starts with the
lemma's stem (lemma minus the final 다), so inflected continuations like
확립하려는 match. Slots are then assigned, in frame order, to the leftmost
unconsumed chunk strictly before the target chunk whose terminal
postposition category is accepted by the slot's marker. Unmatched slots
are reported, never guessed; chunks after the predicate are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chunking import DependencyInput, chunk_sentence, eojeol_spans
from .index import FrameLexicon
from .model import TARGET_LABEL, Frame, RoleSpan
from .postpositions import PostpositionTable

__all__ = [
    "CorpusProjection",
    "ProjectedAnnotation",
    "ProjectionError",
    "lemma_stem",
    "parse_standoff",
    "project_corpus",
    "project_frame",
    "render_standoff",
    "standoff_records",
]


class ProjectionError(Exception):
    """The predicate could not be anchored in the sentence."""


@dataclass(frozen=True)
class ProjectedAnnotation:
    """Role-labeled spans over one sentence, sorted by start offset."""

    sentence: str
    spans: tuple[RoleSpan, ...]
    unmatched_slots: tuple[str, ...]  # position labels with no matching chunk


def lemma_stem(lemma: str) -> str:
    """Stem used for predicate anchoring: the lemma minus its final 다."""
    if len(lemma) > 1 and lemma.endswith("다"):
        return lemma[:-1]
    return lemma


def project_frame(frame: Frame, sentence: str, lemma: str,
                  table: PostpositionTable,
                  deps: DependencyInput | None = None) -> ProjectedAnnotation:
    """Project one frame onto one sentence.

    Raises ProjectionError when no eojeol starts with the lemma's stem.
    """
    chunks = chunk_sentence(sentence, table, deps=deps)
    tokens = eojeol_spans(sentence)
    stem = lemma_stem(lemma)

    target_chunk_index = None
    target_span = None
    for ci, chunk in enumerate(chunks):
        for token_index in chunk.eojeols:
            a, b = tokens[token_index]
            if sentence[a:b].startswith(stem):
                target_chunk_index = ci
                target_span = RoleSpan(a, b, TARGET_LABEL)
                break
        if target_span is not None:
            break
    if target_span is None:
        raise ProjectionError(f"target not found: no eojeol starts with {stem!r}")

    candidates = chunks[:target_chunk_index]
    consumed: set[int] = set()
    spans = [target_span]
    unmatched: list[str] = []
    for slot in frame.slots:
        matched = None
        for ci, chunk in enumerate(candidates):
            if ci in consumed or chunk.terminal_postposition is None:
                continue
            _, category = chunk.terminal_postposition
            if table.marker_accepts(slot.postposition, category):
                matched = ci
                break
        if matched is None:
            unmatched.append(slot.position_label)
        else:
            consumed.add(matched)
            chunk = candidates[matched]
            spans.append(RoleSpan(chunk.start, chunk.end, slot.thematic_role))

    spans.sort(key=lambda s: (s.start, s.end))
    return ProjectedAnnotation(sentence=sentence, spans=tuple(spans),
                               unmatched_slots=tuple(unmatched))


# ---------------------------------------------------------------------------
# standoff rendering

_STANDOFF_LINE = re.compile(r"^T(\d+)\t(\S+) (\d+) (\d+)\t(.*)$")


def render_standoff(annotation: ProjectedAnnotation) -> str:
    """Render spans as standoff lines: "T<k>\\t<LABEL> <start> <end>\\t<text>".

    Offsets are code points; ids count from 1 in span order; empty span
    lists render as the empty string.
    """
    lines = []
    for k, span in enumerate(annotation.spans, start=1):
        text = annotation.sentence[span.start:span.end]
        lines.append(f"T{k}\t{span.label} {span.start} {span.end}\t{text}")
    return "".join(line + "\n" for line in lines)


def standoff_records(annotation: ProjectedAnnotation) -> list[dict]:
    """The same fields as render_standoff, as machine-readable records."""
    return [
        {
            "id": f"T{k}",
            "label": span.label,
            "start": span.start,
            "end": span.end,
            "text": annotation.sentence[span.start:span.end],
        }
        for k, span in enumerate(annotation.spans, start=1)
    ]


def parse_standoff(text: str) -> tuple[RoleSpan, ...]:
    """Parse render_standoff output back into spans (ValueError on bad lines)."""
    spans = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        m = _STANDOFF_LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: not a standoff span line: {line!r}")
        spans.append(RoleSpan(int(m.group(3)), int(m.group(4)), m.group(2)))
    return tuple(spans)


# ---------------------------------------------------------------------------
# whole-corpus projection

@dataclass(frozen=True)
class CorpusProjection:
    """Projection outcome for one (entry, sense, frame, example) coordinate."""

    lemma: str
    homograph_id: str
    sense_key: str
    frame_index: int      # index into the sense's flattened frame list
    example_index: int
    annotation: ProjectedAnnotation | None
    error: str | None = None


def project_corpus(lexicon: FrameLexicon,
                   table: PostpositionTable) -> list[CorpusProjection]:
    """Project every example of every frame; one record per (frame, example)
    pair, in deterministic corpus order. Failures are recorded per pair."""
    out: list[CorpusProjection] = []
    for entry in lexicon.all_entries():
        for sense in entry.senses:
            for frame_index, frame in enumerate(sense.frames):
                for example_index, example in enumerate(frame.examples):
                    annotation = None
                    error = None
                    try:
                        annotation = project_frame(frame, example.text,
                                                   entry.orth, table)
                    except (ProjectionError, ValueError) as exc:
                        error = str(exc)
                    out.append(CorpusProjection(
                        lemma=entry.orth,
                        homograph_id=entry.homograph_id,
                        sense_key=sense.key,
                        frame_index=frame_index,
                        example_index=example_index,
                        annotation=annotation,
                        error=error,
                    ))
    return out
