"""Typed object model for verb subcategorization frame dictionary entries.

Everything here is immutable after construction; values compare structurally
and can be shared freely across threads. String offsets throughout the
package are Unicode code-point offsets (Hangul is multi-byte in common
encodings, so byte offsets would not survive re-encoding).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

__all__ = [
    "ArgumentSlot",
    "EntryList",
    "ExampleSentence",
    "Frame",
    "FrameGroup",
    "MorphGroup",
    "MorphVariant",
    "Origin",
    "RoleSpan",
    "Sense",
    "VerbEntry",
    "Violation",
    "argument_of",
    "parse_pattern",
    "validate",
]

TARGET_LABEL = "TARGET"

_SLOT_TOKEN = re.compile(r"^([A-Z])=N(\d+)-(.+)$")


@dataclass(frozen=True)
class MorphVariant:
    """An alternate surface form, e.g. the separable form of a 하다 verb."""

    variant_type: str  # e.g. "spr"
    form: str


@dataclass(frozen=True)
class Origin:
    """Etymological source of the stem, e.g. a Sino-Korean base form."""

    language: str  # e.g. "si"
    form: str      # e.g. "確立_"


@dataclass(frozen=True)
class MorphGroup:
    """Morphological block of an entry: variants, structure, origin, inflection."""

    variants: tuple[MorphVariant, ...] = ()
    structure: str = ""                    # e.g. "N.하"
    origin: Origin | None = None
    inflection_class: str | None = None    # e.g. "regular", "irregular:르"


@dataclass(frozen=True)
class RoleSpan:
    """A labeled span over a sentence, in code-point offsets (end exclusive)."""

    start: int
    end: int
    label: str  # a thematic role, or "TARGET" for the predicate span


@dataclass(frozen=True)
class ExampleSentence:
    """An example sentence; gold_spans is present when the source XML marks
    argument boundaries inline."""

    text: str
    gold_spans: tuple[RoleSpan, ...] | None = None


@dataclass(frozen=True)
class ArgumentSlot:
    """One argument position of a frame: ``Y=N1-을`` with role and restrictions."""

    position_label: str                      # single letter: X, Y, Z, ...
    noun_index: int                          # the N0/N1 numeral, stored verbatim
    postposition: str                        # case-marker form from the frame
    thematic_role: str                       # e.g. "AGT", "THM"
    selection_restrictions: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.position_label}=N{self.noun_index}-{self.postposition}"


@dataclass(frozen=True)
class Frame:
    """An ordered list of argument slots plus example sentences.

    The surface pattern ("X=N0-이 Y=N1-을 V") is derived from the slots, so
    it is reconstructible by construction.
    """

    slots: tuple[ArgumentSlot, ...]
    examples: tuple[ExampleSentence, ...] = ()

    @property
    def pattern(self) -> str:
        return " ".join([str(s) for s in self.slots] + ["V"])

    def argument(self, position_label: str) -> ArgumentSlot:
        """Slot lookup by position label; raises KeyError when absent."""
        for slot in self.slots:
            if slot.position_label == position_label:
                return slot
        raise KeyError(position_label)

    def __getattr__(self, name: str) -> ArgumentSlot:
        # frame.Y style access for single-letter slot labels
        if len(name) == 1 and name.isupper():
            return self.argument(name)
        raise AttributeError(name)


@dataclass(frozen=True)
class FrameGroup:
    """A labeled grouping of frames under one sense."""

    label: str
    frames: tuple[Frame, ...]


@dataclass(frozen=True)
class Sense:
    """One meaning of a verb: semantic class, translation, frame groups."""

    key: str                               # senseKey as written in the source ("1", "2", ...)
    sem_class: str                         # open vocabulary, e.g. "행위"
    trans: str                             # English translation
    frame_groups: tuple[FrameGroup, ...]
    subsense: str | None = None            # raw subsense label, if any

    @property
    def category(self) -> str:
        """Semantic class; alias matching the query-API naming."""
        return self.sem_class

    @property
    def frames(self) -> tuple[Frame, ...]:
        """All frames, flattened across frame groups, order preserved."""
        return tuple(f for g in self.frame_groups for f in g.frames)


@dataclass(frozen=True)
class VerbEntry:
    """One dictionary headword with its keyed senses.

    ``senses`` is an ordered mapping in spirit: iteration order follows the
    source document and ``entry[senseKey]`` retrieves by key.
    """

    orth: str                 # headword (Hangul)
    pos: str                  # part-of-speech tag, e.g. "vv"
    homograph_id: str         # "<pos>.<index>", e.g. "vv.3"
    morph: MorphGroup = field(default_factory=MorphGroup)
    senses: tuple[Sense, ...] = ()

    @property
    def sense_keys(self) -> tuple[str, ...]:
        return tuple(s.key for s in self.senses)

    def sense(self, key: str) -> Sense:
        for s in self.senses:
            if s.key == key:
                return s
        raise KeyError(key)

    def __getitem__(self, key: str) -> Sense:
        return self.sense(key)


class EntryList(list):
    """Query result: a list of entries that also supports keyed access by
    homograph id, so ``entries("수정하다.vv")["vv.3"]["1"]`` reaches a sense."""

    def __getitem__(self, key):
        if isinstance(key, str):
            for entry in self:
                if entry.homograph_id == key:
                    return entry
            raise KeyError(key)
        return super().__getitem__(key)

    def __repr__(self) -> str:
        inner = ", ".join(f"{e.orth}.{e.homograph_id}" for e in self)
        return f"<{len(self)} entries: [{inner}]>"


def argument_of(frame: Frame, position_label: str) -> ArgumentSlot:
    """Return the slot with the given position label (KeyError when absent)."""
    return frame.argument(position_label)


def parse_pattern(pattern: str) -> tuple[tuple[str, int, str], ...]:
    """Parse a frame pattern string into (label, noun index, postposition)
    triples.

    The pattern is space-separated slot tokens followed by the terminal
    predicate marker "V". Raises ValueError on malformed patterns.
    """
    tokens = pattern.split()
    if not tokens or tokens[-1] != "V":
        raise ValueError(f"pattern must end with terminal predicate marker V: {pattern!r}")
    triples = []
    for token in tokens[:-1]:
        m = _SLOT_TOKEN.match(token)
        if not m:
            raise ValueError(f"malformed slot token {token!r} in pattern {pattern!r}")
        triples.append((m.group(1), int(m.group(2)), m.group(3)))
    return tuple(triples)


@dataclass(frozen=True)
class Violation:
    """A broken invariant: which type and field, and the rule violated."""

    type_name: str
    field_name: str
    rule: str

    def __str__(self) -> str:
        return f"{self.type_name}.{self.field_name}: {self.rule}"


def validate(entry: VerbEntry, known_postpositions: frozenset[str] | None = None) -> list[Violation]:
    """Check every model invariant of one entry; violations are data, not errors.

    ``known_postpositions`` optionally checks slot markers against the
    configured postposition table (a cross-module invariant).
    """
    out: list[Violation] = []

    if not entry.orth:
        out.append(Violation("VerbEntry", "orth", "must be non-empty"))
    if not entry.senses:
        out.append(Violation("VerbEntry", "senses", "must be non-empty"))
    keys = [s.key for s in entry.senses]
    if len(keys) != len(set(keys)):
        out.append(Violation("VerbEntry", "senses", "sense keys must be unique"))

    for variant in entry.morph.variants:
        if not variant.form:
            out.append(Violation("MorphGroup", "variants", "variant form must be non-empty"))

    for sense in entry.senses:
        if not sense.frame_groups:
            out.append(Violation("Sense", "frame_groups", f"sense {sense.key!r} has no frame groups"))
        seen_frames: dict[int, str] = {}
        for group in sense.frame_groups:
            if not group.frames:
                out.append(Violation("FrameGroup", "frames", f"group {group.label!r} has no frames"))
            for frame in group.frames:
                if id(frame) in seen_frames:
                    out.append(Violation(
                        "Sense", "frame_groups",
                        f"frame shared between groups {seen_frames[id(frame)]!r} and {group.label!r}"))
                seen_frames[id(frame)] = group.label
                out.extend(_validate_frame(frame, known_postpositions))
    return out


def _validate_frame(frame: Frame, known_postpositions: frozenset[str] | None) -> list[Violation]:
    out: list[Violation] = []
    labels = [s.position_label for s in frame.slots]
    if len(labels) != len(set(labels)):
        out.append(Violation("Frame", "slots", "position labels must be unique within a frame"))
    for slot in frame.slots:
        if not slot.thematic_role:
            out.append(Violation("ArgumentSlot", "thematic_role",
                                 f"slot {slot.position_label!r} has empty thematic role"))
        if known_postpositions is not None and slot.postposition not in known_postpositions:
            out.append(Violation("ArgumentSlot", "postposition",
                                 f"{slot.postposition!r} not in the configured postposition table"))
    for example in frame.examples:
        out.extend(_validate_example(example))
    return out


def _validate_example(example: ExampleSentence) -> list[Violation]:
    out: list[Violation] = []
    if example.gold_spans is None:
        return out
    n = len(example.text)
    spans = sorted(example.gold_spans, key=lambda s: (s.start, s.end))
    for span in spans:
        if not (0 <= span.start < span.end <= n):
            out.append(Violation("RoleSpan", "start",
                                 f"span [{span.start},{span.end}) out of bounds for text of length {n}"))
    for left, right in zip(spans, spans[1:]):
        if right.start < left.end:
            out.append(Violation("ExampleSentence", "gold_spans",
                                 f"spans overlap at offset {right.start}"))
    targets = [s for s in spans if s.label == TARGET_LABEL]
    if len(targets) != 1:
        out.append(Violation("ExampleSentence", "gold_spans",
                             f"expected exactly one TARGET span, found {len(targets)}"))
    return out
