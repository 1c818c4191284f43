"""Parsing and serialization of frame-dictionary XML entry files.

One verb entry per file; the complete element/attribute contract lives in
docs/schema.md. Parsing never raises on bad input: every failure surfaces
as a diagnostic on the returned report, and an entry is attached iff no
error-severity diagnostic was produced.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .model import (
    TARGET_LABEL,
    ArgumentSlot,
    ExampleSentence,
    Frame,
    FrameGroup,
    MorphGroup,
    MorphVariant,
    Origin,
    RoleSpan,
    Sense,
    VerbEntry,
    parse_pattern,
    validate,
)

__all__ = [
    "Diagnostic",
    "IngestError",
    "InvalidEntryError",
    "ParseReport",
    "ingest_directory",
    "parse_entry",
    "serialize_entry",
]


class IngestError(Exception):
    """Operation-level ingestion failure (unreadable directory, bad glob)."""


class InvalidEntryError(ValueError):
    """Raised when asked to serialize an entry that breaks a model invariant."""


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "warn" | "error"
    message: str
    xml_path: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message} (at {self.xml_path})"


@dataclass(frozen=True)
class ParseReport:
    file_path: str
    entry: VerbEntry | None
    diagnostics: tuple[Diagnostic, ...]

    @property
    def errors(self) -> tuple[Diagnostic, ...]:
        return tuple(d for d in self.diagnostics if d.severity == "error")

    @property
    def warnings(self) -> tuple[Diagnostic, ...]:
        return tuple(d for d in self.diagnostics if d.severity == "warn")

    @property
    def ok(self) -> bool:
        return self.entry is not None


class _Collector:
    def __init__(self):
        self.diagnostics: list[Diagnostic] = []

    def warn(self, message: str, path: str) -> None:
        self.diagnostics.append(Diagnostic("warn", message, path))

    def error(self, message: str, path: str) -> None:
        self.diagnostics.append(Diagnostic("error", message, path))

    @property
    def failed(self) -> bool:
        return any(d.severity == "error" for d in self.diagnostics)


def parse_entry(xml_text: str | bytes, file_path: str = "<string>") -> ParseReport:
    """Parse one entry document into the typed model.

    Unknown elements produce warnings and are skipped; structural problems
    (missing orth, malformed XML, malformed frame patterns) produce error
    diagnostics and no entry.
    """
    col = _Collector()

    if isinstance(xml_text, bytes):
        try:
            xml_text = xml_text.decode("utf-8")
        except UnicodeDecodeError as exc:
            col.error(f"not valid UTF-8: {exc}", "/")
            return ParseReport(file_path, None, tuple(col.diagnostics))
    xml_text = xml_text.lstrip("﻿")

    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        col.error(f"malformed XML: {exc}", "/")
        return ParseReport(file_path, None, tuple(col.diagnostics))

    entry = _read_entry(root, col)
    if entry is not None:
        for violation in validate(entry):
            col.error(f"invariant violated: {violation}", "/entry")
    if col.failed:
        entry = None
    return ParseReport(file_path, entry, tuple(col.diagnostics))


def _read_entry(root: ET.Element, col: _Collector) -> VerbEntry | None:
    path = "/entry"
    if root.tag != "entry":
        col.error(f"root element must be <entry>, found <{root.tag}>", "/")
        return None

    pos = root.get("pos")
    homograph = root.get("homograph")
    if not pos:
        col.error("missing required attribute 'pos' on <entry>", path)
    if not homograph:
        col.error("missing required attribute 'homograph' on <entry>", path)
    elif pos and not homograph.startswith(pos + "."):
        col.warn(f"homograph {homograph!r} does not start with {pos + '.'!r}", path)

    orth = ""
    morph = MorphGroup()
    senses: list[Sense] = []
    counts: dict[str, int] = {}
    for child in root:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        cpath = f"{path}/{child.tag}[{idx}]"
        if child.tag == "orth":
            orth = (child.text or "").strip()
        elif child.tag == "morph_grp":
            morph = _read_morph(child, cpath, col)
        elif child.tag == "sense":
            sense = _read_sense(child, cpath, col)
            if sense is not None:
                senses.append(sense)
        else:
            col.warn(f"unknown element <{child.tag}> skipped", cpath)

    if not orth:
        col.error("missing <orth>", path)
    if col.failed:
        return None
    return VerbEntry(orth=orth, pos=pos, homograph_id=homograph,
                     morph=morph, senses=tuple(senses))


def _read_morph(el: ET.Element, path: str, col: _Collector) -> MorphGroup:
    variants: list[MorphVariant] = []
    structure = ""
    origin = None
    counts: dict[str, int] = {}
    for child in el:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        cpath = f"{path}/{child.tag}[{idx}]"
        text = (child.text or "").strip()
        if child.tag == "var":
            variants.append(MorphVariant(child.get("type", ""), text))
        elif child.tag == "str":
            structure = text
        elif child.tag == "org":
            origin = Origin(child.get("lg", ""), text)
        else:
            col.warn(f"unknown element <{child.tag}> skipped", cpath)
    return MorphGroup(variants=tuple(variants), structure=structure,
                      origin=origin, inflection_class=el.get("type"))


def _read_sense(el: ET.Element, path: str, col: _Collector) -> Sense | None:
    key = el.get("n")
    if not key:
        col.error("missing required attribute 'n' on <sense>", path)
        return None
    sem_class = ""
    trans = ""
    subsense = None
    groups: list[FrameGroup] = []
    counts: dict[str, int] = {}
    for child in el:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        cpath = f"{path}/{child.tag}[{idx}]"
        if child.tag == "sem_class":
            sem_class = (child.text or "").strip()
        elif child.tag == "trans":
            trans = (child.text or "").strip()
        elif child.tag == "subsense":
            subsense = (child.text or "").strip()
        elif child.tag == "frame_grp":
            group = _read_frame_group(child, cpath, col)
            if group is not None:
                groups.append(group)
        else:
            col.warn(f"unknown element <{child.tag}> skipped", cpath)
    return Sense(key=key, sem_class=sem_class, trans=trans,
                 frame_groups=tuple(groups), subsense=subsense)


def _read_frame_group(el: ET.Element, path: str, col: _Collector) -> FrameGroup | None:
    frames: list[Frame] = []
    counts: dict[str, int] = {}
    for child in el:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        cpath = f"{path}/{child.tag}[{idx}]"
        if child.tag == "frame":
            frame = _read_frame(child, cpath, col)
            if frame is not None:
                frames.append(frame)
        else:
            col.warn(f"unknown element <{child.tag}> skipped", cpath)
    return FrameGroup(label=el.get("type", ""), frames=tuple(frames))


def _read_frame(el: ET.Element, path: str, col: _Collector) -> Frame | None:
    pattern_text = (el.text or "").strip()
    if not pattern_text:
        col.error("frame has no pattern text", path)
        return None
    try:
        triples = parse_pattern(pattern_text)
    except ValueError as exc:
        col.error(str(exc), path)
        return None

    roles: dict[str, str] = {}
    restrictions: dict[str, list[str]] = {}
    examples: list[ExampleSentence] = []
    slot_labels = [label for label, _, _ in triples]

    # resolve all <sel_rst> roles first: <eg> gold markup references them
    # and must not depend on document order
    counts: dict[str, int] = {}
    for child in el:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        cpath = f"{path}/{child.tag}[{idx}]"
        if child.tag != "sel_rst":
            if child.tag != "eg":
                col.warn(f"unknown element <{child.tag}> skipped", cpath)
            continue
        arg = child.get("arg")
        tht = child.get("tht", "")
        if not arg:
            col.warn("<sel_rst> without 'arg' attribute skipped", cpath)
            continue
        if arg not in slot_labels:
            col.warn(f"<sel_rst> for unknown slot {arg!r} skipped", cpath)
            continue
        if arg in roles and tht and roles[arg] != tht:
            col.warn(f"conflicting role for slot {arg!r}: "
                     f"{roles[arg]!r} vs {tht!r}, keeping the first", cpath)
        elif tht:
            roles[arg] = tht
        text = (child.text or "").strip()
        if text:
            restrictions.setdefault(arg, []).extend(
                part.strip() for part in text.split(",") if part.strip())

    counts.clear()
    for child in el:
        idx = counts[child.tag] = counts.get(child.tag, 0) + 1
        if child.tag == "eg":
            example = _read_example(child, f"{path}/eg[{idx}]", roles, col)
            if example is not None:
                examples.append(example)

    slots = []
    for label, noun_index, postposition in triples:
        if label not in roles:
            col.error(f"slot {label!r} has no <sel_rst> with a thematic role", path)
            return None
        slots.append(ArgumentSlot(
            position_label=label,
            noun_index=noun_index,
            postposition=postposition,
            thematic_role=roles[label],
            selection_restrictions=tuple(restrictions.get(label, ())),
        ))
    return Frame(slots=tuple(slots), examples=tuple(examples))


def _read_example(el: ET.Element, path: str, roles: dict[str, str],
                  col: _Collector) -> ExampleSentence | None:
    # <eg> mixed content: plain sentence text with optional inline
    # <arg n="X">span</arg> markup for gold argument boundaries.
    parts: list[str] = [el.text or ""]
    spans: list[tuple[int, int, str]] = []
    length = len(parts[0])
    has_markup = False
    for child in el:
        if child.tag != "arg":
            col.warn(f"unknown element <{child.tag}> inside <eg> skipped", path)
            parts.append(child.tail or "")
            length += len(child.tail or "")
            continue
        has_markup = True
        n = child.get("n", "")
        span_text = child.text or ""
        if n == TARGET_LABEL:
            label = TARGET_LABEL
        elif n in roles:
            label = roles[n]
        else:
            label = None
            col.warn(f"<arg n={n!r}> does not name a slot or TARGET; span dropped", path)
        if label is not None:
            spans.append((length, length + len(span_text), label))
        parts.append(span_text)
        length += len(span_text)
        parts.append(child.tail or "")
        length += len(child.tail or "")

    raw = "".join(parts)
    text = raw.strip()
    if not text:
        col.warn("empty <eg> skipped", path)
        return None
    lead = len(raw) - len(raw.lstrip())
    gold = None
    if has_markup:
        shifted = []
        for start, end, label in spans:
            start, end = start - lead, end - lead
            if not (0 <= start < end <= len(text)):
                col.warn(f"gold span [{start},{end}) outside stripped text; dropped", path)
                continue
            shifted.append(RoleSpan(start, end, label))
        # markup that yielded nothing usable degrades to an unannotated example
        gold = tuple(shifted) if shifted else None
    return ExampleSentence(text=text, gold_spans=gold)


# ---------------------------------------------------------------------------
# serialization

def serialize_entry(entry: VerbEntry) -> str:
    """Render an entry to canonical XML; output re-parses to an equal entry.

    Element order is canonical (orth, morph_grp, senses in key order as
    stored) and the output is deterministic byte-for-byte.
    """
    violations = validate(entry)
    if violations:
        raise InvalidEntryError(f"cannot serialize invalid entry: {violations[0]}")

    w = _Writer()
    w.line(f"<entry pos={quoteattr(entry.pos)} homograph={quoteattr(entry.homograph_id)}>")
    w.indent += 1
    w.line(f"<orth>{escape(entry.orth)}</orth>")
    _write_morph(w, entry.morph)
    for sense in entry.senses:
        _write_sense(w, sense)
    w.indent -= 1
    w.line("</entry>")
    return w.text()


class _Writer:
    def __init__(self):
        self.lines: list[str] = []
        self.indent = 0

    def line(self, text: str) -> None:
        self.lines.append("  " * self.indent + text)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _write_morph(w: _Writer, morph: MorphGroup) -> None:
    if not (morph.variants or morph.structure or morph.origin or morph.inflection_class):
        return
    attr = f" type={quoteattr(morph.inflection_class)}" if morph.inflection_class else ""
    w.line(f"<morph_grp{attr}>")
    w.indent += 1
    for variant in morph.variants:
        w.line(f"<var type={quoteattr(variant.variant_type)}>{escape(variant.form)}</var>")
    if morph.structure:
        w.line(f"<str>{escape(morph.structure)}</str>")
    if morph.origin is not None:
        w.line(f"<org lg={quoteattr(morph.origin.language)}>{escape(morph.origin.form)}</org>")
    w.indent -= 1
    w.line("</morph_grp>")


def _write_sense(w: _Writer, sense: Sense) -> None:
    w.line(f"<sense n={quoteattr(sense.key)}>")
    w.indent += 1
    if sense.sem_class:
        w.line(f"<sem_class>{escape(sense.sem_class)}</sem_class>")
    if sense.trans:
        w.line(f"<trans>{escape(sense.trans)}</trans>")
    if sense.subsense is not None:
        w.line(f"<subsense>{escape(sense.subsense)}</subsense>")
    for group in sense.frame_groups:
        w.line(f"<frame_grp type={quoteattr(group.label)}>")
        w.indent += 1
        for frame in group.frames:
            _write_frame(w, frame)
        w.indent -= 1
        w.line("</frame_grp>")
    w.indent -= 1
    w.line("</sense>")


def _write_frame(w: _Writer, frame: Frame) -> None:
    w.line(f"<frame>{escape(frame.pattern)}")
    w.indent += 1
    for slot in frame.slots:
        rst = escape(", ".join(slot.selection_restrictions))
        w.line(f"<sel_rst arg={quoteattr(slot.position_label)} "
               f"tht={quoteattr(slot.thematic_role)}>{rst}</sel_rst>")
    role_to_label = {s.thematic_role: s.position_label for s in reversed(frame.slots)}
    for example in frame.examples:
        w.line(f"<eg>{_render_example(example, role_to_label)}</eg>")
    w.indent -= 1
    w.line("</frame>")


def _render_example(example: ExampleSentence, role_to_label: dict[str, str]) -> str:
    if example.gold_spans is None:
        return escape(example.text)
    parts = []
    cursor = 0
    for span in sorted(example.gold_spans, key=lambda s: s.start):
        n = TARGET_LABEL if span.label == TARGET_LABEL else role_to_label.get(span.label, span.label)
        parts.append(escape(example.text[cursor:span.start]))
        parts.append(f"<arg n={quoteattr(n)}>{escape(example.text[span.start:span.end])}</arg>")
        cursor = span.end
    parts.append(escape(example.text[cursor:]))
    return "".join(parts)


# ---------------------------------------------------------------------------
# directory ingestion

def _read_text(path: Path) -> str:
    # single choke point for file reads; tests instrument this to verify
    # that lazy loading touches no entry file
    return path.read_text(encoding="utf-8")


def ingest_directory(path: str | Path, glob_pattern: str = "*.xml") -> list[ParseReport]:
    """Parse every file matching the glob; one report per file, ordered by
    file name (code-point order). A broken file never affects its siblings."""
    root = Path(path)
    if not root.exists():
        raise IngestError(f"directory does not exist: {root}")
    if not root.is_dir():
        raise IngestError(f"not a directory: {root}")
    try:
        matched = sorted({p for p in root.glob(glob_pattern) if p.is_file()},
                         key=lambda p: p.name)
    except OSError as exc:
        raise IngestError(f"cannot read directory {root}: {exc}") from exc

    reports = []
    for file in matched:
        try:
            text = _read_text(file)
        except (OSError, UnicodeDecodeError) as exc:
            reports.append(ParseReport(
                str(file), None,
                (Diagnostic("error", f"cannot read file: {exc}", "/"),)))
            continue
        reports.append(parse_entry(text, file_path=str(file)))
    return reports
