"""Immutable multi-key indices over a parsed corpus, with eager and lazy
loading strategies that answer every query identically.

Lazy loading defers all file access and index construction until the first
query; the build is synchronized and runs at most once per handle, so
concurrent first queries are safe. After the build the index never changes
and can be read from any number of threads.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from enum import Enum
from fractions import Fraction
from pathlib import Path

from .model import EntryList, Sense, VerbEntry
from .xml_ingest import IngestError, ParseReport, ingest_directory

__all__ = ["FrameLexicon", "LoadMode", "Stats", "load", "sense_at"]

SenseRef = tuple[str, str, str]  # (lemma, homograph id, sense key)


class LoadMode(Enum):
    EAGER = "eager"
    LAZY = "lazy"


@dataclass(frozen=True)
class Stats:
    """Corpus size: entry count and frames-per-entry average (kept exact)."""

    verb_count: int
    total_frames: int

    @property
    def avg_frames_per_verb(self) -> Fraction:
        if self.verb_count == 0:
            return Fraction(0)
        return Fraction(self.total_frames, self.verb_count)

    def formatted_avg(self) -> str:
        """The exact average reported to 3 decimals."""
        avg = self.avg_frames_per_verb
        value = Decimal(avg.numerator) / Decimal(avg.denominator)
        return str(value.quantize(Decimal("0.001"), rounding=ROUND_HALF_EVEN))


class _Index:
    """The built, immutable lookup structure."""

    def __init__(self, reports: list[ParseReport]):
        self.reports = tuple(reports)
        entries = sorted((r.entry for r in reports if r.entry is not None),
                         key=lambda e: (e.orth, e.homograph_id))
        seen: set[tuple[str, str]] = set()
        for entry in entries:
            key = (entry.orth, entry.homograph_id)
            if key in seen:
                raise IngestError(
                    f"duplicate homograph id {entry.homograph_id!r} for {entry.orth!r}")
            seen.add(key)
        self.entries = tuple(entries)

        self.by_lemma: dict[str, list[VerbEntry]] = {}
        self.by_lemma_pos: dict[str, list[VerbEntry]] = {}
        self.by_frame_pattern: dict[str, set[SenseRef]] = {}
        self.by_role: dict[str, set[SenseRef]] = {}
        self.by_sem_class: dict[str, set[tuple[str, str]]] = {}
        self.by_inflection: dict[str, set[tuple[str, str]]] = {}
        self.entry_by_ref: dict[tuple[str, str], VerbEntry] = {}

        for entry in self.entries:
            ref = (entry.orth, entry.homograph_id)
            self.entry_by_ref[ref] = entry
            self.by_lemma.setdefault(entry.orth, []).append(entry)
            self.by_lemma_pos.setdefault(f"{entry.orth}.{entry.pos}", []).append(entry)
            if entry.morph.inflection_class:
                self.by_inflection.setdefault(entry.morph.inflection_class, set()).add(ref)
            for sense in entry.senses:
                sense_ref = (entry.orth, entry.homograph_id, sense.key)
                if sense.sem_class:
                    self.by_sem_class.setdefault(sense.sem_class, set()).add(ref)
                for frame in sense.frames:
                    self.by_frame_pattern.setdefault(frame.pattern, set()).add(sense_ref)
                    for slot in frame.slots:
                        self.by_role.setdefault(slot.thematic_role, set()).add(sense_ref)


class FrameLexicon:
    """Queryable handle over a corpus directory of entry files."""

    def __init__(self, source: str | Path, glob_pattern: str = "*.xml",
                 mode: LoadMode = LoadMode.EAGER):
        self.source = Path(source)
        self.glob_pattern = glob_pattern
        self.mode = mode
        self._lock = threading.Lock()
        self._index: _Index | None = None
        if mode is LoadMode.EAGER:
            self._ensure()

    @classmethod
    def load(cls, source: str | Path, glob_pattern: str = "*.xml",
             mode: LoadMode = LoadMode.EAGER) -> "FrameLexicon":
        return cls(source, glob_pattern, mode)

    def _ensure(self) -> _Index:
        index = self._index
        if index is not None:
            return index
        with self._lock:
            if self._index is None:
                self._index = _Index(ingest_directory(self.source, self.glob_pattern))
            return self._index

    @property
    def loaded(self) -> bool:
        return self._index is not None

    @property
    def reports(self) -> tuple[ParseReport, ...]:
        return self._ensure().reports

    def all_entries(self) -> tuple[VerbEntry, ...]:
        """Every entry, sorted by (lemma, homograph id)."""
        return self._ensure().entries

    # -- queries ------------------------------------------------------------

    def entries(self, query: str) -> EntryList:
        """Entries for "lemma" (all homographs) or "lemma.pos" (filtered).

        An unknown lemma yields an empty list, never an error; ordering is
        by homograph id.
        """
        index = self._ensure()
        if "." in query:
            found = index.by_lemma_pos.get(query, [])
        else:
            found = index.by_lemma.get(query, [])
        return EntryList(found)

    def search_by_frame(self, pattern: str) -> list[SenseRef]:
        """Senses whose frames match the canonicalized pattern string."""
        canonical = " ".join(pattern.split())
        index = self._ensure()
        return sorted(index.by_frame_pattern.get(canonical, set()))

    def search_by_role(self, role: str) -> list[SenseRef]:
        index = self._ensure()
        return sorted(index.by_role.get(role, set()))

    def search_by_sem_class(self, sem_class: str) -> EntryList:
        index = self._ensure()
        refs = sorted(index.by_sem_class.get(sem_class, set()))
        return EntryList(index.entry_by_ref[ref] for ref in refs)

    def search_by_inflection(self, inflection_class: str) -> EntryList:
        index = self._ensure()
        refs = sorted(index.by_inflection.get(inflection_class, set()))
        return EntryList(index.entry_by_ref[ref] for ref in refs)

    def stats(self) -> Stats:
        index = self._ensure()
        total = sum(len(sense.frames) for entry in index.entries
                    for sense in entry.senses)
        return Stats(verb_count=len(index.entries), total_frames=total)


def load(source: str | Path, glob_pattern: str = "*.xml",
         mode: LoadMode = LoadMode.EAGER) -> FrameLexicon:
    """Load a corpus directory into a queryable handle."""
    return FrameLexicon(source, glob_pattern, mode)


def sense_at(entries: VerbEntry | list, homograph_key: str, sense_key: str) -> Sense:
    """Keyed sense access: result[homographKey][senseKey].

    Raises KeyError naming the missing key, distinguishing malformed keyed
    access from the empty-list result of an unknown lemma.
    """
    if isinstance(entries, VerbEntry):
        if entries.homograph_id != homograph_key:
            raise KeyError(homograph_key)
        return entries[sense_key]
    for entry in entries:
        if entry.homograph_id == homograph_key:
            return entry[sense_key]
    raise KeyError(homograph_key)
