"""Postposition (josa) table: surface forms, case categories, and the
mapping from frame markers to the categories they accept.

The default table ships as an editable TSV (data/postpositions.tsv) with
one "form<TAB>category" pair per line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

__all__ = ["CATEGORIES", "PostpositionTable", "load_table"]

CATEGORIES = frozenset({"NOM", "ACC", "GEN", "TOP", "LOC", "INS", "COM", "DAT"})


@dataclass(frozen=True)
class PostpositionTable:
    """Surface form -> case category, plus frame marker -> accepted categories.

    By default a frame marker accepts exactly the category of its own form
    (so 을 accepts ACC-terminated chunks, including 를-final ones). The
    ``allow_topic_subjects`` option widens nominative markers to also accept
    topic-marked chunks; the strict default compares marker forms by their
    own category only.
    """

    forms: dict[str, str]
    frame_markers: dict[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        for form, category in self.forms.items():
            if category not in CATEGORIES:
                raise ValueError(f"unknown case category {category!r} for form {form!r}")
        if not self.frame_markers:
            object.__setattr__(self, "frame_markers",
                               {f: frozenset({c}) for f, c in self.forms.items()})

    @property
    def max_form_len(self) -> int:
        return max((len(f) for f in self.forms), default=0)

    def classify(self, eojeol: str) -> tuple[str, str] | None:
        """Longest-suffix match of the eojeol against the table.

        Returns (form, category) or None; longer forms win (에서 over 에).
        """
        for length in range(min(self.max_form_len, len(eojeol)), 0, -1):
            form = eojeol[-length:]
            category = self.forms.get(form)
            if category is not None:
                return form, category
        return None

    def marker_accepts(self, marker: str, category: str) -> bool:
        """Whether a frame marker (e.g. 을) matches a chunk-terminal category."""
        return category in self.frame_markers.get(marker, frozenset())

    def with_topic_subjects(self) -> "PostpositionTable":
        """Variant where nominative frame markers also accept topic chunks."""
        markers = dict(self.frame_markers)
        for form, category in self.forms.items():
            if category == "NOM":
                markers[form] = markers.get(form, frozenset()) | {"TOP"}
        return PostpositionTable(forms=dict(self.forms), frame_markers=markers)


def _parse_pairs(text: str, source: str) -> dict[str, str]:
    forms: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{source}:{lineno}: expected 'form<TAB>category', got {line!r}")
        form, category = parts[0].strip(), parts[1].strip()
        if not form:
            raise ValueError(f"{source}:{lineno}: empty postposition form")
        forms[form] = category
    return forms


def load_table(path: str | Path | None = None,
               allow_topic_subjects: bool = False) -> PostpositionTable:
    """Load a postposition table from a TSV file, or the shipped default."""
    if path is None:
        text = resources.files("framelex").joinpath("data/postpositions.tsv").read_text("utf-8")
        source = "postpositions.tsv"
    else:
        text = Path(path).read_text(encoding="utf-8")
        source = str(path)
    table = PostpositionTable(forms=_parse_pairs(text, source))
    if allow_topic_subjects:
        table = table.with_topic_subjects()
    return table
