"""Postposition-driven sentence chunking, with optional dependency refinement.

Baseline heuristic: split a sentence into whitespace eojeols; an eojeol
ending in a table postposition closes the current chunk; an eojeol ending
in the genitive 의 or an adnominal 은/는 joins the following chunk instead
(the merge wins over topic-marker termination — deliberately
over-approximate). Contracted adnominal finals (ㄴ/ㄹ inside the last
syllable, as in 갈/간) never match a table form, so they extend the current
chunk without special casing. Eojeols left over at the end form the final
chunk.

The segmentation inner loop is the package's hot kernel: a compiled
extension (framelex._chunker_cy) is selected at import when available,
otherwise the pure-Python twin. benchmarks/bench_chunker.py compares both.

Dependency refinement merges a chunk into its neighbour when the boundary
eojeol attaches into that neighbour with a modifier-flavored relation. It
only ever joins whole adjacent chunks, never splits one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .postpositions import PostpositionTable

try:
    from . import _chunker_cy as _kernel  # type: ignore[attr-defined]
except ImportError:  # extension not built; pure-Python fallback
    from . import _chunker_py as _kernel  # type: ignore[no-redef]

from . import _chunker_py

CHUNKER_BACKEND: str = _kernel.BACKEND

# suffixes that force the eojeol to join the following chunk: genitive plus
# the full-syllable adnominal/topic pair (many 사람들이 -> one chunk)
MERGE_SUFFIXES: tuple[str, ...] = ("의", "은", "는")

# relation labels treated as modifier attachment during refinement
MODIFIER_HINTS: tuple[str, ...] = ("mod", "acl", "det", "adn")

__all__ = [
    "CHUNKER_BACKEND",
    "MERGE_SUFFIXES",
    "Chunk",
    "DependencyInput",
    "DependencyMismatchError",
    "available_backends",
    "chunk_sentence",
    "parse_dependency_file",
]


class DependencyMismatchError(ValueError):
    """Dependency tokens do not line up with the sentence's eojeols."""


@dataclass(frozen=True)
class Chunk:
    """A contiguous span of eojeols, with the postposition that closed it."""

    start: int                                   # code-point offset, inclusive
    end: int                                     # code-point offset, exclusive
    eojeols: tuple[int, ...]                     # token indices
    terminal_postposition: tuple[str, str] | None  # (form, category)

    def text(self, sentence: str) -> str:
        return sentence[self.start:self.end]


@dataclass(frozen=True)
class DependencyInput:
    """One dependency tree over the sentence's eojeols.

    heads are 1-based token indices with 0 for the root; the head graph
    must be a tree with exactly one root.
    """

    tokens: tuple[str, ...]
    heads: tuple[int, ...]
    relations: tuple[str, ...]

    def __post_init__(self):
        n = len(self.tokens)
        if len(self.heads) != n or len(self.relations) != n:
            raise ValueError("tokens, heads and relations must have equal length")
        if sum(1 for h in self.heads if h == 0) != 1:
            raise ValueError("dependency tree must have exactly one root")
        for i, h in enumerate(self.heads):
            if not (0 <= h <= n):
                raise ValueError(f"head index {h} out of range at token {i}")
            if h == i + 1:
                raise ValueError(f"token {i} is its own head")
        # reject cycles: every token must reach the root
        for i in range(n):
            seen = set()
            node = i + 1
            while node != 0:
                if node in seen:
                    raise ValueError(f"dependency cycle through token {node - 1}")
                seen.add(node)
                node = self.heads[node - 1]


def eojeol_spans(sentence: str) -> list[tuple[int, int]]:
    """(start, end) code-point spans of the whitespace-delimited eojeols."""
    spans = []
    n = len(sentence)
    i = 0
    while i < n:
        if sentence[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not sentence[j].isspace():
            j += 1
        spans.append((i, j))
        i = j
    return spans


def available_backends() -> dict[str, object]:
    """Importable segmentation kernels, keyed by backend name."""
    backends: dict[str, object] = {_chunker_py.BACKEND: _chunker_py}
    try:
        from . import _chunker_cy
        backends[_chunker_cy.BACKEND] = _chunker_cy
    except ImportError:
        pass
    return backends


def chunk_sentence(sentence: str, table: PostpositionTable,
                   deps: DependencyInput | None = None,
                   merge_suffixes: tuple[str, ...] = MERGE_SUFFIXES,
                   _kernel_module=None) -> list[Chunk]:
    """Chunk a sentence; chunks partition its non-space code points in order.

    With ``deps`` present, adjacent chunks are additionally merged along
    modifier attachments. Raises ValueError on an empty sentence and
    DependencyMismatchError when deps tokenize differently.
    """
    kernel = _kernel_module or _kernel
    if not sentence or sentence.isspace():
        raise ValueError("sentence must be non-empty")
    tokens, raw_chunks = kernel.segment(sentence, table.forms,
                                        table.max_form_len, merge_suffixes)

    if deps is not None:
        texts = [sentence[a:b] for a, b in tokens]
        if len(deps.tokens) != len(texts):
            raise DependencyMismatchError(
                f"dependency input has {len(deps.tokens)} tokens, sentence has {len(texts)}")
        for i, (ours, theirs) in enumerate(zip(texts, deps.tokens)):
            if ours != theirs:
                raise DependencyMismatchError(
                    f"token {i} differs: sentence has {ours!r}, dependency input has {theirs!r}")
        raw_chunks = _refine(raw_chunks, deps)

    out = []
    for first, last, form in raw_chunks:
        terminal = (form, table.forms[form]) if form is not None else None
        out.append(Chunk(start=tokens[first][0], end=tokens[last][1],
                         eojeols=tuple(range(first, last + 1)),
                         terminal_postposition=terminal))
    return out


def _is_modifier(relation: str) -> bool:
    lowered = relation.lower()
    return any(hint in lowered for hint in MODIFIER_HINTS)


def _refine(chunks: list, deps: DependencyInput) -> list:
    """Merge whole adjacent chunks along modifier attachments, to fixpoint.

    A chunk absorbs its neighbour when the eojeol at the shared boundary
    has its head inside the chunk and a modifier relation; the surviving
    terminal postposition is always the right-hand chunk's.
    """
    merged = list(chunks)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(merged):
            lf, ll, _lterm = merged[i]
            rf, rl, rterm = merged[i + 1]
            left_head = deps.heads[ll]     # left chunk's last eojeol
            right_head = deps.heads[rf]    # right chunk's first eojeol
            if (left_head != 0 and rf <= left_head - 1 <= rl
                    and _is_modifier(deps.relations[ll])):
                merged[i:i + 2] = [(lf, rl, rterm)]
                changed = True
                continue
            if (right_head != 0 and lf <= right_head - 1 <= ll
                    and _is_modifier(deps.relations[rf])):
                merged[i:i + 2] = [(lf, rl, rterm)]
                changed = True
                continue
            i += 1
    return merged


def parse_dependency_file(text: str) -> list[DependencyInput]:
    """Parse blank-line-separated blocks of "index<TAB>form<TAB>head<TAB>relation"."""
    sentences: list[DependencyInput] = []
    block: list[tuple[int, str, int, str]] = []

    def flush():
        if not block:
            return
        block.sort(key=lambda row: row[0])
        sentences.append(DependencyInput(
            tokens=tuple(row[1] for row in block),
            heads=tuple(row[2] for row in block),
            relations=tuple(row[3] for row in block),
        ))
        block.clear()

    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            flush()
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 4 tab-separated fields, got {len(parts)}")
        try:
            index, head = int(parts[0]), int(parts[2])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-numeric index or head") from exc
        block.append((index, parts[1], head, parts[3]))
    flush()
    return sentences
