"""Pure-Python chunk segmentation kernel.

Reference implementation of the hot loop; framelex._chunker_cy is the
compiled twin and must stay behaviorally identical (enforced by tests).
"""

from __future__ import annotations

BACKEND = "python"


def segment(sentence: str, post_forms: dict, max_form_len: int,
            merge_suffixes: tuple) -> tuple[list, list]:
    """Segment a sentence into postposition-terminated chunks.

    Returns (tokens, chunks): tokens as (start, end) code-point spans of
    the whitespace-delimited eojeols; chunks as (first_token, last_token,
    terminal_form_or_None). An eojeol ending in a merge suffix (genitive,
    adnominal 은/는) joins the following chunk; an eojeol ending in a table
    postposition closes the current chunk; anything else extends it.
    """
    n = len(sentence)
    tokens = []
    i = 0
    while i < n:
        if sentence[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not sentence[j].isspace():
            j += 1
        tokens.append((i, j))
        i = j

    chunks = []
    first = 0
    for k in range(len(tokens)):
        a, b = tokens[k]
        if _ends_with_any(sentence, a, b, merge_suffixes):
            continue
        form = None
        limit = b - a
        if max_form_len < limit:
            limit = max_form_len
        for length in range(limit, 0, -1):
            candidate = sentence[b - length:b]
            if candidate in post_forms:
                form = candidate
                break
        if form is not None:
            chunks.append((first, k, form))
            first = k + 1
    if first < len(tokens):
        chunks.append((first, len(tokens) - 1, None))
    return tokens, chunks


def _ends_with_any(sentence: str, a: int, b: int, suffixes: tuple) -> bool:
    for suffix in suffixes:
        length = len(suffix)
        if b - a >= length and sentence[b - length:b] == suffix:
            return True
    return False
