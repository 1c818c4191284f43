# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled chunk segmentation kernel; behavioral twin of _chunker_py."""

from cpython.unicode cimport Py_UNICODE_ISSPACE

BACKEND = "cython"


def segment(unicode sentence, dict post_forms, int max_form_len,
            tuple merge_suffixes):
    """Segment a sentence into postposition-terminated chunks.

    Same contract as framelex._chunker_py.segment.
    """
    cdef Py_ssize_t n = len(sentence)
    cdef Py_ssize_t i = 0, j
    cdef list tokens = []
    while i < n:
        if Py_UNICODE_ISSPACE(sentence[i]):
            i += 1
            continue
        j = i
        while j < n and not Py_UNICODE_ISSPACE(sentence[j]):
            j += 1
        tokens.append((i, j))
        i = j

    cdef list chunks = []
    cdef Py_ssize_t first = 0
    cdef Py_ssize_t k, a, b, limit, length
    cdef unicode candidate
    cdef object form
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


cdef bint _ends_with_any(unicode sentence, Py_ssize_t a, Py_ssize_t b,
                         tuple suffixes):
    cdef unicode suffix
    cdef Py_ssize_t length
    for suffix in suffixes:
        length = len(suffix)
        if b - a >= length and sentence[b - length:b] == suffix:
            return True
    return False
