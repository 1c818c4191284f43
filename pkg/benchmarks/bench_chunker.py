#!/usr/bin/env python3
"""Benchmark the chunk segmentation kernels (compiled vs pure Python).

Generates a synthetic corpus of postposition-marked sentences and times
`segment` for every importable backend, then the full chunk_sentence
path with the selected backend.
"""

import random
import statistics
import time

from framelex.chunking import CHUNKER_BACKEND, MERGE_SUFFIXES, available_backends, chunk_sentence
from framelex.postpositions import load_table

NOUNS = ["사람", "학생", "사회", "질서", "친구", "학교", "나라", "도시", "음식",
         "시간", "문제", "마을", "바다", "공원", "선물", "아이", "부모", "회사"]
JOSA = ["이", "가", "을", "를", "의", "은", "는", "에", "에서", "로", "으로",
        "와", "과", "에게"]
EXTRAS = ["많은", "예쁜", "빠른", "매우", "어제", "함께", "확립하려는"]
VERBS = ["간다", "먹었다", "주었다", "확립하였다", "있다", "한다"]


def build_corpus(n_sentences=20000, seed=1234):
    rng = random.Random(seed)
    corpus = []
    for _ in range(n_sentences):
        length = rng.randint(3, 12)
        tokens = []
        for _ in range(length - 1):
            if rng.random() < 0.7:
                tokens.append(rng.choice(NOUNS) + rng.choice(JOSA))
            else:
                tokens.append(rng.choice(EXTRAS))
        tokens.append(rng.choice(VERBS))
        corpus.append(" ".join(tokens))
    return corpus


def time_backend(kernel, corpus, forms, max_len, repeats=5):
    timings = []
    for _ in range(repeats):
        started = time.perf_counter()
        for sentence in corpus:
            kernel.segment(sentence, forms, max_len, MERGE_SUFFIXES)
        timings.append(time.perf_counter() - started)
    return min(timings), statistics.median(timings)


def main():
    table = load_table()
    corpus = build_corpus()
    total_chars = sum(len(s) for s in corpus)
    print(f"corpus: {len(corpus)} sentences, {total_chars} code points")
    print(f"selected backend: {CHUNKER_BACKEND}")

    results = {}
    for name, kernel in sorted(available_backends().items()):
        best, median = time_backend(kernel, corpus, table.forms, table.max_form_len)
        rate = len(corpus) / best
        results[name] = best
        print(f"  {name:<8} best {best * 1000:8.1f} ms   median {median * 1000:8.1f} ms "
              f"  {rate:10.0f} sentences/s")

    if {"cython", "python"} <= results.keys():
        speedup = results["python"] / results["cython"]
        print(f"speedup (compiled over pure Python): {speedup:.2f}x")

    started = time.perf_counter()
    for sentence in corpus[:5000]:
        chunk_sentence(sentence, table)
    elapsed = time.perf_counter() - started
    print(f"full chunk_sentence path ({CHUNKER_BACKEND}): "
          f"{5000 / elapsed:.0f} sentences/s")


if __name__ == "__main__":
    main()
