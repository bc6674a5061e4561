"""Shared strategies and brute-force oracles.

Oracles are deliberately naive restatements of the definitions; library
results must agree with them.
"""

from __future__ import annotations

from typing import Iterator

from hypothesis import strategies as st

from indematch import (
    Edge,
    Matching,
    PatternKind,
    Segment,
    canonical,
    contains,
    is_indecomposable,
    make_matching,
)


def matching_from_permutation(perm: tuple[int, ...]) -> Matching:
    """Pair up consecutive entries of a permutation of [2n]."""
    return make_matching(
        (perm[2 * i], perm[2 * i + 1]) for i in range(len(perm) // 2)
    )


@st.composite
def matchings(draw, min_n: int = 0, max_n: int = 6) -> Matching:
    n = draw(st.integers(min_n, max_n))
    perm = tuple(draw(st.permutations(range(1, 2 * n + 1))))
    return matching_from_permutation(perm)


def indecomposable_matchings(min_n: int = 1, max_n: int = 6):
    return matchings(min_n, max_n).filter(is_indecomposable)


def oracle_intervals(matching: Matching) -> tuple[Segment, ...]:
    """All nontrivial intervals by direct closure check of every segment."""
    m = matching.top
    out = []
    for lo in range(1, m + 1):
        for hi in range(lo + 1, m + 1):
            if lo == 1 and hi == m:
                continue
            if all(lo <= matching.partner_of(v) <= hi for v in range(lo, hi + 1)):
                out.append(Segment(lo, hi))
    return tuple(out)


def oracle_max_size(matching: Matching, kind: PatternKind) -> int:
    """Largest k with canonical(kind, k) contained, by descending search."""
    floor = (
        2
        if kind in (PatternKind.RIGHT_BROKEN_NESTING, PatternKind.LEFT_BROKEN_NESTING)
        else 1
    )
    for k in range(matching.n, floor - 1, -1):
        if contains(matching, canonical(kind, k)) is not None:
            return k
    return 0


def oracle_increasing_length(values) -> int:
    best = [0] * len(values)
    for i in range(len(values)):
        best[i] = 1 + max(
            (best[j] for j in range(i) if values[j] < values[i]), default=0
        )
    return max(best, default=0)


def all_pin_sequences(matching: Matching) -> Iterator[tuple[Edge, ...]]:
    """Every pin sequence of the host (all lengths, all orders)."""
    edges = matching.edges()

    def extend(seq: tuple[Edge, ...], lo: int, hi: int) -> Iterator[tuple[Edge, ...]]:
        for e in edges:
            if e in seq:
                continue
            if (lo <= e.left <= hi) + (lo <= e.right <= hi) != 1:
                continue
            grown = seq + (e,)
            yield grown
            yield from extend(grown, min(lo, e.left), max(hi, e.right))

    for e in edges:
        yield (e,)
        yield from extend((e,), e.left, e.right)


def random_matching(rng, n: int) -> Matching:
    verts = list(range(1, 2 * n + 1))
    rng.shuffle(verts)
    return make_matching((verts[2 * i], verts[2 * i + 1]) for i in range(n))


def random_indecomposable(rng, n: int) -> Matching:
    while True:
        m = random_matching(rng, n)
        if is_indecomposable(m):
            return m
