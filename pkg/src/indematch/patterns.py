"""Canonical pattern families and exact structure search.

Three indecomposable families drive everything here: the interleaving
(k pairwise-crossing edges), and the right- and left-broken nestings (a
nested chain plus one breaker edge).  The plain nesting is kept as an
auxiliary family; on its own it is decomposable.

Alongside the families live the monotone-subsequence machinery used to
extract a large pattern from the crossers of a single heavily-crossed edge,
and exact maximizers whose only correctness contract is agreement with the
brute-force containment search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .core import Edge, Matching, make_matching, subpattern
from .errors import (
    DuplicateValue,
    InsufficientCrossers,
    InvariantViolation,
    SizeTooSmall,
    UnknownEdge,
)
from .pins import classify_sequence


class PatternKind(Enum):
    INTERLEAVING = "interleaving"
    RIGHT_BROKEN_NESTING = "right_broken_nesting"
    LEFT_BROKEN_NESTING = "left_broken_nesting"
    NESTING = "nesting"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class WitnessKind(Enum):
    INTERLEAVING = "interleaving"
    BROKEN_NESTING = "broken_nesting"
    PROPER_PIN_SEQUENCE = "proper_pin_sequence"


def canonical_edges(kind: PatternKind, k: int) -> tuple[Edge, ...]:
    """Edges of the canonical pattern with k edges, in semantic order:
    interleavings left to right, nestings outermost first, broken nestings
    breaker first and then outermost to innermost.
    """
    if k < 1:
        raise SizeTooSmall(k, 1, "pattern size")
    if kind is PatternKind.INTERLEAVING:
        return tuple(Edge(i, i + k) for i in range(1, k + 1))
    if kind is PatternKind.NESTING:
        return tuple(Edge(i, 2 * k + 1 - i) for i in range(1, k + 1))
    # A broken nesting needs a nested part and a breaker.
    if k < 2:
        raise SizeTooSmall(k, 2, "broken nesting size")
    if kind is PatternKind.RIGHT_BROKEN_NESTING:
        return (Edge(k, 2 * k),) + tuple(Edge(i, 2 * k - i) for i in range(1, k))
    return (Edge(1, k + 1),) + tuple(Edge(i + 1, 2 * k - i + 1) for i in range(1, k))


def canonical(kind: PatternKind, k: int) -> Matching:
    """The canonical matching with k edges of the requested kind, on [2k]."""
    return make_matching(canonical_edges(kind, k))


def _longest_run(
    values: Sequence[int], precedes: Callable[[int, int], bool]
) -> tuple[int, ...]:
    """Indices of a longest subsequence ordered by precedes, by quadratic
    DP.  Ties resolve to the earliest predecessor and earliest endpoint, so
    the answer is deterministic."""
    m = len(values)
    length = [1] * m
    prev = [-1] * m
    for i in range(m):
        for j in range(i):
            if precedes(values[j], values[i]) and length[j] + 1 > length[i]:
                length[i] = length[j] + 1
                prev[i] = j
    if m == 0:
        return ()
    best = max(range(m), key=lambda i: (length[i], -i))
    out = []
    while best != -1:
        out.append(best)
        best = prev[best]
    return tuple(reversed(out))


def longest_monotone(values: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A longest increasing and a longest decreasing subsequence, as index
    tuples.  Values must be distinct.  One of the two has length at least
    ceil(sqrt(len(values)))."""
    seen = set()
    for v in values:
        if v in seen:
            raise DuplicateValue(v)
        seen.add(v)
    return (
        _longest_run(values, lambda a, b: a < b),
        _longest_run(values, lambda a, b: a > b),
    )


def crossers(matching: Matching, e: Edge) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """Edges crossing e, split by side and sorted by left endpoint.

    A left crosser f straddles e.left (f.left < e.left < f.right < e.right);
    a right crosser straddles e.right.
    """
    if not matching.has_edge(e):
        raise UnknownEdge(e)
    left = []
    right = []
    for f in matching.edges():
        if f.left < e.left < f.right < e.right:
            left.append(f)
        elif e.left < f.left < e.right < f.right:
            right.append(f)
    return tuple(left), tuple(right)


@dataclass(frozen=True)
class Witness:
    """A verified certificate that the host contains one of the target
    structures.  Verification runs at construction; a Witness that exists
    is valid.

    edges are in semantic order: interleavings left to right; broken
    nestings breaker first, then the nest outermost to innermost; pin
    sequences in pin order.  side and breaker are set exactly for broken
    nestings.
    """

    kind: WitnessKind
    host: Matching
    edges: tuple[Edge, ...]
    side: Side | None = None
    breaker: Edge | None = None

    def __post_init__(self) -> None:
        self.verify()

    @property
    def size(self) -> int:
        return len(self.edges)

    def verify(self) -> None:
        if not self.edges:
            raise InvariantViolation("witness has no edges")
        if len(set(self.edges)) != len(self.edges):
            raise InvariantViolation("witness repeats an edge")
        for e in self.edges:
            if not self.host.has_edge(e):
                raise UnknownEdge(e)
        if self.kind is WitnessKind.BROKEN_NESTING:
            self._verify_broken_nesting()
        elif self.side is not None or self.breaker is not None:
            raise InvariantViolation(f"{self.kind.value} witness carries breaker data")
        elif self.kind is WitnessKind.INTERLEAVING:
            self._verify_interleaving()
        else:
            self._verify_pin_sequence()

    def _verify_interleaving(self) -> None:
        if any(a.left >= b.left for a, b in zip(self.edges, self.edges[1:])):
            raise InvariantViolation("interleaving edges not in left-to-right order")
        if subpattern(self.host, self.edges) != canonical(
            PatternKind.INTERLEAVING, self.size
        ):
            raise InvariantViolation("edges do not induce a canonical interleaving")

    def _verify_broken_nesting(self) -> None:
        if self.side is None or self.breaker is None:
            raise InvariantViolation("broken-nesting witness lacks side or breaker")
        if self.breaker != self.edges[0]:
            raise InvariantViolation("breaker is not the leading witness edge")
        kind = (
            PatternKind.RIGHT_BROKEN_NESTING
            if self.side is Side.RIGHT
            else PatternKind.LEFT_BROKEN_NESTING
        )
        if subpattern(self.host, self.edges) != canonical(kind, self.size):
            raise InvariantViolation("edges do not induce a canonical broken nesting")
        # The breaker itself must land on the canonical breaker position.
        verts = sorted(v for e in self.edges for v in e)
        rank = {v: i + 1 for i, v in enumerate(verts)}
        want = (self.size, 2 * self.size) if self.side is Side.RIGHT else (1, self.size + 1)
        if (rank[self.breaker.left], rank[self.breaker.right]) != want:
            raise InvariantViolation("breaker does not occupy the breaker position")

    def _verify_pin_sequence(self) -> None:
        cls = classify_sequence(self.host, self.edges)
        if not (cls.is_pin_sequence and cls.is_proper):
            raise InvariantViolation("edges are not a proper pin sequence")


def extract_from_crossed_edge(matching: Matching, e: Edge, k: int) -> Witness:
    """Pull a size-k structure out of the crossers of a single edge.

    Take the side of e with more crossers (ties go left), order them by
    left endpoint and look at their right endpoints: an increasing run of k
    is an interleaving on its own; a decreasing run of k-1 is a nested
    chain which e breaks, giving a size-k broken nesting.  With at least
    (k-1)^2 + 1 same-side crossers one of the two runs is guaranteed; with
    fewer this is best effort and may raise.
    """
    if k < 2:
        raise SizeTooSmall(k, 2, "target size")
    left, right = crossers(matching, e)
    side = Side.LEFT if len(left) >= len(right) else Side.RIGHT
    chosen = left if side is Side.LEFT else right
    incr, decr = longest_monotone(tuple(f.right for f in chosen))
    if len(incr) >= k:
        return Witness(
            WitnessKind.INTERLEAVING,
            matching,
            tuple(chosen[i] for i in incr[:k]),
        )
    if len(decr) >= k - 1:
        # The breaker's endpoint inside the nest sits inside the innermost
        # chain edge, so any k-1 of the chain work; keep the innermost.
        nest = tuple(chosen[i] for i in decr[len(decr) - (k - 1) :])
        witness_side = Side.RIGHT if side is Side.LEFT else Side.LEFT
        return Witness(
            WitnessKind.BROKEN_NESTING,
            matching,
            (e,) + nest,
            side=witness_side,
            breaker=e,
        )
    raise InsufficientCrossers(
        f"{len(chosen)} crossers on the heavier side of {e}: "
        f"longest runs {len(incr)} increasing / {len(decr)} decreasing "
        f"cannot reach size {k}"
    )


def max_pattern(matching: Matching, kind: PatternKind) -> tuple[int, tuple[Edge, ...]]:
    """Largest k with canonical(kind, k) contained in the matching, plus a
    witnessing edge set in semantic order.

    Interleavings: every pairwise-crossing family consists of one edge f
    plus right crossers of f with increasing right endpoints, since f.right
    separates all their left endpoints from all their right endpoints.
    Nestings are decreasing runs of right endpoints across left-sorted
    edges, and a broken nesting is a nested chain inside the left (right)
    crossers of its breaker.  (0, ()) when no pattern of the kind occurs.
    """
    edges = matching.edges()
    if not edges:
        return 0, ()
    if kind is PatternKind.NESTING:
        _, decr = longest_monotone(tuple(f.right for f in edges))
        return len(decr), tuple(edges[i] for i in decr)
    best: tuple[int, tuple[Edge, ...]] = (0, ())
    if kind is PatternKind.INTERLEAVING:
        for f in edges:
            _, right = crossers(matching, f)
            incr, _ = longest_monotone(tuple(g.right for g in right))
            if 1 + len(incr) > best[0]:
                best = (1 + len(incr), (f,) + tuple(right[i] for i in incr))
        return best
    take_left = kind is PatternKind.RIGHT_BROKEN_NESTING
    for b in edges:
        left, right = crossers(matching, b)
        chosen = left if take_left else right
        _, decr = longest_monotone(tuple(g.right for g in chosen))
        if decr and 1 + len(decr) > best[0]:
            best = (1 + len(decr), (b,) + tuple(chosen[i] for i in decr))
    return best
