"""Perfect matchings on a linearly ordered vertex set.

A matching on [2n] = {1, ..., 2n} pairs every vertex with exactly one other
vertex.  We store it as a partner table: ``partner[v - 1]`` is the vertex
matched to ``v``.  The table form makes containment tests and relabelling
cheap, and it is hashable, so matchings can live in sets and dict keys.

Vertices are 1-based everywhere in the public interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateVertex,
    GapInVertexSet,
    SelfLoop,
    SharedVertex,
    UnknownEdge,
    VertexOutOfRange,
)


class Edge(NamedTuple):
    """A single chord, stored with its smaller endpoint first."""

    left: int
    right: int

    def __str__(self) -> str:
        return f"{self.left}-{self.right}"


def as_edge(pair: Iterable[int]) -> Edge:
    """Normalize an endpoint pair into an Edge, smaller endpoint first."""
    a, b = pair
    if a == b:
        raise SelfLoop(a)
    return Edge(a, b) if a < b else Edge(b, a)


@dataclass(frozen=True)
class Segment:
    """The contiguous vertex range [lo, hi]; both bounds inclusive."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"segment bounds out of order: [{self.lo}, {self.hi}]")

    def __contains__(self, vertex: int) -> bool:
        return self.lo <= vertex <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


class Relation(Enum):
    """How two disjoint edges sit relative to each other."""

    CROSSING = "crossing"
    NESTED = "nested"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class Matching:
    """A perfect matching on [2n], as an involution without fixed points.

    Construct via make_matching, which validates; the constructor itself only
    asserts the involution property, as a cheap guard for internal callers
    that build partner tables directly.
    """

    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.partner
        assert all(p[p[v] - 1] == v + 1 and p[v] != v + 1 for v in range(len(p)))

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.partner) // 2

    @property
    def top(self) -> int:
        """The greatest vertex, 2n."""
        return len(self.partner)

    def partner_of(self, vertex: int) -> int:
        if not 1 <= vertex <= len(self.partner):
            raise VertexOutOfRange(vertex, len(self.partner))
        return self.partner[vertex - 1]

    def edges(self) -> tuple[Edge, ...]:
        """All edges, ordered by left endpoint."""
        return tuple(
            Edge(v, self.partner[v - 1])
            for v in range(1, len(self.partner) + 1)
            if v < self.partner[v - 1]
        )

    def has_edge(self, edge: Edge) -> bool:
        return (
            1 <= edge.left <= len(self.partner)
            and self.partner[edge.left - 1] == edge.right
            and edge.left < edge.right
        )

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.edges())


def make_matching(pairs: Iterable[Iterable[int]]) -> Matching:
    """Build a Matching from endpoint pairs, validating as we go.

    The pairs must cover {1, ..., 2n} exactly once each.  Checks run in a
    fixed order (self loops, range, duplicates, gaps) so error messages are
    stable for a given bad input.
    """
    edges = [as_edge(p) for p in pairs]
    size = 2 * len(edges)
    for e in edges:
        for v in e:
            if not 1 <= v <= size:
                raise VertexOutOfRange(v, size)
    partner = [0] * size
    for e in edges:
        for v, w in ((e.left, e.right), (e.right, e.left)):
            if partner[v - 1] != 0:
                raise DuplicateVertex(v)
            partner[v - 1] = w
    # Unreachable when the earlier checks pass (2n slots, 2n distinct
    # vertices in range), but kept as a guard against future edits.
    for v in range(1, size + 1):
        if partner[v - 1] == 0:
            raise GapInVertexSet(v)
    return Matching(tuple(partner))


def edge_relation(e: Edge, f: Edge) -> Relation:
    """Classify the relative position of two disjoint edges."""
    if e.left in f or e.right in f:
        raise SharedVertex(e.left if e.left in f else e.right)
    if e.left < f.left < e.right < f.right or f.left < e.left < f.right < e.right:
        return Relation.CROSSING
    if e.left < f.left < f.right < e.right or f.left < e.left < e.right < f.right:
        return Relation.NESTED
    return Relation.DISJOINT


def crossing(e: Edge, f: Edge) -> bool:
    return edge_relation(e, f) is Relation.CROSSING


def find_intervals(matching: Matching) -> tuple[Segment, ...]:
    """All nontrivial intervals: contiguous runs of >= 2 vertices, closed
    under the matching, other than the whole vertex set.

    For each candidate left end we sweep right, tracking the furthest
    partner seen; the run [lo, hi] is closed exactly when that reach has
    fallen back to hi.  A partner below lo kills every run starting at lo.
    """
    partner = matching.partner
    m = len(partner)
    found = []
    for lo in range(1, m + 1):
        reach = lo
        for hi in range(lo, m + 1):
            p = partner[hi - 1]
            if p < lo:
                break
            if p > reach:
                reach = p
            if hi > lo and reach <= hi and not (lo == 1 and hi == m):
                found.append(Segment(lo, hi))
    return tuple(found)


def _is_indecomposable_partner(partner: tuple[int, ...]) -> bool:
    """find_intervals on a raw partner table, stopping at the first hit.

    Split out so enumeration can test candidates without building Matching
    objects.
    """
    m = len(partner)
    for lo in range(1, m + 1):
        reach = lo
        for hi in range(lo, m + 1):
            p = partner[hi - 1]
            if p < lo:
                break
            if p > reach:
                reach = p
            if hi > lo and reach <= hi and not (lo == 1 and hi == m):
                return False
    return True


def is_indecomposable(matching: Matching) -> bool:
    """True when the matching has no nontrivial interval.

    The empty matching and the single edge are indecomposable by convention.
    """
    return _is_indecomposable_partner(matching.partner)


def _induced_partner(subset: tuple[Edge, ...]) -> tuple[int, ...]:
    """Partner table of the submatching induced by the given edges, after
    relabelling the surviving endpoints order-preservingly onto [2k]."""
    verts = sorted(v for e in subset for v in e)
    rank = {v: i + 1 for i, v in enumerate(verts)}
    partner = [0] * len(verts)
    for e in subset:
        partner[rank[e.left] - 1] = rank[e.right]
        partner[rank[e.right] - 1] = rank[e.left]
    return tuple(partner)


def subpattern(matching: Matching, keep: Iterable[Edge]) -> Matching:
    """The matching induced by a subset of edges, relabelled onto [2k]."""
    kept = []
    for e in keep:
        if not matching.has_edge(e):
            raise UnknownEdge(e)
        kept.append(e)
    return Matching(_induced_partner(tuple(kept)))


def contains(matching: Matching, pattern: Matching) -> frozenset[Edge] | None:
    """Search for pattern as a submatching; return a witnessing edge set.

    Brute force over edge subsets of the right size, in lexicographic order
    of the host's (left endpoint sorted) edge tuple, so the returned witness
    is deterministic.  None means the pattern does not occur.
    """
    if pattern.n == 0:
        return frozenset()
    if pattern.n > matching.n:
        return None
    target = pattern.partner
    for subset in combinations(matching.edges(), pattern.n):
        if _induced_partner(subset) == target:
            return frozenset(subset)
    return None


def reverse(matching: Matching) -> Matching:
    """Mirror image: vertex v goes to 2n + 1 - v."""
    m = len(matching.partner)
    return Matching(tuple(m + 1 - matching.partner[m - v] for v in range(1, m + 1)))
