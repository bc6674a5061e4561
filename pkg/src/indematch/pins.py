"""Pin sequences: chains of edges that successively split a growing shadow.

The shadow of an edge set is the segment spanned by its endpoints.  An edge
splits a segment when exactly one of its endpoints lies inside.  A pin
sequence starts from any edge and extends by edges splitting the shadow of
the pins so far; it is proper when every pin past the second avoids the
shadow of the pins two steps back, and right-reaching when the final pin
touches the greatest vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Matching, Segment, is_indecomposable
from .errors import (
    DuplicatePin,
    EmptySegment,
    InvariantViolation,
    NotIndecomposable,
    NotRightReaching,
    UnknownEdge,
)


def shadow(matching: Matching, edges: tuple[Edge, ...]) -> Segment | None:
    """Segment spanned by the endpoints of the given edges; None when empty."""
    for e in edges:
        if not matching.has_edge(e):
            raise UnknownEdge(e)
    if not edges:
        return None
    verts = [v for e in edges for v in e]
    return Segment(min(verts), max(verts))


def splits(matching: Matching, edge: Edge, segment: Segment | None) -> bool:
    """True when exactly one endpoint of edge lies inside segment."""
    if segment is None:
        raise EmptySegment()
    if not matching.has_edge(edge):
        raise UnknownEdge(edge)
    return (edge.left in segment) + (edge.right in segment) == 1


@dataclass(frozen=True)
class PinSequence:
    """An edge sequence together with the pin properties it satisfies."""

    host: Matching
    pins: tuple[Edge, ...]
    is_pin_sequence: bool
    is_proper: bool
    is_right_reaching: bool


def classify_sequence(matching: Matching, pins: tuple[Edge, ...]) -> PinSequence:
    """Decide the pin-sequence, properness and right-reaching properties.

    The edges must be distinct edges of the matching.  Length-1 sequences
    are proper pin sequences by convention; for length 2 the properness
    condition is vacuous, so properness and the split condition coincide.
    """
    if not pins:
        raise ValueError("a pin sequence has at least one pin")
    seen = set()
    for e in pins:
        if not matching.has_edge(e):
            raise UnknownEdge(e)
        if e in seen:
            raise DuplicatePin(e)
        seen.add(e)

    # shadows[i] covers pins[: i + 1]; prefix shadows only ever grow.
    shadows: list[Segment] = []
    lo, hi = pins[0]
    for e in pins:
        lo, hi = min(lo, e.left), max(hi, e.right)
        shadows.append(Segment(lo, hi))

    is_ps = all(
        splits(matching, pins[i], shadows[i - 1]) for i in range(1, len(pins))
    )
    is_proper = is_ps and all(
        not splits(matching, pins[i], shadows[i - 2]) for i in range(2, len(pins))
    )
    reaches = matching.top in pins[-1]
    return PinSequence(matching, pins, is_ps, is_proper, reaches)


def grow_right_reaching(matching: Matching, start: Edge) -> tuple[Edge, ...]:
    """Extend start into a right-reaching pin sequence, greedily.

    Requires an indecomposable host; a decomposable one has a shadow that no
    edge splits.  If some splitting edge touches the greatest vertex we take
    it (there is only one such edge) and stop; otherwise we take the edge
    reaching furthest outside the shadow, tie-broken by the inner endpoint.
    The result is a pin sequence but not in general a proper one; feed it to
    properize.
    """
    if not matching.has_edge(start):
        raise UnknownEdge(start)
    if not is_indecomposable(matching):
        raise NotIndecomposable()
    pins = [start]
    lo, hi = start
    while matching.top not in pins[-1]:
        current = Segment(lo, hi)
        taken = set(pins)
        best: Edge | None = None
        best_key: tuple[int, int] | None = None
        for e in matching.edges():
            if e in taken or not splits(matching, e, current):
                continue
            if matching.top in e:
                best = e
                break
            inner, outer = (e.left, e.right) if e.left in current else (e.right, e.left)
            if best_key is None or (outer, inner) > best_key:
                best, best_key = e, (outer, inner)
        if best is None:
            # Unreachable past the indecomposability check; the stuck shadow
            # would be a nontrivial interval.
            raise NotIndecomposable("no edge splits the shadow")
        pins.append(best)
        lo, hi = min(lo, best.left), max(hi, best.right)
    return tuple(pins)


def properize(matching: Matching, pins: tuple[Edge, ...]) -> PinSequence:
    """Thin a right-reaching pin sequence down to a proper one.

    Every output pin is drawn from the input and the first pin is kept.
    Candidates for each step are tried latest-input-first, so when the
    greedy walk (always the pin of greatest input position crossing the
    current one) already yields a proper sequence, that exact sequence is
    returned.  The greedy walk alone is not enough: it can revisit a pin or
    emit an improper sequence even on grown input, so failed choices are
    backtracked.
    """
    cls = classify_sequence(matching, pins)
    if not cls.is_pin_sequence:
        raise NotRightReaching("input is not a pin sequence")
    if not cls.is_right_reaching:
        raise NotRightReaching()

    # A valid next pin splits the current shadow and not the previous one,
    # which forces it to cross the newest pin; the pair of shadows is the
    # whole search state.  Used pins lie inside the current shadow and fail
    # the split test, so distinctness needs no bookkeeping.
    top = matching.top
    dead: set[tuple[Segment | None, Segment]] = set()

    def extend(prev: Segment | None, cur: Segment) -> tuple[Edge, ...] | None:
        if (prev, cur) in dead:
            return None
        ranked = [
            e
            for e in reversed(pins)
            if splits(matching, e, cur)
            and (prev is None or not splits(matching, e, prev))
        ]
        for e in ranked:
            if top in e:
                return (e,)
        for e in ranked:
            grown = Segment(min(cur.lo, e.left), max(cur.hi, e.right))
            tail = extend(cur, grown)
            if tail is not None:
                return (e,) + tail
        dead.add((prev, cur))
        return None

    first = pins[0]
    if top in first:
        chain: tuple[Edge, ...] = (first,)
    else:
        tail = extend(None, Segment(first.left, first.right))
        if tail is None:
            raise InvariantViolation(
                "no proper right-reaching subsequence of the pins exists"
            )
        chain = (first,) + tail
    out = classify_sequence(matching, chain)
    if not (out.is_pin_sequence and out.is_proper and out.is_right_reaching):
        raise InvariantViolation("search produced an invalid sequence")
    return out


@dataclass(frozen=True)
class PinTree:
    """All proper right-reaching pin sequences up to a length cap.

    nodes[0] is the root (the single edge touching the greatest vertex);
    parents[i] indexes the node obtained by dropping the first pin, -1 for
    the root.  Nodes appear in breadth-first order.
    """

    host: Matching
    nodes: tuple[tuple[Edge, ...], ...]
    parents: tuple[int, ...]

    @property
    def max_length(self) -> int:
        return max((len(node) for node in self.nodes), default=0)


def build_pin_tree(matching: Matching, depth_cap: int) -> PinTree:
    """Grow the tree of proper right-reaching pin sequences of length at
    most depth_cap.

    Children of a node are the sequences extending it by one prepended edge;
    a suffix of a proper right-reaching sequence is again one, so every such
    sequence of length <= depth_cap appears.  Candidate edges are tried in
    (left, right) order, making the breadth-first node order deterministic.
    """
    if depth_cap < 1:
        raise ValueError(f"depth_cap must be at least 1, got {depth_cap}")
    if not is_indecomposable(matching):
        raise NotIndecomposable()
    if matching.n == 0:
        return PinTree(matching, (), ())
    root = Edge(matching.partner_of(matching.top), matching.top)
    nodes: list[tuple[Edge, ...]] = [(root,)]
    parents = [-1]
    edges = matching.edges()
    head = 0
    while head < len(nodes):
        node = nodes[head]
        if len(node) < depth_cap:
            for e in edges:
                if e in node:
                    continue
                cls = classify_sequence(matching, (e,) + node)
                if cls.is_pin_sequence and cls.is_proper:
                    nodes.append((e,) + node)
                    parents.append(head)
        head += 1
    return PinTree(matching, tuple(nodes), tuple(parents))


def count_proper_rr_sequences(matching: Matching) -> int:
    """Number of proper right-reaching pin sequences, with no length cap.

    Pins are distinct edges, so sequences never exceed n pins and the count
    is finite.  Always at least n for an indecomposable matching with n >= 1.
    """
    return len(build_pin_tree(matching, max(matching.n, 1)).nodes)
