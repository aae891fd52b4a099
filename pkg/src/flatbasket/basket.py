"""Flat basket codes, chord diagrams, and decoded boundary links.

A flat basket code is a double-occurrence word: 2n labels read
counter-clockwise around a disk boundary, each label appearing exactly
twice. Chord k joins the two positions carrying label k, and band k is a
flat untwisted band over chord k. Bands with larger labels lie farther
from the disk, so wherever two bands cross, the larger label passes over.

Decoding conventions used throughout:

* Each position p splits into two boundary nodes p- and p+, the clockwise
  and counter-clockwise ends of the band-attaching interval at p.
* The disk boundary contributes arcs p+ -> (p+1)- (counter-clockwise).
* A band over the chord {p, q} contributes the two directed sides
  p- -> q+ and q- -> p+, giving the untwisted-band boundary rerouting.
* Crossing signs follow the right-handed rule
  sign = sign(over_direction x under_direction), under which a positive
  braid generator decodes to a +1 crossing (pinned by the package tests).

The decoded diagram is stored combinatorially (crossings, components,
edge cycles); planar coordinates are used only transiently, with exact
rational arithmetic, while the diagram is assembled.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import _geom
from .errors import CodeError

# Node = (position, end): end 0 is the clockwise end "-", end 1 is "+".
Node = tuple[int, int]
# SideRef = (band label, side index): side 0 runs first- -> second+,
# side 1 runs second- -> first+ (occurrence order of the label).
SideRef = tuple[int, int]


@dataclass(frozen=True)
class FlatBasketCode:
    """A double-occurrence word over {1..n}, each label appearing twice."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if len(self.word) % 2:
            raise CodeError(f"code length {len(self.word)} is odd")
        n = len(self.word) // 2
        counts: dict[int, int] = {}
        for x in self.word:
            counts[x] = counts.get(x, 0) + 1
        bad = [x for x, c in counts.items() if c != 2]
        if bad:
            raise CodeError(f"labels {sorted(bad)} do not appear exactly twice")
        if counts and set(counts) != set(range(1, n + 1)):
            raise CodeError(
                f"labels {sorted(counts)} are not exactly 1..{n}; "
                "use validate_code(..., strict=False) to renumber"
            )

    @property
    def n(self) -> int:
        """Number of bands."""
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.word)


def validate_code(seq: Sequence[int], strict: bool = True) -> FlatBasketCode:
    """Check a sequence as a flat basket code.

    Strict mode requires the labels to be exactly {1..n}, each appearing
    twice. Lenient mode accepts any symbols occurring exactly twice and
    renames them 1..n in order of first appearance.
    """
    seq = tuple(seq)
    if len(seq) % 2:
        raise CodeError(f"code length {len(seq)} is odd")
    counts: dict[int, int] = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    bad = [x for x, c in counts.items() if c != 2]
    if bad:
        raise CodeError(f"labels {sorted(bad)} do not appear exactly twice")
    if not strict:
        seq = lenient_relabel(seq)
    return FlatBasketCode(seq)


def lenient_relabel(seq: Sequence[int]) -> tuple[int, ...]:
    """Rename symbols to 1..n in order of first appearance."""
    names: dict[int, int] = {}
    out = []
    for x in seq:
        if x not in names:
            names[x] = len(names) + 1
        out.append(names[x])
    return tuple(out)


@dataclass(frozen=True)
class FlatBasketDiagram:
    """2n boundary points in counter-clockwise order with a chord pairing.

    Point p is position p in the cyclic order; ``chords[k]`` holds the two
    positions of label k+1 in occurrence order.
    """

    size: int
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        used = sorted(p for pair in self.chords for p in pair)
        if used != list(range(self.size)) or self.size != 2 * len(self.chords):
            raise CodeError("chords do not partition the boundary points")

    @property
    def n(self) -> int:
        return len(self.chords)

    def label_at(self, position: int) -> int:
        for k, (a, b) in enumerate(self.chords):
            if position in (a, b):
                return k + 1
        raise CodeError(f"position {position} out of range")

    def code(self) -> FlatBasketCode:
        """Read the labels counter-clockwise from position 0."""
        word = [0] * self.size
        for k, (a, b) in enumerate(self.chords):
            word[a] = word[b] = k + 1
        return FlatBasketCode(tuple(word))


def code_to_diagram(code: FlatBasketCode) -> FlatBasketDiagram:
    """Place the 2n positions counter-clockwise and pair equal labels."""
    first: dict[int, int] = {}
    chords: dict[int, tuple[int, int]] = {}
    for pos, label in enumerate(code.word):
        if label in first:
            chords[label] = (first[label], pos)
        else:
            first[label] = pos
    return FlatBasketDiagram(
        size=len(code.word),
        chords=tuple(chords[k] for k in range(1, code.n + 1)),
    )


def chords_interleave(diagram: FlatBasketDiagram, i: int, j: int) -> bool:
    """True iff exactly one endpoint of chord j lies strictly inside the
    counter-clockwise arc spanned by chord i."""
    if i == j:
        raise CodeError("chords_interleave requires two distinct labels")
    a, b = diagram.chords[i - 1]
    inside = 0
    span = (b - a) % diagram.size
    for p in diagram.chords[j - 1]:
        if 0 < (p - a) % diagram.size < span:
            inside += 1
    return inside == 1


def interleaving_pairs(diagram: FlatBasketDiagram) -> tuple[tuple[int, int], ...]:
    """All label pairs (i, j), i < j, whose chords cross."""
    n = diagram.n
    return tuple(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if chords_interleave(diagram, i, j)
    )


@dataclass(frozen=True)
class ComponentTrace:
    """Boundary components of the disk-plus-bands surface.

    ``arc_component[p]`` is the component of the disk arc p+ -> (p+1)-;
    ``side_component[(label, side)]`` the component of a band side. Cycles
    list the boundary nodes of each component in walk order.
    """

    count: int
    arc_component: tuple[int, ...]
    side_component: dict[SideRef, int]
    cycles: tuple[tuple[Node, ...], ...]


def trace_components(code: FlatBasketCode) -> ComponentTrace:
    """Walk the boundary of the disk with all bands attached.

    Travel counter-clockwise along the disk boundary; at each attaching
    interval transfer along the band side and emerge at the other end of
    the chord. The number of closed walks is the component count, and it
    always satisfies count = n + 1 (mod 2).
    """
    size = len(code.word)
    if size == 0:
        return ComponentTrace(1, (), {}, ())
    diagram = code_to_diagram(code)
    partner = {}
    for a, b in diagram.chords:
        partner[a], partner[b] = b, a

    def successor(node: Node) -> Node:
        pos, end = node
        if end == 1:  # disk arc to the next attaching interval
            return ((pos + 1) % size, 0)
        return (partner[pos], 1)  # band side to the far end of the chord

    component_of: dict[Node, int] = {}
    cycles: list[tuple[Node, ...]] = []
    for start in ((p, e) for p in range(size) for e in (0, 1)):
        if start in component_of:
            continue
        walk = []
        node = start
        while node not in component_of:
            component_of[node] = len(cycles)
            walk.append(node)
            node = successor(node)
        cycles.append(tuple(walk))

    arc_component = tuple(component_of[(p, 1)] for p in range(size))
    side_component: dict[SideRef, int] = {}
    for k, (a, b) in enumerate(diagram.chords):
        side_component[(k + 1, 0)] = component_of[(a, 0)]
        side_component[(k + 1, 1)] = component_of[(b, 0)]
    return ComponentTrace(len(cycles), arc_component, side_component, tuple(cycles))


@dataclass(frozen=True)
class Crossing:
    """One crossing of two band sides; the larger band label is on top."""

    over: SideRef
    under: SideRef
    sign: int


@dataclass(frozen=True)
class LinkDiagram:
    """Combinatorial planar diagram of the decoded basket boundary.

    ``crossing_components[c]`` pairs the (over, under) component ids of
    crossing c; ``pd_code`` lists one quadruple per crossing with edge ids
    counter-clockwise from the incoming under-strand; ``gauss_visits``
    lists, per component, the passages (crossing id, "O"/"U", sign) in
    travel order. Edge ids are 1-based and global; components without
    crossings contribute no edges.
    """

    bands: int
    component_count: int
    crossings: tuple[Crossing, ...]
    crossing_components: tuple[tuple[int, int], ...]
    pd_code: tuple[tuple[int, int, int, int], ...]
    gauss_visits: tuple[tuple[tuple[int, str, int], ...], ...]
    interleaving: tuple[tuple[int, int], ...]
    side_component: dict[SideRef, int]
    arc_component: tuple[int, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


class _Degenerate(Exception):
    """Three band sides met in a point; retry with a different spacing."""


def diagram_to_link(diagram: FlatBasketDiagram) -> LinkDiagram:
    """Reconstruct the boundary link diagram of the basket.

    Each band contributes two parallel sides along its chord; each
    interleaving pair contributes 4 crossings in which the larger label
    passes over. The planar layout is realized with exact rational points;
    coincidental triple points are detected exactly and eliminated by
    re-salting the boundary parameters (which only reorders crossings
    along a side, never the crossing set, signs, or components).
    """
    for attempt in range(8):
        try:
            return _build_link(diagram, attempt)
        except _Degenerate:
            continue
    raise CodeError("could not realize the diagram without triple points")


def link_of_code(code: FlatBasketCode) -> LinkDiagram:
    return diagram_to_link(code_to_diagram(code))


def _node_point(pos: int, end: int, attempt: int) -> _geom.Point:
    # Strictly increasing in (pos, end), so the boundary order is exact.
    # The jitter must be nonlinear in the node index: chords of a conic
    # through parameters in arithmetic progression can be exactly
    # concurrent (the codes the encoder emits are full of such
    # progressions), and affine reparametrizations preserve concurrency.
    index = 2 * pos + end
    digest = hashlib.blake2b(
        f"{index}:{attempt}".encode(), digest_size=8
    ).digest()
    jitter = int.from_bytes(digest, "big")
    return _geom.circle_point(index + Fraction(jitter, 1 << 64))


def _build_link(diagram: FlatBasketDiagram, attempt: int) -> LinkDiagram:
    trace = trace_components(diagram.code() if diagram.n else FlatBasketCode(()))
    pairs = interleaving_pairs(diagram)
    if diagram.n == 0:
        return LinkDiagram(0, 1, (), (), (), ((),), (), {}, ())

    # Directed side segments: side 0 is first- -> second+, side 1 the other.
    segment: dict[SideRef, tuple[_geom.Point, _geom.Point]] = {}
    for k, (a, b) in enumerate(diagram.chords):
        segment[(k + 1, 0)] = (_node_point(a, 0, attempt), _node_point(b, 1, attempt))
        segment[(k + 1, 1)] = (_node_point(b, 0, attempt), _node_point(a, 1, attempt))

    crossings: list[Crossing] = []
    passages: dict[SideRef, list[tuple[Fraction, int, str]]] = {
        side: [] for side in segment
    }
    for i, j in pairs:
        for side_i in (0, 1):
            for side_j in (0, 1):
                under: SideRef = (i, side_i)
                over: SideRef = (j, side_j)
                pa, pb = segment[under]
                pc, pd_ = segment[over]
                params = _geom.segment_intersection_params(pa, pb, pc, pd_)
                if params is None:
                    raise CodeError("interleaving sides failed to intersect")
                t_under, t_over = params
                if not (0 < t_under < 1 and 0 < t_over < 1):
                    raise CodeError("side intersection outside both segments")
                sign = _geom.cross_sign(_geom.sub(pd_, pc), _geom.sub(pb, pa))
                crossing_id = len(crossings) + 1
                crossings.append(Crossing(over=over, under=under, sign=sign))
                passages[under].append((t_under, crossing_id, "U"))
                passages[over].append((t_over, crossing_id, "O"))

    for side, items in passages.items():
        items.sort(key=lambda rec: rec[0])
        for a, b in zip(items, items[1:]):
            if a[0] == b[0]:
                raise _Degenerate(side)

    # Walk each component, concatenating side passages in travel order.
    component_passages: list[list[tuple[int, str]]] = []
    for cycle in trace.cycles:
        visits: list[tuple[int, str]] = []
        for pos, end in cycle:
            if end == 1:
                continue  # disk arcs carry no crossings
            label = diagram.label_at(pos)
            first, _second = diagram.chords[label - 1]
            side: SideRef = (label, 0 if pos == first else 1)
            visits.extend((cid, role) for _t, cid, role in passages[side])
        component_passages.append(visits)

    # Edge ids: consecutive along each component; edge t runs from passage
    # t to passage t+1 (cyclically), so passage t enters on the previous one.
    edge_in: dict[tuple[int, str], int] = {}
    edge_out: dict[tuple[int, str], int] = {}
    next_edge = 1
    for visits in component_passages:
        k = len(visits)
        if k == 0:
            continue
        base = next_edge
        for t, visit in enumerate(visits):
            edge_out[visit] = base + t
            edge_in[visit] = base + (t - 1) % k
        next_edge = base + k

    pd_rows = []
    for cid, crossing in enumerate(crossings, start=1):
        u_in, u_out = edge_in[(cid, "U")], edge_out[(cid, "U")]
        o_in, o_out = edge_in[(cid, "O")], edge_out[(cid, "O")]
        if crossing.sign > 0:
            pd_rows.append((u_in, o_out, u_out, o_in))
        else:
            pd_rows.append((u_in, o_in, u_out, o_out))

    gauss = tuple(
        tuple((cid, role, crossings[cid - 1].sign) for cid, role in visits)
        for visits in component_passages
    )
    crossing_components = tuple(
        (trace.side_component[c.over], trace.side_component[c.under])
        for c in crossings
    )
    return LinkDiagram(
        bands=diagram.n,
        component_count=trace.count,
        crossings=tuple(crossings),
        crossing_components=crossing_components,
        pd_code=tuple(pd_rows),
        gauss_visits=gauss,
        interleaving=pairs,
        side_component=dict(trace.side_component),
        arc_component=trace.arc_component,
    )
