"""Ground-truth component counts by explicit strand tracing.

Builds a port-level diagram from an expression and counts closed curves
with union-find.  No parity shortcuts, no connectivity algebra: this
module exists so the rest of the package has something independent to be
checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import Cross, CrossingNeg, CrossingPos, Expr, IntTangle


class UnionFind:
    def __init__(self, size: int = 0):
        self.parent = list(range(size))

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)

    def class_count(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


@dataclass(frozen=True)
class CrossingPorts:
    """The four ports of one crossing; sign is the handedness."""

    nw: int
    ne: int
    sw: int
    se: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    """A tangle as ports: crossings in leaf order, connecting arcs, boundary.

    Arcs record identity-tangle strands and the gluings made by tangle
    addition; the wiring internal to each crossing is chosen at trace time
    (flat pass-through, or a smoothing).
    """

    crossings: tuple[CrossingPorts, ...]
    arcs: tuple[tuple[int, int], ...]
    boundary: tuple[int, int, int, int]
    n_ports: int


def build_diagram(e: Expr) -> Diagram:
    """Construct the port diagram of e; integral tangles become crossing chains."""
    crossings: list[CrossingPorts] = []
    arcs: list[tuple[int, int]] = []
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def make_crossing(sign: int) -> tuple[int, int, int, int]:
        ports = (fresh(), fresh(), fresh(), fresh())
        crossings.append(CrossingPorts(*ports, sign))
        return ports

    def glue(left: tuple[int, int, int, int], right: tuple[int, int, int, int]):
        arcs.append((left[1], right[0]))  # ne ~ nw
        arcs.append((left[3], right[2]))  # se ~ sw
        return (left[0], right[1], left[2], right[3])

    def build(node: Expr) -> tuple[int, int, int, int]:
        if isinstance(node, CrossingPos):
            return make_crossing(+1)
        if isinstance(node, CrossingNeg):
            return make_crossing(-1)
        if isinstance(node, IntTangle):
            if node.n == 0:
                nw, ne, sw, se = fresh(), fresh(), fresh(), fresh()
                arcs.append((nw, ne))
                arcs.append((sw, se))
                return (nw, ne, sw, se)
            sign = 1 if node.n > 0 else -1
            bnd = make_crossing(sign)
            for _ in range(abs(node.n) - 1):
                bnd = glue(bnd, make_crossing(sign))
            return bnd
        if isinstance(node, Cross):
            nw, ne, sw, se = build(node.inner)
            # quarter turn plus mirror: new (nw, ne, sw, se) = old (sw, nw, se, ne)
            return (sw, nw, se, ne)
        bnd = build(node.parts[0])
        for p in node.parts[1:]:
            bnd = glue(bnd, build(p))
        return bnd

    boundary = build(e)
    return Diagram(tuple(crossings), tuple(arcs), boundary, counter[0])


def _closed_count(diagram: Diagram, pairings: list[tuple[int, int]]) -> int:
    uf = UnionFind(diagram.n_ports)
    for a, b in diagram.arcs:
        uf.union(a, b)
    for a, b in pairings:
        uf.union(a, b)
    nw, ne, sw, se = diagram.boundary
    uf.union(nw, ne)
    uf.union(sw, se)
    return uf.class_count()


def trace_components(e: Expr) -> int:
    """Components of the numerator closure, by tracing flat crossings."""
    diagram = build_diagram(e)
    pairings = []
    for c in diagram.crossings:
        pairings.append((c.nw, c.se))
        pairings.append((c.ne, c.sw))
    return _closed_count(diagram, pairings)


def trace_state_loops(e: Expr, state: str) -> int:
    """Closed loops of the bracket state given by a string over {A, B}.

    state[i] labels the i-th crossing in leaf order after integral tangles
    are expanded; A smooths a positive crossing horizontally and a
    negative one vertically, B the other way around.
    """
    diagram = build_diagram(e)
    if len(state) != len(diagram.crossings):
        raise ValueError(
            f"state length {len(state)} != crossing count {len(diagram.crossings)}"
        )
    pairings = []
    for label, c in zip(state, diagram.crossings):
        if label not in "AB":
            raise ValueError(f"state labels must be A or B, got {label!r}")
        horizontal = (label == "A") == (c.sign > 0)
        if horizontal:
            pairings.append((c.nw, c.ne))
            pairings.append((c.sw, c.se))
        else:
            pairings.append((c.nw, c.sw))
            pairings.append((c.ne, c.se))
    return _closed_count(diagram, pairings)
