"""Checkerboard networks of arborescent expressions and mod-2 nullity.

Tangle addition becomes a parallel join of two-terminal networks (so
tangle fractions add, matching conductances) and mirror rotation becomes
network duality (reciprocal conductance).  The nullity over GF(2) of the
mod-2 Laplacian of the realized multigraph counts the link components of
the closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import Cross, CrossingNeg, CrossingPos, Expr, IntTangle
from .rational import INF, ZERO, Frac


@dataclass(frozen=True)
class Edge:
    """A single conductor; value -1 marks a negative crossing."""

    value: int = 1


@dataclass(frozen=True)
class Open:
    """No connection between the terminals (the 0 tangle)."""


@dataclass(frozen=True)
class Short:
    """Terminals directly identified (the infinity tangle)."""


@dataclass(frozen=True)
class Par:
    children: tuple["SPTree", ...]


@dataclass(frozen=True)
class Ser:
    children: tuple["SPTree", ...]


SPTree = Edge | Open | Short | Par | Ser


def par(*children: SPTree) -> SPTree:
    """Parallel join, normalized: nested Pars flatten and Opens drop out.

    A Short child is kept: it identifies the terminals but the siblings
    still carry crossings of the diagram, so absorbing it would change
    the realized graph (only its conductance would survive).
    """
    flat: list[SPTree] = []
    for c in children:
        if isinstance(c, Open):
            continue
        if isinstance(c, Par):
            flat.extend(c.children)
        else:
            flat.append(c)
    if not flat:
        return Open()
    if len(flat) == 1:
        return flat[0]
    return Par(tuple(flat))


def ser(*children: SPTree) -> SPTree:
    """Series join, normalized: nested Sers flatten and Shorts drop out.

    An Open child is kept, dually to par keeping Shorts.
    """
    flat: list[SPTree] = []
    for c in children:
        if isinstance(c, Short):
            continue
        if isinstance(c, Ser):
            flat.extend(c.children)
        else:
            flat.append(c)
    if not flat:
        return Short()
    if len(flat) == 1:
        return flat[0]
    return Ser(tuple(flat))


def dualize(t: SPTree) -> SPTree:
    """Swap series and parallel, Open and Short; an involution."""
    if isinstance(t, Edge):
        return t
    if isinstance(t, Open):
        return Short()
    if isinstance(t, Short):
        return Open()
    if isinstance(t, Par):
        return ser(*(dualize(c) for c in t.children))
    return par(*(dualize(c) for c in t.children))


def sp_network(e: Expr) -> SPTree:
    """Two-terminal network of an expression.

    An integral tangle n is a parallel bank of |n| conductors, tangle
    addition joins in parallel, mirror rotation dualizes.
    """
    if isinstance(e, CrossingPos):
        return Edge(1)
    if isinstance(e, CrossingNeg):
        return Edge(-1)
    if isinstance(e, IntTangle):
        if e.n == 0:
            return Open()
        return par(*(Edge(1 if e.n > 0 else -1),) * abs(e.n))
    if isinstance(e, Cross):
        return dualize(sp_network(e.inner))
    return par(*(sp_network(p) for p in e.parts))


def conductance(t: SPTree) -> Frac:
    """Signed symbolic conductance; equals the tangle fraction on rational input.

    Degenerate networks can demand inf + inf (two Shorts in parallel) and
    raise ArithmeticError; rational expressions never do.
    """
    if isinstance(t, Edge):
        return Frac(t.value)
    if isinstance(t, Open):
        return ZERO
    if isinstance(t, Short):
        return INF
    if isinstance(t, Par):
        total = conductance(t.children[0])
        for c in t.children[1:]:
            total = total + conductance(c)
        return total
    total = conductance(t.children[0]).reciprocal()
    for c in t.children[1:]:
        total = total + conductance(c).reciprocal()
    return total.reciprocal()


@dataclass(frozen=True)
class PlaneGraph:
    """A multigraph: node count plus an edge list (self-loops allowed)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {"nodes": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PlaneGraph":
        n = int(data["nodes"])
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
        return cls(n, edges)


def to_multigraph(t: SPTree, closed: bool = True) -> PlaneGraph:
    """Realize a network as a multigraph; the terminals pack to nodes 0 and 1.

    A Short identifies the nodes it spans.  The numerator closure adds no
    crossings, hence no nodes or edges, so the closed graph coincides with
    the open network graph except in one degenerate case: a bare Short
    keeps two distinct terminals while open and collapses to a single node
    once closed.
    """
    if isinstance(t, Short) and not closed:
        return PlaneGraph(2, ())
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        parent.setdefault(counter[0] - 1, counter[0] - 1)
        return counter[0] - 1

    edges: list[tuple[int, int]] = []

    def realize(node: SPTree, u: int, v: int) -> None:
        if isinstance(node, Edge):
            edges.append((u, v))
        elif isinstance(node, Open):
            pass
        elif isinstance(node, Short):
            parent[find(u)] = find(v)
        elif isinstance(node, Par):
            for c in node.children:
                realize(c, u, v)
        else:
            nodes = [u] + [fresh() for _ in node.children[:-1]] + [v]
            for c, a, b in zip(node.children, nodes, nodes[1:]):
                realize(c, a, b)

    s, t_node = fresh(), fresh()
    realize(t, s, t_node)
    index: dict[int, int] = {}
    for x in range(counter[0]):
        index.setdefault(find(x), len(index))
    packed = tuple((index[find(u)], index[find(v)]) for u, v in edges)
    return PlaneGraph(len(index), packed)


@dataclass
class GF2Matrix:
    """A square bit matrix; each row is an int bitmask."""

    n: int
    rows: list[int]

    @classmethod
    def from_dense(cls, dense: list[list[int]]) -> "GF2Matrix":
        n = len(dense)
        rows = []
        for row in dense:
            if len(row) != n:
                raise ValueError("matrix must be square")
            mask = 0
            for j, bit in enumerate(row):
                if bit & 1:
                    mask |= 1 << j
            rows.append(mask)
        return cls(n, rows)

    def to_dense(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def rank(self) -> int:
        work = list(self.rows)
        rank = 0
        for col in range(self.n):
            pivot = next(
                (r for r in range(rank, len(work)) if (work[r] >> col) & 1), None
            )
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(len(work)):
                if r != rank and (work[r] >> col) & 1:
                    work[r] ^= work[rank]
            rank += 1
        return rank


def mod2_laplacian(g: PlaneGraph) -> GF2Matrix:
    """Degrees on the diagonal, edge multiplicities off it, all mod 2.

    A self-loop adds two to its node's degree, hence nothing mod 2.
    """
    rows = [0] * g.n
    for u, v in g.edges:
        if u == v:
            continue
        rows[u] ^= (1 << u) ^ (1 << v)
        rows[v] ^= (1 << v) ^ (1 << u)
    return GF2Matrix(g.n, rows)


def nullity_gf2(m: GF2Matrix) -> int:
    """Dimension of the kernel over the two-element field."""
    return m.n - m.rank()


def closure_nullity(e: Expr) -> int:
    """Nullity of the mod-2 Laplacian of the closed checkerboard network of e."""
    return nullity_gf2(mod2_laplacian(to_multigraph(sp_network(e), closed=True)))
