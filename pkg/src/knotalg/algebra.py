"""The crossing algebra: connectivity classes with a loop counter.

A flat 4-ended tangle has one of three boundary pairings:

    E   horizontal, nw-ne / sw-se   (an even twist)
    V   vertical,   nw-sw / ne-se   (the rotated identity <E>)
    O   crossed,    nw-se / ne-sw   (an odd twist)

Tangle addition multiplies classes by the table

    E.E = E    E.O = O.E = O    O.O = E
    V.x = x.V = V for any x, with one extra closed loop when x = V

and mirror rotation swaps E and V while fixing O.  A value is a class
together with the number of closed loops shed so far; the numerator
closure of a value with class E yields two extra circles, otherwise one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .expr import (
    Concat,
    Cross,
    CrossingNeg,
    CrossingPos,
    Expr,
    IntTangle,
    iter_leaves,
    replace_leaf,
    to_text,
)


class ConnClass(Enum):
    """Boundary pairing of a flat 4-ended tangle."""

    E = "E"
    V = "V"
    O = "O"


@dataclass(frozen=True)
class ConnValue:
    """A connectivity class plus the count of closed loops accumulated so far."""

    cls: ConnClass
    loops: int = 0

    def __post_init__(self):
        if self.loops < 0:
            raise ValueError("loop count must be nonnegative")

    def __mul__(self, other: "ConnValue") -> "ConnValue":
        return mul(self, other)


IDENTITY = ConnValue(ConnClass.E, 0)


def mul(a: ConnValue, b: ConnValue) -> ConnValue:
    """Connectivity of the tangle sum; loops add, V.V sheds one more."""
    extra = 1 if a.cls is ConnClass.V and b.cls is ConnClass.V else 0
    if a.cls is ConnClass.V or b.cls is ConnClass.V:
        cls = ConnClass.V
    elif a.cls is b.cls:
        cls = ConnClass.E
    else:
        cls = ConnClass.O
    return ConnValue(cls, a.loops + b.loops + extra)


_CROSS_MAP = {ConnClass.E: ConnClass.V, ConnClass.V: ConnClass.E, ConnClass.O: ConnClass.O}


def cross(a: ConnValue) -> ConnValue:
    """Mirror rotation on values: E and V swap, O is fixed, loops carry."""
    return ConnValue(_CROSS_MAP[a.cls], a.loops)


def parity_class(n: int) -> ConnClass:
    return ConnClass.O if n % 2 else ConnClass.E


def eval_conn(e: Expr) -> ConnValue:
    """Reduce an expression to its connectivity value.

    Only the parity of each twist matters: an integral tangle contributes
    O when odd and E when even, single crossings contribute O.
    """
    if isinstance(e, (CrossingPos, CrossingNeg)):
        return ConnValue(ConnClass.O, 0)
    if isinstance(e, IntTangle):
        return ConnValue(parity_class(e.n), 0)
    if isinstance(e, Cross):
        return cross(eval_conn(e.inner))
    value = eval_conn(e.parts[0])
    for p in e.parts[1:]:
        value = mul(value, eval_conn(p))
    return value


def closure_count(v: ConnValue) -> int:
    """Circles in the numerator closure of a value: E closes to two, V and O to one."""
    return v.loops + (2 if v.cls is ConnClass.E else 1)


def closure_components(e: Expr) -> int:
    """Number of link components of the numerator closure of e."""
    return closure_count(eval_conn(e))


def eval_smoothed(e: Expr, classes: Sequence[ConnClass]) -> ConnValue:
    """Evaluate e with each crossing leaf replaced by a given smoothing class.

    e must contain no nonzero integral tangles (expand them to crossings
    first); classes are consumed in left-to-right leaf order and the
    lengths must match.
    """
    it = iter(classes)

    def walk(node: Expr) -> ConnValue:
        if isinstance(node, (CrossingPos, CrossingNeg)):
            try:
                return ConnValue(next(it), 0)
            except StopIteration:
                raise ValueError("fewer smoothing classes than crossings") from None
        if isinstance(node, IntTangle):
            if node.n != 0:
                raise ValueError("expand integral tangles before smoothing")
            return IDENTITY
        if isinstance(node, Cross):
            return cross(walk(node.inner))
        value = walk(node.parts[0])
        for p in node.parts[1:]:
            value = mul(value, walk(p))
        return value

    value = walk(e)
    if next(it, None) is not None:
        raise ValueError("more smoothing classes than crossings")
    return value


# ---------------------------------------------------------------------------
# Trace-annotated evaluation

_MARK = {ConnClass.O: "o", ConnClass.V: "m", ConnClass.E: "u"}


@dataclass(frozen=True)
class EvalTrace:
    """Marks carried by each mirror-rotation node, innermost first.

    Each mark records the value emerging from that node: o for class O,
    m for class V ("marked"), u for class E ("unmarked").
    """

    marks: tuple[str, ...]
    final: str
    value: ConnValue


def trace(e: Expr) -> EvalTrace:
    """Evaluate e, annotating every <...> node with the value it emits."""
    marks: list[str] = []

    def walk(node: Expr) -> ConnValue:
        if isinstance(node, Cross):
            v = cross(walk(node.inner))
            marks.append(_MARK[v.cls])
            return v
        if isinstance(node, Concat):
            value = walk(node.parts[0])
            for p in node.parts[1:]:
                value = mul(value, walk(p))
            return value
        return eval_conn(node)

    value = walk(e)
    return EvalTrace(tuple(marks), _MARK[value.cls], value)


def annotated_text(e: Expr) -> str:
    """Render e with each closing mark subscripted by its trace value."""

    def walk(node: Expr) -> tuple[str, ConnValue]:
        if isinstance(node, Cross):
            text, inner = walk(node.inner)
            v = cross(inner)
            return f"<{text}>_{_MARK[v.cls]}", v
        if isinstance(node, Concat):
            texts = []
            value = None
            for p in node.parts:
                t, v = walk(p)
                texts.append(t)
                value = v if value is None else mul(value, v)
            return " ".join(texts), value  # type: ignore[return-value]
        return to_text(node), eval_conn(node)

    text, value = walk(e)
    return f"{text} |_{_MARK[value.cls]}"


# ---------------------------------------------------------------------------
# Opacity and transparency


@dataclass(frozen=True)
class OpacityReport:
    """Which leaves can change parity without changing the component count."""

    components: int
    opaque: tuple[bool, ...]

    @property
    def opaque_positions(self) -> tuple[int, ...]:
        return tuple(i for i, op in enumerate(self.opaque, start=1) if op)

    @property
    def transparent_positions(self) -> tuple[int, ...]:
        return tuple(i for i, op in enumerate(self.opaque, start=1) if not op)


def toggle_parity(leaf: Expr) -> Expr:
    """Flip the parity of a leaf, preserving twist handedness."""
    if isinstance(leaf, (CrossingPos, CrossingNeg)):
        return IntTangle(0)
    if isinstance(leaf, IntTangle):
        return IntTangle(leaf.n + 1 if leaf.n >= 0 else leaf.n - 1)
    raise TypeError(f"not a leaf: {leaf!r}")


def opacity(e: Expr) -> OpacityReport:
    """Classify every leaf as opaque (a self-crossing twist) or transparent.

    A leaf is opaque when toggling its parity leaves the closure component
    count unchanged.
    """
    baseline = closure_components(e)
    statuses = []
    for index, leaf in enumerate(iter_leaves(e), start=1):
        toggled = replace_leaf(e, index, toggle_parity(leaf))
        statuses.append(closure_components(toggled) == baseline)
    return OpacityReport(baseline, tuple(statuses))
