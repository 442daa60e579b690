"""Enumeration of rational knots and links by ordered partitions.

A rational link with n crossings corresponds to a composition of n whose
first and last parts exceed 1, taken up to reversal.  Each class is
classified knot/link twice, by the fraction parity rule and by the
connectivity algebra, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import closure_components
from .errors import ConsistencyError
from .expr import continued_fraction
from .rational import Frac, ParityClass, cf_value, classify_fraction


def compositions_with_big_ends(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n with first and last parts >= 2, in lex order."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")

    def extend(remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        lo = 2 if not prefix else 1
        for part in range(lo, remaining + 1):
            rest = remaining - part
            if rest == 0:
                if part >= 2:
                    yield prefix + (part,)
            else:
                yield from extend(rest, prefix + (part,))

    yield from extend(n, ())


def canonical(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of a composition under reversal: the lex minimum."""
    return min(parts, tuple(reversed(parts)))


@dataclass(frozen=True)
class TableEntry:
    parts: tuple[int, ...]
    fraction: Frac
    parity: ParityClass
    components: int

    @property
    def kind(self) -> str:
        return self.parity.kind


def rational_table(n: int) -> list[TableEntry]:
    """One entry per reversal class of big-ended compositions of n.

    Raises ConsistencyError if the fraction classifier and the algebra
    component count ever disagree (that would be a bug, not bad input).
    """
    classes = sorted({canonical(c) for c in compositions_with_big_ends(n)})
    entries = []
    for parts in classes:
        fraction = cf_value(parts)
        parity = classify_fraction(fraction)
        components = closure_components(continued_fraction(parts))
        if components != parity.components:
            raise ConsistencyError(
                f"classifiers disagree on {parts}: fraction rule says "
                f"{parity.components} components, algebra says {components}"
            )
        entries.append(TableEntry(parts, fraction, parity, components))
    return entries


def table_json(entries: list[TableEntry]) -> list[dict]:
    return [
        {
            "parts": list(e.parts),
            "fraction": str(e.fraction),
            "class": e.parity.value,
            "components": e.components,
        }
        for e in entries
    ]


def table_text(entries: list[TableEntry]) -> str:
    rows = [
        ("(" + ",".join(map(str, e.parts)) + ")", str(e.fraction), e.kind, str(e.components))
        for e in entries
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(3)] if rows else [0, 0, 0]
    lines = [
        f"{parts:<{widths[0]}}  {frac:>{widths[1]}}  {kind:<{widths[2]}}  {comps}"
        for parts, frac, kind, comps in rows
    ]
    return "\n".join(lines)
