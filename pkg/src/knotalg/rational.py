"""Exact continued-fraction arithmetic with a formal infinity.

Fractions are reduced P/Q pairs with arbitrary-precision integers; the
value infinity (P, Q) = (1, 0) closes the arithmetic needed by continued
fractions: 1/0 = inf, 1/inf = 0, n + inf = inf.  Undefined combinations
(inf + inf) raise rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd


@dataclass(frozen=True)
class Frac:
    """Reduced fraction p/q with q >= 0; q == 0 encodes infinity."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = self.p, self.q
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a fraction")
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = gcd(abs(p), q)
            if g > 1:
                p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def reciprocal(self) -> "Frac":
        return Frac(self.q, self.p)

    def __add__(self, other: "Frac | int") -> "Frac":
        if isinstance(other, int):
            other = Frac(other)
        if self.is_infinite and other.is_infinite:
            raise ArithmeticError("inf + inf is undefined")
        if self.is_infinite or other.is_infinite:
            return INF
        return Frac(self.p * other.q + other.p * self.q, self.q * other.q)

    __radd__ = __add__

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


INF = Frac(1, 0)
ZERO = Frac(0, 1)


def parse_fraction(text: str) -> Frac:
    """Parse 'P/Q', a bare integer, or 'inf'."""
    text = text.strip()
    if text == "inf":
        return INF
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return Frac(int(num))
        return Frac(int(num), int(den))
    except ValueError as err:
        raise ValueError(f"not a fraction: {text!r}") from err


class ParityClass(Enum):
    """Outcome of the parity evaluation of a rational tangle.

    ELINK: two-component link (P even); OKNOT: knot with odd denominator;
    VKNOT: knot with even denominator.
    """

    ELINK = "E"
    OKNOT = "O"
    VKNOT = "V"

    @property
    def kind(self) -> str:
        return "link" if self is ParityClass.ELINK else "knot"

    @property
    def components(self) -> int:
        return 2 if self is ParityClass.ELINK else 1


def cf_value(entries: list[int] | tuple[int, ...]) -> Frac:
    """Evaluate the continued fraction a1 + 1/(a2 + 1/(... + 1/an))."""
    if not entries:
        raise ValueError("continued fraction needs at least one entry")
    value = Frac(entries[-1])
    for a in reversed(entries[:-1]):
        value = value.reciprocal() + a
    return value


def cf_of_fraction(f: Frac) -> list[int]:
    """All-positive continued fraction of P/Q with P > Q > 0, last term > 1.

    Greedy Euclidean expansion; the first term may be 1 (canonical forms
    with a leading term > 1 are an enumeration concern, not an arithmetic
    one).
    """
    if f.is_infinite or not f.p > f.q > 0:
        raise ValueError(f"requires P > Q > 0, got {f}")
    terms = []
    p, q = f.p, f.q
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    # Euclid never emits a trailing 1 for a reduced fraction, but keep the
    # normal form honest: [..., a, 1] -> [..., a + 1].
    if len(terms) > 1 and terms[-1] == 1:
        terms.pop()
        terms[-1] += 1
    return terms


def classify_fraction(f: Frac) -> ParityClass:
    """Parity classification of the rational link with fraction P/Q.

    ELINK when P is even; otherwise OKNOT or VKNOT by the parity of Q.
    """
    if f.is_infinite:
        raise ValueError("cannot classify the infinite fraction")
    if f.p < 1:
        raise ValueError(f"requires P >= 1, got {f}")
    if f.p % 2 == 0:
        return ParityClass.ELINK
    return ParityClass.OKNOT if f.q % 2 else ParityClass.VKNOT


def schubert_equivalent(f: Frac, g: Frac) -> bool:
    """Whether P/Q and P'/Q' present the same rational link.

    True iff P = P' and either Q = Q' (mod P) or QQ' = +-1 (mod P).
    """
    for x in (f, g):
        if x.is_infinite or not x.p > x.q > 0:
            raise ValueError(f"requires P > Q > 0, got {x}")
    if f.p != g.p:
        return False
    p = f.p
    return (f.q - g.q) % p == 0 or (f.q * g.q) % p in (1 % p, -1 % p)
