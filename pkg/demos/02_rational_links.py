"""Rational links, continued fractions and the parity classification.

A rational tangle is a continued fraction; its closure is a knot or a
2-component link, decided entirely by the parities of P and Q in the
reduced fraction P/Q.
"""

from knotalg import (
    Frac,
    cf_of_fraction,
    cf_value,
    classify_fraction,
    closure_components,
    continued_fraction,
    eval_conn,
    opacity,
    schubert_equivalent,
)

# The classification in one line each: P even gives a link; P odd gives a
# knot whose algebra value remembers the parity of Q.
for p, q in [(2, 1), (3, 1), (5, 2), (355, 113), (355, 22), (16, 7)]:
    f = Frac(p, q)
    parity = classify_fraction(f)
    print(f"{str(f):>8}  ->  {parity.kind} (class {parity.value})")
print()

# Continued fractions round-trip, and reversing the entry order keeps P
# while exchanging Q for a modular partner.
f = Frac(355, 113)
terms = cf_of_fraction(f)
print("355/113 =", terms)
reversed_value = cf_value(terms[::-1])
print("reversed:", terms[::-1], "=", reversed_value)
print("Q * Q' mod P =", (113 * reversed_value.q) % 355)
print("same link?   ", schubert_equivalent(f, reversed_value))
print()

# The all-ones family: consecutive-ratio fractions 1/1, 2/1, 3/2, 5/3, ...
# Every third member is a 2-component link.
print("n  fraction   components")
for n in range(1, 13):
    parts = [1] * n
    print(f"{n:<2} {str(cf_value(parts)):>8}   {closure_components(continued_fraction(parts))}")
print()

# For the 9-crossing member, exactly the twists at positions 2, 5, 8 can
# be made even without merging the knot into a link.
report = opacity(continued_fraction([1] * 9))
print("transparent twists of the all-ones 9-crossing knot:", report.transparent_positions)
print("parity expression value:", eval_conn(continued_fraction([1] * 9)))
