"""Bracket polynomials via algebraic loop counting.

Each crossing resolves into a horizontal or vertical smoothing with label
A or B; the connectivity algebra counts the loops of every state, giving
first the raw three-variable sum and then, after B = 1/A and
d = -A^2 - A^(-2), the bracket polynomial itself.
"""

from knotalg import bracket, mirror, parse, raw_bracket, to_text

for name, text in [
    ("unknot with a curl", "O"),
    ("Hopf link        ", "O O"),
    ("trefoil          ", "O O O"),
    ("figure eight     ", "<O O> U U"),
]:
    e = parse(text)
    print(f"{name}  {text}")
    print("   raw bracket :", raw_bracket(e))
    print("   bracket     :", bracket(e))
print()

# Mirroring a diagram swaps O and U everywhere and inverts A in the
# bracket.  The figure eight is its own mirror image, so its polynomial
# is palindromic.
fig8 = parse("<O O> U U")
print("mirror of the figure eight:", to_text(mirror(fig8)))
print("bracket of the mirror     :", bracket(mirror(fig8)))
print("inverted original         :", bracket(fig8).inverted())
