"""Component counts as the GF(2) nullity of a graph Laplacian.

An expression maps to a two-terminal series-parallel network: twists are
parallel banks of conductors, tangle addition joins in parallel (so
tangle fractions add like conductances) and mirror rotation dualizes.
The nullity of the network's mod-2 Laplacian recovers the component count
of the closed diagram.
"""

from knotalg import (
    closure_components,
    conductance,
    continued_fraction,
    dualize,
    mod2_laplacian,
    nullity_gf2,
    parse,
    sp_network,
    to_multigraph,
)

# Conductance equals the tangle fraction on continued-fraction input.
for parts in [(2,), (3,), (2, 2), (3, 7, 16)]:
    tree = sp_network(continued_fraction(parts))
    dual = dualize(tree)
    print(f"{str(parts):<12} conductance {str(conductance(tree)):>8}"
          f"   dual {str(conductance(dual)):>8}")
print()

# Small closures and their Laplacians.
for name, text in [("Hopf", "2"), ("trefoil", "3"), ("Borromean", "<<2> <-2>> <2> <-2>")]:
    e = parse(text)
    g = to_multigraph(sp_network(e), closed=True)
    lap = mod2_laplacian(g)
    nullity = nullity_gf2(lap)
    print(f"{name}: {g.n} nodes, {len(g.edges)} edges")
    for row in lap.to_dense():
        print("   ", row)
    print(f"    nullity {nullity} = components {closure_components(e)}")
    print()
