"""Counting link components by pure algebra.

An arborescent link is an expression in twists, tangle addition and the
mirror-rotation operator <...>.  Reducing the expression in the
three-class connectivity algebra, then closing, yields the number of link
components without tracing a single strand.
"""

from knotalg import (
    annotated_text,
    closure_components,
    eval_conn,
    opacity,
    parse,
    trace_components,
)

# A nest of five positive crossings.  The evaluation runs from the inside
# out; each mark picks up the value that emerges from it.
nest = parse("<<<<O>O>O>O>O")
print("expression :", "<<<<O>O>O>O>O")
print("value      :", eval_conn(nest))
print("trace      :", annotated_text(nest))
print("components :", closure_components(nest))
print()

# Class E closes to two circles, so this is a 2-component link.  The same
# machinery handles branching expressions; here are the Borromean rings
# and the Whitehead link.
for name, text in [
    ("Borromean rings", "<<2> <-2>> <2> <-2>"),
    ("Whitehead link ", "2 <2> <-2>"),
    ("pretzel (2,3,5)", "P(2,3,5)"),
]:
    e = parse(text)
    algebraic = closure_components(e)
    traced = trace_components(e)  # independent strand-tracing check
    print(f"{name}  {text:<22} -> {algebraic} components (tracing agrees: {traced == algebraic})")
print()

# Opacity: a twist is opaque when flipping its parity cannot change the
# component count -- in the diagram it is a twist of a strand with itself.
report = opacity(nest)
print("opacity of the five-crossing nest (components =", report.components, ")")
print("  opaque leaves     :", report.opaque_positions)
print("  transparent leaves:", report.transparent_positions)
