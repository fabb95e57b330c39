"""Rotation correspondence tour.

Builds a few binary and reduced trees, sends them through phi and back,
and shows how inner nodes of a tree become edges of its image.

    python demos/rotation_tour.py
"""

from arboretum import parse, phi, phi_inv, to_text
from arboretum.rotation import omega, vertex_leaf_map
from arboretum.trees import DecorationScheme
from arboretum.rotation import phi_decorated

print("Binary trees go to rooted trees (every edge has one member):")
for text in ["(| |)", "(| (| |))", "((| |) |)", "((| |) (| |))"]:
    print(f"  {text:<16} -> {to_text(phi(parse(text)))}")

print("\nA node with k children becomes an edge with k - 1 members:")
for text in ["(| | |)", "((| | |) |)", "(| (| | |))", "(| | | |)"]:
    s = phi(parse(text))
    print(f"  {text:<16} -> {to_text(s):<22} back: {to_text(phi_inv(s))}")

t = parse("((| |) (| | |))")
s = phi(t)
print(f"\nInner nodes of {to_text(t)} and the edges they turn into in {to_text(s)}:")
for node, (vertex, edge) in sorted(omega(t).items()):
    print(f"  node at {node!s:<8} -> edge {edge} at vertex {vertex}")

print("\nVertex labels (the root always gets the highest):")
for vertex, label in sorted(vertex_leaf_map(s).items(), key=lambda kv: kv[1]):
    print(f"  label {label}: vertex {vertex}")

scheme = DecorationScheme({2: ["a", "b"], 3: ["c"]})
tagged = parse("((| |)@a | |)@c")
print(f"\nDecorations ride along: {to_text(tagged)} -> {to_text(phi_decorated(tagged, scheme))}")
