"""Coproducts, antipodes and the pre-Lie product on both sides.

Prints a few coproducts, checks that phi carries one coproduct onto the
other, computes antipodes and grafting products, and runs a convolution.

    python demos/hopf_tour.py
"""

from arboretum import hopf, parse, phi, to_text
from arboretum.linear import LinComb
from arboretum.trees import HYPER, REDUCED, Forest


def show(title, x):
    print(title)
    for line in x.lines():
        print("   ", line)


t = parse("((| |) (| |))")
show(f"Coproduct of {to_text(t)}:", hopf.coproduct(t))
show(f"Coproduct of its image {to_text(phi(t))}:", hopf.coproduct(phi(t)))


def move(pair):
    return LinComb.basis(tuple(Forest.of(*map(phi, f.trees), kind=HYPER) for f in pair))


print("phi carries one onto the other:", hopf.coproduct(phi(t)) == hopf.coproduct(t).map_basis(move))

show("\nAntipode of (| (| |)):", hopf.antipode(parse("(| (| |))")))
show("Antipode of the same tree via the other recursion:", hopf.antipode(parse("(| (| |))"), "right"))

y = parse("(| |)")
show("\nGrafting (| |) on each leaf of (| |):", hopf.pre_lie_graft(y, y))
show("Its image on hypertrees:", hopf.pre_lie_hyper(phi(y), phi(y)))
show("Lie bracket [(| |), (| (| |))]:", hopf.lie_bracket(y, parse("(| (| |))")))

print("\nReduced corollas are primitive:", all(hopf.is_primitive(parse("(" + " ".join("|" * k) + ")"))
                                           for k in range(2, 7)))

s_map = hopf.antipode_map(REDUCED, 4)
print("S * id equals the unit map up to weight 4:",
      hopf.convolve(s_map, hopf.identity_map(REDUCED, 4)) == hopf.unit_map(REDUCED, 4))
