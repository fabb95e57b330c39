"""Partial compositions of trees and hypertrees.

Shows substitution at a leaf, the matching operation on hypertrees (plug a
tree at a labelled vertex, its root edges going to the right), the full
composition gamma, and the right pre-Lie product.

    python demos/operad_tour.py
"""

from arboretum import parse, phi, to_text
from arboretum.operad import compose, compose_hyper, gamma, right_pre_lie

y = parse("(| |)")
c3 = parse("(| | |)")
for i in (1, 2):
    r = compose(y, i, c3)
    h = compose_hyper(phi(y), i, phi(c3))
    print(f"(| |) o_{i} (| | |) = {to_text(r):<16} image {to_text(phi(r)):<20} direct {to_text(h)}")

print("\ngamma((| |); (| |), (| | |)) =", to_text(gamma(y, [y, c3])))
print("on hypertrees:                ", to_text(gamma(phi(y), [phi(y), phi(c3)])))

print("\n(| |) <- (| |):")
for line in right_pre_lie(y, y).lines():
    print("   ", line)
