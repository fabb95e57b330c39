"""Counting trees and comparing them.

Lists the size classes, checks the counts against the familiar sequences,
and shows that the two partial orders correspond under phi.

    python demos/enumeration_and_order.py
"""

from arboretum import phi, to_text
from arboretum.enumeration import SizeKey, count, generate, leq_hyper, leq_reduced, minimal_maximal

print("leaves  binary  reduced")
for n in range(1, 9):
    print(f"{n:>6}  {count(SizeKey('binary', 'leaves', n)):>6}  {count(SizeKey('reduced', 'leaves', n)):>7}")

print("\nThe 11 reduced trees with 4 leaves and their images:")
for t in generate(SizeKey("reduced", "leaves", 4)):
    print(f"  {to_text(t):<22} {to_text(phi(t))}")

lo, hi = minimal_maximal(SizeKey("reduced", "leaves", 4))
print("\nMinimal:", ", ".join(map(to_text, lo)))
print("Maximal:", ", ".join(map(to_text, hi)))

trees = generate(SizeKey("reduced", "leaves", 5))
agree = all(leq_reduced(a, b) == leq_hyper(phi(a), phi(b)) for a in trees for b in trees)
print(f"\nphi respects the order on all {len(trees) ** 2} pairs at 5 leaves: {agree}")
