"""Shadow Markov triples over dual integers.

The equation X^2 + Y^2 + Z^2 = (3 - 2*eps) X Y Z has the unit solution
(1, 1+eps, 1+eps); Vieta moves generate a full tree of dual solutions
whose value parts are the classical Markov numbers.  Along the
Fibonacci branch the shadows are OEIS A238846.
"""

from topograph import (
    DualInt,
    fibonacci_branch_maxima,
    fibonacci_branch_shadow,
    markov_tree,
    shadow_markov_tree,
)

print("integer Markov tree, depth 2:")
for word, t in markov_tree(2).items():
    print(f"  {word or '(root)':6} {t.as_tuple()}")

print("\nshadow Markov tree, depth 2 (value parts project onto the above):")
for word, t in shadow_markov_tree(2).items():
    print(f"  {word or '(root)':6} ({t.x}, {t.y}, {t.z})")

print("\nFibonacci branch:")
print("  values :", fibonacci_branch_maxima(9))
print("  shadows:", fibonacci_branch_shadow(9), "(OEIS A238846)")

coeff = DualInt(3, -2)
tree = shadow_markov_tree(10)
assert all(t.x * t.x + t.y * t.y + t.z * t.z == coeff * t.x * t.y * t.z
           for t in tree.values())
print(f"\nall {len(tree)} nodes to depth 10 satisfy the dual equation exactly")
