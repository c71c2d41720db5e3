"""Mordell triples from Pell's equation, and their principal shadows.

x^2 + y^2 + z^2 = 2xyz + 1 is solved by half-traces of powers of a Pell
unit: with xi = p + q*sqrt(d) and a Euclid index triple (a, b, a+b), the
triple is ((xi^a + eta^a)/2, ...).  The principal shadows are
m*a*q*U_a and make value + shadow*eps a dual solution.
"""

from topograph import (
    EuclidTriple,
    PellContext,
    mordell_triple,
    pell_fundamental,
    principal_shadow,
    shadow_vieta_mordell,
    vieta_mordell,
)

for d in (2, 3, 13):
    s = pell_fundamental(d)
    print(f"fundamental Pell solution for d={d}: p={s.p}, q={s.q}")

ctx = PellContext.for_d(2, m=1)
print("\nMordell triples for d=2 along small Euclid indices:")
for idx in ((0, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 5)):
    e = EuclidTriple(*idx)
    t = mordell_triple(ctx, e)
    s = principal_shadow(ctx, e)
    print(f"  index {idx}: value {t.as_tuple()}, shadow {s.shadow}")

print("\nVieta moves act on the index c = a+b by c -> a-b:")
t = mordell_triple(ctx, EuclidTriple(1, 2, 3))
print(f"  (P_1, P_2, P_3) = {t.as_tuple()} -> {vieta_mordell(t).as_tuple()} = (P_1, P_2, P_-1)")

s = principal_shadow(ctx, EuclidTriple(1, 2, 3))
moved = shadow_vieta_mordell(s)
print(f"  shadow {s.shadow} -> {moved.shadow} (matches the moved index exactly)")

dx, dy, dz = s.duals()
print(f"\ndual check: X^2+Y^2+Z^2 - 2XYZ - 1 = "
      f"{dx * dx + dy * dy + dz * dz - 2 * dx * dy * dz - 1}")
