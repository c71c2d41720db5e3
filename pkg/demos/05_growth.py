"""Growth along topograph paths: the Lyapunov function of the Euclid tree.

Paths are addressed by continued fractions; the growth of the Euclid
triples along the path to xi defines Lambda(xi) = limsup ln(a_n)/n, with
spectrum [0, ln(phi)].  Form values grow like 2*Lambda, and the relative
growth of principal Mordell shadows recovers Lambda itself.
"""

import math

from topograph import (
    PathSpec,
    PellContext,
    QuadForm,
    lyapunov_estimate,
    lyapunov_exact_periodic,
    relative_shadow_growth,
    topograph_growth_exponent,
)

LN_PHI = math.log((1 + math.sqrt(5)) / 2)
print(f"ln(phi) = {LN_PHI:.12f}")

print("\nexact periodic values (spectral radius of the L/R matrix product):")
for word in ("LR", "LLRR", "L", "LLLR"):
    print(f"  {word:5} -> {lyapunov_exact_periodic(word):.12f}")

golden = PathSpec.golden()
print("\nwindowed estimates along the golden path (limit ln(phi)):")
for n in (20, 40, 80, 160):
    print(f"  n={n:<4} {lyapunov_estimate(golden, n).value:.6f}")

print("\na rational path runs along a tree edge, so its growth is zero:")
from fractions import Fraction
spec = PathSpec.from_fraction(Fraction(3, 7))
for n in (50, 200, 500):
    print(f"  n={n:<4} {lyapunov_estimate(spec, n).value:.6f}")

q = QuadForm(1, 1, 1)
print(f"\nvalues of {q} along the golden path grow at twice the rate:")
print(f"  exponent at n=40: {topograph_growth_exponent(q, golden, 40):.6f}"
      f"  (2 ln(phi) = {2 * LN_PHI:.6f})")

ctx = PellContext.for_d(2, 1)
print("\nrelative growth of principal Mordell shadows (d=2) recovers ln(phi):")
for n in (10, 20, 30):
    print(f"  n={n:<3} {relative_shadow_growth(ctx, golden, n):.6f}")
