"""The stationary Mordell solution (1,1,1) and its shadow orbits.

Dual solutions (1 + a*eps, 1 + b*eps, 1 + c*eps) move under the Vieta
rule by c' = 2(a+b) - c on the shadows -- which is exactly Conway's
arithmetic progression rule.  So the shadow orbit IS the topograph of
the quadratic form a x^2 + (c-a-b) x y + b y^2, node for node.
"""

from topograph import QuadForm, enumerate_topograph, special_orbit_shadow_tree

a, b, c = 1, 1, 3
orbit = special_orbit_shadow_tree(a, b, c, 3)
form = QuadForm(a, c - a - b, b)
topo = enumerate_topograph(form, 3)

print(f"starting shadows (a, b, c) = {(a, b, c)}  <->  form {form}")
print(f"{'word':6} {'shadow components':24} topograph triple")
for word, duals in orbit.items():
    shadows = tuple(v.sh for v in duals)
    triple = topo[word].triple.as_tuple()
    marker = "==" if shadows == triple else "!!"
    print(f"{word or '(root)':6} {str(shadows):24} {marker} {triple}")

deep_topo = enumerate_topograph(form, 10)
mismatch = sum(
    tuple(v.sh for v in duals) != deep_topo[w].triple.as_tuple()
    for w, duals in special_orbit_shadow_tree(a, b, c, 10).items())
print(f"\ndepth 10: {mismatch} mismatches out of {len(deep_topo)} checked nodes")
