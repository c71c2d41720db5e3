"""Walk a Conway topograph by hand.

A binary quadratic form takes the values (a, b, a+b+h) on the root
superbase, and every other value follows from the arithmetic progression
rule z' = 2(x + y) - z.  This script propagates the hexagonal form
x^2 + xy + y^2, checks the propagated values against direct evaluation
on the region vectors, and prints the tree.
"""

from topograph import QuadForm, enumerate_topograph, values_along_path

q = QuadForm(1, 1, 1)
print(f"form: {q}, discriminant {q.discriminant}")
print(f"root triple: {q.root_triple().as_tuple()}")

print("\nvalues along the word LRLR (each step replaces one region):")
for k, t in enumerate(values_along_path(q, "LRLR")):
    print(f"  step {k}: {t.as_tuple()}")

print("\ncomplete tree to depth 3, with Farey labels of the new region:")
for word, node in enumerate_topograph(q, 3).items():
    new_region = node.regions[2]
    check = "ok" if q(*new_region.as_tuple()) == node.triple.z else "MISMATCH"
    print(f"  {word or '(root)':6} {node.triple.as_tuple()}  "
          f"new region {new_region.farey():>5}  [{check}]")

print("\nevery propagated value equals the form evaluated on its region:")
tree = enumerate_topograph(q, 8)
checked = sum(
    q(*node.regions[i].as_tuple()) == node.triple.as_tuple()[i]
    for node in tree.values() for i in range(3))
print(f"  {checked} of {3 * len(tree)} entries verified exactly")
