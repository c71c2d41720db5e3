"""The Conway river of an indefinite form.

For D = h^2 - 4ab > 0 (not a square) the topograph splits into a
positive and a negative territory, separated by a unique bi-infinite
periodic edge path: the river.  Along the river the form's values stay
bounded, so growth there is flat.
"""

from topograph import QuadForm, find_river, river_growth_exponent, sign_change_edges

q = QuadForm(17, -12, 2)
river = find_river(q)

print(f"form {q}, discriminant {q.discriminant}")
print(f"river period: {river.period!r} (length {len(river.period)})")
print(f"{'left region':>12} {'right region':>13} {'values':>12}")
for edge in river.states:
    print(f"{edge.left.farey():>12} {edge.right.farey():>13} "
          f"{f'({edge.left_value}, {edge.right_value})':>12}")

scan = sign_change_edges(q, 12)
print(f"\nbrute-force scan to depth 12 finds {len(scan)} sign-separating edges,")
print("all of which lie on the river (see tests/test_river.py for the check).")

print(f"\ngrowth exponent along 20 river periods: "
      f"{river_growth_exponent(q, repeats=20):.6f} (flat, as the values cycle)")

print("\nthe same river found for the equivalent form x^2 - 2y^2:")
print(f"  period {find_river(QuadForm(1, 0, -2)).period!r}, "
      f"values {[ (e.left_value, e.right_value) for e in find_river(QuadForm(1, 0, -2)).states ]}")
