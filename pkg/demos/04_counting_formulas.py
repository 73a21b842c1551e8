"""Walkthrough: the algebraic counting layer and its cross-validation.

Triangles come from three-term recurrences, order sequences from the
tribonacci recurrence, and the same sequences again from a rational
generating function and from its partial-fraction closed form over the
roots of x^3 + x^2 + x - 1.  Product orders use the join/corona/ladder
formulas.  Everything is checked here against brute-force enumeration.

Run:  python demos/04_counting_formulas.py
"""

from domgraph import (
    closed_d,
    closed_form_order,
    corona,
    corona_order,
    count_by_cardinality,
    cubic_closed_form,
    expand_gf,
    join,
    join_order,
    ladder,
    ladder_order,
    make_family,
    order_sequence,
    path_triangle,
    total_count,
)
from domgraph.counting import PATH_FORMULAS, PATH_ORDER_GF

print("=== the path triangle d(P_n, j) ===")
table = path_triangle(8)
for n in range(1, 9):
    row = table.row(n)
    assert row == count_by_cardinality(make_family("path", n))
    print(f"  n={n}: {' '.join(str(c) for c in row)}   (sum {table.row_sum(n)})")

print()
print("=== one sequence, three routes ===")
seq = order_sequence("path", 12)
gf = expand_gf(PATH_ORDER_GF, 12)
roots = [closed_form_order("path", n) for n in range(1, 13)]
print("tribonacci :", seq)
print("gen. func. :", gf)
print("root form  :", roots)
assert seq == gf == roots

form = cubic_closed_form("path")
print("cubic roots:", [f"{t:.6f}" for t in form.roots])

print()
print("=== polynomial shortcuts for single triangle entries ===")
for case in ("d(P3n,n)", "d(P3n+1,n+1)", "d(P3n+2,n+2)"):
    values = [closed_d(case, n) for n in range(1, 7)]
    print(f"  {case:<14} {PATH_FORMULAS[case].description}")
    print(f"  {'':<14} n=1..6 -> {values}")

print()
print("=== product orders vs brute force ===")
g, h = make_family("cycle", 3), make_family("path", 2)
dg, dh = total_count(g), total_count(h)
print("join  C_3 + P_2 :", join_order(3, 2, dg, dh), "==", total_count(join(g, h)))
print("corona C_3 o P_2:", corona_order(3, 2, dh), "==", total_count(corona(g, h)))
orders = ladder_order(8)
print("ladders L_1..L_8:", orders)
assert all(orders[n - 1] == total_count(ladder(n)) for n in range(1, 9))
