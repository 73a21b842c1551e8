"""Walkthrough: building graphs and the four product constructions.

Run:  python demos/01_graphs_and_products.py
"""

from domgraph import cartesian, corona, join, ladder, make_family, to_dot, to_json


def show(name, g):
    degs = g.degree_sequence()
    print(f"{name:<16} n={g.n:<3} m={g.m:<3} degrees {min(degs)}..{max(degs)}")


print("=== named families (vertices are labeled 1..n) ===")
for kind in ("path", "cycle", "complete", "empty"):
    g = make_family(kind, 5)
    show(f"{kind}(5)", g)
print("P_4 edge list:", make_family("path", 4).edges_1based())

print()
print("=== products ===")
p3, k2, o2 = make_family("path", 3), make_family("complete", 2), make_family("empty", 2)

# join: disjoint union plus all cross edges; O_2 + O_2 is the 4-cycle K_{2,2}
show("O_2 + O_2", join(o2, o2))

# corona: each vertex of the first factor picks up a private copy of the second
show("P_3 o K_2", corona(p3, k2))

# cartesian product and the ladder shorthand L_n = P_n box K_2
show("P_3 box K_2", cartesian(p3, k2))
show("ladder(3)", ladder(3))
assert ladder(3).edges == cartesian(p3, k2).edges

print()
print("=== serialization ===")
print("JSON:", to_json(make_family("cycle", 4)))
print("DOT:")
print(to_dot(make_family("path", 3)), end="")
