"""Walkthrough: enumerating and counting dominating sets.

A set S dominates when every vertex is in S or adjacent to it.  The
enumerator has two independent routes (full scan and branch-and-prune)
that must produce the same family; both appear below.

Run:  python demos/02_dominating_sets.py
"""

from domgraph import (
    count_by_cardinality,
    count_maximal_minimal_sets,
    count_minimum_sets,
    domination_number,
    enumerate_dominating,
    is_dominating,
    is_minimal_dominating,
    make_family,
    total_count,
    upper_domination_number,
)

p6 = make_family("path", 6)

print("=== membership tests on P_6 ===")
for sample in ([2, 5], [1, 4], [1, 3, 5], [2, 3, 5, 6]):
    flags = []
    if is_dominating(p6, sample):
        flags.append("dominating")
        if is_minimal_dominating(p6, sample):
            flags.append("minimal")
    print(f"  {sample}: {' and '.join(flags) or 'not dominating'}")

print()
print("=== the full family for P_6 ===")
fam_fast = enumerate_dominating(p6, 6, method="prune")
fam_oracle = enumerate_dominating(p6, 6, method="scan")
assert fam_fast == fam_oracle, "the two enumeration routes must agree"
print(f"{len(fam_fast)} dominating sets; counts by cardinality: {fam_fast.by_card}")
print("the smallest ones:", [list(s.vertices()) for s in fam_fast.sets[:4]])

print()
print("=== invariants of P_6 ===")
print("gamma  (domination number)      :", domination_number(p6))
print("Gamma  (upper domination number):", upper_domination_number(p6))
print("gamma-sets                      :", count_minimum_sets(p6))
print("Gamma-sets                      :", count_maximal_minimal_sets(p6))
print("total dominating sets           :", total_count(p6))
print("d(P_6, j) for j = 0..6          :", count_by_cardinality(p6))

print()
print("=== the count is odd for every connected graph ===")
for kind, n in (("path", 9), ("cycle", 9), ("complete", 9)):
    print(f"  {kind}(9): {total_count(make_family(kind, n))}")
