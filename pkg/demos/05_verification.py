"""Walkthrough: the verification pipeline.

verify_suite replays every formula and structure statement against the
exhaustive enumeration oracle and returns records carrying both computed
values.  Status "erratum" marks published claims the oracle refutes; the
library follows the oracle in those cases and the records document the
gap (for example the cycle order seed 5 vs the enumerated 7, and the
counts of maximum-cardinality minimal dominating sets, which exceed the
claimed values from P_6, C_7, and C_8 on).

Run:  python demos/05_verification.py
"""

from domgraph import verify_suite

records = verify_suite("all", max_n=10, seed=0)

width = max(len(r.check) for r in records)
for r in records:
    print(f"{r.status.upper():<8} {r.check:<{width}} [{r.range}]")

print()
print("=== the errata in detail ===")
for r in records:
    if r.status != "pass":
        print(f"{r.check}:")
        print(f"  claimed : {r.expected}")
        print(f"  observed: {r.observed}")
        if r.note:
            print(f"  note    : {r.note}")
        print()

counts = {s: sum(1 for r in records if r.status == s) for s in ("pass", "erratum", "fail")}
print(f"{len(records)} checks: {counts['pass']} pass, "
      f"{counts['erratum']} erratum, {counts['fail']} fail")
assert counts["fail"] == 0
