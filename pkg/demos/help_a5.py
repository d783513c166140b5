"""
The HeLP method on A5
=====================

Could V(ZA5) contain a unit of order 6, 10 or 15? A5 has no such elements.
"""

from helpline.fixtures import load_fixture
from helpline.help_engine import check_order, explain_infeasibility

a5 = load_fixture("a5")

for n in (2, 3, 5):
    r = check_order(a5, n)
    tuples = [{a5.classes[c].name: v for c, v in s["pa"]} for s in r.surviving()]
    print(f"order {n}: {tuples}")

# mixed orders: every scenario for the powers of u is ruled out
for n in (6, 10, 15):
    r = check_order(a5, n)
    print(f"order {n}: {r.verdict} over {len(r.scenarios)} power scenario(s)")
    for s in r.scenarios:
        print("   constraints", s.system.provenance_counts(),
              "-> first decisive family:", explain_infeasibility(s.system))

# A6 is the classical case where plain HeLP is not enough
a6 = load_fixture("a6")
r = check_order(a6, 6)
for s in r.surviving():
    print("A6 order 6 survivor:", {a6.classes[c].name: v for c, v in s["pa"]})
