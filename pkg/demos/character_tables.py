"""
Character tables, spectra and prime graphs
==========================================

The shipped fixtures are small alternating and symmetric groups.
"""

from helpline.fixtures import load_fixture
from helpline.tables import prime_graph, spectrum, validate

a5 = load_fixture("a5")
print(a5.group_name, "order", a5.order)
print("classes:", [c.name for c in a5.classes])
for row in a5.irreducibles:
    print("  ", [str(v) for v in row])

# orthogonality and power maps are checked exactly
for line in validate(a5).lines():
    print(line)

# the prime graph only looks at element orders
for name in ("a5", "a6", "a7", "s5", "s7"):
    t = load_fixture(name)
    print(f"{t.group_name}: spectrum {sorted(spectrum(t))}, {prime_graph(t)}")

# power maps compose: the class of g^6 for every class of S7
s7 = load_fixture("s7")
print([s7.classes[j].name for j in s7.power_map(6)])
