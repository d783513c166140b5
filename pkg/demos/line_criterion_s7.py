"""
Brauer-tree lines in S7
=======================

The principal 7-block of S7 has seven characters arranged on a line. Their
alternating sum nu vanishes off the 7-singular classes, and that rules out
units of order 14, 21 and 35.
"""

from helpline.fixtures import load_fixture, load_fixture_blocks
from helpline.tree_criterion import apply_criterion, check_hypotheses, nu_values

s7 = load_fixture("s7")
line = next(l for l in load_fixture_blocks("s7") if l.prime == 7)

print("line (row indices):", line.character_indices)
print("degrees:", [s7.degree(i) for i in line.character_indices])

nu = nu_values(s7, line)
for c, v in zip(s7.classes, nu):
    print(f"  nu({c.name}) = {v}")

print(check_hypotheses(s7, line).to_json())

for q in (2, 3, 5):
    res = apply_criterion(s7, line, q)
    print(f"q = {q}: {res.verdict}  ({res.annotation})")
