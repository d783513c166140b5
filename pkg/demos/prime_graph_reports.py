"""
Prime Graph Question reports
============================

For each pair of primes: is there an element of order pq, and if not, can
units of order pq in V(ZG) be excluded?
"""

from helpline.fixtures import load_fixture, load_fixture_blocks
from helpline.verdict import pq_report

for name in ("a5", "a6", "a7", "s5", "s7"):
    table = load_fixture(name)
    try:
        blocks = load_fixture_blocks(name)
    except FileNotFoundError:
        blocks = []
    print(pq_report(table, blocks).to_text())
    print()
