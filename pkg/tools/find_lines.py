"""Search the fixture tables for line orderings of principal p-blocks.

For each prime p with a Sylow subgroup of order p, list every ordering
chi_1 = 1, chi_2, ..., chi_p (up to reversal of the tail) whose alternating
sum vanishes on the p-regular classes.  Used once to write the *.blocks.json
fixtures; the orderings it prints are cross-checked against the p-core /
hook-leg description for symmetric groups in the test suite.
"""

import sys
from itertools import combinations, permutations

from helpline.fixtures import load_fixture
from helpline.tree_criterion import BrauerLine, check_hypotheses


def candidate_lines(table, p):
    others = range(1, len(table.irreducibles))
    for subset in combinations(others, p - 1):
        for perm in permutations(subset):
            line = BrauerLine(p, (0,) + perm)
            if check_hypotheses(table, line).line_verified:
                yield line


def main(names):
    for name in names:
        table = load_fixture(name)
        for p in table.primes:
            if p == 2 or (table.order // p) % p == 0:
                continue
            found = list(candidate_lines(table, p))
            for line in found:
                hyp = check_hypotheses(table, line)
                print(name, p, line.character_indices, hyp.to_json())


if __name__ == "__main__":
    main(sys.argv[1:] or ["a5", "a6", "a7", "s5"])
