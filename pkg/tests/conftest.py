from itertools import permutations
from math import lcm

import pytest

from helpline.cyclo import root_of_unity
from helpline.fixtures import load_fixture, load_fixture_blocks
from helpline.tables import parse_table


@pytest.fixture(scope="session")
def tables():
    return {name: load_fixture(name) for name in ("a5", "a6", "a7", "s5", "s7")}


@pytest.fixture(scope="session")
def blocks():
    return {name: load_fixture_blocks(name) for name in ("a5", "a6", "a7", "s5", "s7")}


def line_for(blocks, name, p):
    return next(l for l in blocks[name] if l.prime == p)


# -- permutation oracle ---------------------------------------------------------

def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        n, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def perm_order(perm):
    o = 1
    for l in cycle_type(perm):
        o = lcm(o, l)
    return o


def is_even(perm):
    return sum(l - 1 for l in cycle_type(perm)) % 2 == 0


def group_elements(n, alternating):
    return [p for p in permutations(range(n)) if not alternating or is_even(p)]


def conjugacy_classes(elements):
    """Brute-force orbits of the conjugation action."""
    elems = set(elements)
    seen = set()
    classes = []

    def conj(g, x):
        inv = [0] * len(g)
        for i, v in enumerate(g):
            inv[v] = i
        return tuple(g[x[inv[i]]] for i in range(len(g)))

    for x in elements:
        if x in seen:
            continue
        orbit = {conj(g, x) for g in elements}
        assert orbit <= elems
        seen |= orbit
        classes.append(orbit)
    return classes


def cyclic_table(n):
    """Character table of the cyclic group of order n, classes sorted by element order."""
    from math import gcd

    ks = sorted(range(n), key=lambda k: (n // gcd(n, k), k))
    classes = [{"name": f"g{k}", "size": 1, "elementOrder": n // gcd(n, k)} for k in ks]
    pos = {k: i for i, k in enumerate(ks)}
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]
    doc = {
        "groupName": f"C{n}",
        "order": n,
        "classes": classes,
        "powerMaps": {str(p): [pos[(k * p) % n] for k in ks] for p in primes},
        "irreducibles": [[root_of_unity(n, j * k).to_json() for k in ks] for j in range(n)],
    }
    return parse_table(doc)


# -- acceptance report ---------------------------------------------------------

ACCEPTANCE_LOG = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(line[1])
