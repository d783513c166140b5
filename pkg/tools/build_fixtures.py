"""Regenerate the shipped character-table fixtures for A5, A6, A7, S5, S7.

Classes and power maps come from enumerating the permutations themselves.
Character values of S_n come from the Murnaghan-Nakayama rule; A_n tables are
restrictions, with the split characters of self-conjugate partitions given by
(eps +- sqrt(eps * prod(hooks))) / 2 on the split classes.  Every generated
table must pass ``helpline.tables.validate`` before it is written.

    python tools/build_fixtures.py
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations
from math import lcm, prod
from pathlib import Path

from helpline.cyclo import CyclotomicNumber, quadratic_surd
from helpline.tables import parse_table, validate
from helpline.tree_criterion import check_hypotheses, parse_blocks

OUT = Path(__file__).resolve().parents[1] / "src" / "helpline" / "fixtures"


def compose(a, b):
    """(a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def power(a, r):
    out = tuple(range(len(a)))
    for _ in range(r):
        out = compose(a, out)
    return out


def cycle_type(a):
    seen = set()
    lengths = []
    for start in range(len(a)):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = a[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_even(a):
    return sum(l - 1 for l in cycle_type(a)) % 2 == 0


def element_order(a):
    o = 1
    for l in cycle_type(a):
        o = lcm(o, l)
    return o


def canonical_rep(ctype, n):
    perm = list(range(n))
    start = 0
    for l in ctype:
        for i in range(l):
            perm[start + i] = start + (i + 1) % l
        start += l
    return tuple(perm)


def partitions(n, maxpart=None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def conjugate_partition(lam):
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0])) if lam else ()


@lru_cache(maxsize=None)
def mn_character(lam, rho):
    """Murnaghan-Nakayama via bead moves on the beta-set of lam."""
    if not rho:
        return 1 if sum(lam) == 0 else 0
    r = rho[0]
    k = len(lam)
    beta = {lam[i] + (k - 1 - i) for i in range(k)}
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            height = sum(1 for c in beta if b - r < c < b)
            new_beta = sorted((beta - {b}) | {b - r}, reverse=True)
            new_lam = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
            new_lam = tuple(x for x in new_lam if x > 0)
            total += (-1) ** height * mn_character(new_lam, rho[1:])
    return total


def remove_hooks(lam, r):
    """(core, leg length) for every rim r-hook of lam."""
    k = len(lam)
    beta = {lam[i] + (k - 1 - i) for i in range(k)}
    out = []
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            leg = sum(1 for c in beta if b - r < c < b)
            new_beta = sorted((beta - {b}) | {b - r}, reverse=True)
            core = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
            out.append((tuple(x for x in core if x > 0), leg))
    return out


def principal_line(n, p):
    """Partitions of the principal p-block of S_n (weight one), ordered by leg length of the p-hook."""
    core = (n - p,) if n > p else ()
    members = []
    for lam in partitions(n):
        for c, leg in remove_hooks(lam, p):
            if c == core:
                members.append((leg, lam))
    members.sort()
    assert len(members) == p, (n, p, members)
    return [lam for _, lam in members]


def diagonal_hooks(lam):
    conj = conjugate_partition(lam)
    return tuple(lam[i] + conj[i] - 2 * i - 1 for i in range(len(lam)) if lam[i] > i)


def classes_of(elements, generators):
    index = {}
    orbits = []
    for g in elements:
        if g in index:
            continue
        cid = len(orbits)
        orbit = [g]
        index[g] = cid
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for s in generators:
                y = compose(compose(s, x), inverse(s))
                if y not in index:
                    index[y] = cid
                    orbit.append(y)
                    frontier.append(y)
        orbits.append(orbit)
    return orbits, index


def build(n, alternating):
    elements = [p for p in permutations(range(n)) if not alternating or is_even(p)]
    if alternating:
        gens = [canonical_rep((3,), n)] + [
            tuple((i + 1 if x == i else i + 2 if x == i + 1 else i if x == i + 2 else x) for x in range(n))
            for i in range(1, n - 2)
        ]
    else:
        gens = [canonical_rep((2,), n), canonical_rep((n,), n)]
    orbits, index = classes_of(elements, gens)
    assert sum(len(o) for o in orbits) == len(elements)

    info = []
    for cid, orbit in enumerate(orbits):
        ctype = cycle_type(orbit[0])
        rep = canonical_rep(ctype, n)
        if index[rep] == cid:
            sign = +1
        else:
            sign = -1
            # the class of the canonical rep is the "+" class; pick any member as rep
            rep = orbit[0]
        info.append({"cid": cid, "ctype": ctype, "rep": rep, "size": len(orbit),
                     "order": element_order(rep), "sign": sign})

    if alternating:
        info.sort(key=lambda c: (c["order"], c["size"], -c["sign"], c["ctype"]))
    else:
        # partitions ascending as non-increasing tuples: 1^n, 2 1^(n-2), 2^2 1^(n-4), ...
        info.sort(key=lambda c: c["ctype"])
    names = []
    counters = {}
    for c in info:
        letter = counters.get(c["order"], 0)
        counters[c["order"]] = letter + 1
        names.append(f"{c['order']}{chr(ord('a') + letter)}")
    pos = {c["cid"]: i for i, c in enumerate(info)}

    primes = sorted({p for c in info for p in _primes(c["order"])})
    power_maps = {}
    for r in primes:
        power_maps[str(r)] = [pos[index[power(c["rep"], r)]] for c in info]

    rows = []
    lams = list(partitions(n))
    if not alternating:
        for lam in lams:
            rows.append((lam, [CyclotomicNumber.rational(mn_character(lam, c["ctype"])) for c in info]))
    else:
        done = set()
        for lam in lams:
            conj = conjugate_partition(lam)
            if lam in done:
                continue
            done.update({lam, conj})
            base = [mn_character(lam, c["ctype"]) for c in info]
            if lam != conj:
                rows.append((lam, [CyclotomicNumber.rational(v) for v in base]))
                continue
            hooks = diagonal_hooks(lam)
            eps = (-1) ** ((n - len(hooks)) // 2)
            root = quadratic_surd(eps * prod(hooks))
            for branch in (+1, -1):
                vals = []
                for c in info:
                    if c["ctype"] == tuple(sorted(hooks, reverse=True)):
                        vals.append((root * (branch * c["sign"]) + eps) / 2)
                    else:
                        vals.append(CyclotomicNumber.rational(base[info.index(c)]) / 2)
                rows.append((lam + (("+",) if branch > 0 else ("-",)), vals))

    def row_key(item):
        lam, vals = item
        return (any(v != 1 for v in vals), vals[0].to_fraction(), [str(x) for x in lam])

    rows.sort(key=row_key)
    name = ("A" if alternating else "S") + str(n)
    order = len(elements)
    doc = {
        "groupName": name,
        "order": order,
        "classes": [{"name": nm, "size": c["size"], "elementOrder": c["order"]} for nm, c in zip(names, info)],
        "powerMaps": power_maps,
        "irreducibles": [[v.to_json() for v in vals] for _, vals in rows],
    }
    labels = [lam for lam, _ in rows]
    return doc, labels, info


LINE_PRIMES = {"A5": [3], "A7": [5], "S5": [3, 5], "S7": [5, 7]}


def block_doc(doc, labels, n, alternating):
    blocks = []
    for p in LINE_PRIMES.get(doc["groupName"], []):
        order = []
        for lam in principal_line(n, p):
            for key in (lam, conjugate_partition(lam)) if alternating else (lam,):
                if key in labels:
                    order.append(labels.index(key))
                    break
            else:
                raise SystemExit(f"{doc['groupName']}: no row for {lam}")
        blocks.append({"prime": p, "principal": True, "exceptionalMultiplicity": 1, "lineOrder": order})
    return {"groupName": doc["groupName"], "blocks": blocks} if blocks else None


def _primes(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for n, alt in [(5, True), (6, True), (7, True), (5, False), (7, False)]:
        doc, labels, info = build(n, alt)
        table = parse_table(doc)
        report = validate(table)
        if not report.ok:
            raise SystemExit(f"{doc['groupName']}: " + "; ".join(report.lines()))
        path = OUT / f"{doc['groupName'].lower()}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        print(path.name, [c["name"] for c in doc["classes"]], ["".join(map(str, l)) for l in labels])
        blocks = block_doc(doc, labels, n, alt)
        if blocks:
            for line in parse_blocks(blocks):
                hyp = check_hypotheses(table, line)
                if not hyp.applicable:
                    raise SystemExit(f"{doc['groupName']} p={line.prime}: {hyp.to_json()}")
            bpath = OUT / f"{doc['groupName'].lower()}.blocks.json"
            bpath.write_text(json.dumps(blocks, indent=1) + "\n")
            print(bpath.name, [(b["prime"], b["lineOrder"]) for b in blocks["blocks"]])


if __name__ == "__main__":
    main()
