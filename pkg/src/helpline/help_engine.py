"""Partial-augmentation constraint systems for torsion units of V(ZG).

A hypothetical normalized unit u of order n is described by its partial
augmentations eps_x(u^d) for every divisor d of n.  The power layers d > 1 are
solved first (recursively, order n/d) and fixed as a *scenario*; the top layer
is then an integer feasibility problem:

* augmentation: sum of eps_x(u) over admissible classes is 1;
* Berman-Higman / order divisibility: only classes of order dividing n, other
  than the identity, carry variables;
* Wagner and folklore congruences modulo every prime p dividing n;
* for each irreducible character and each n-th root of unity xi, the
  eigenvalue multiplicity mu(xi, u, chi) is a nonnegative integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd
from typing import Callable, Iterable, Mapping, Sequence

from .cyclo import CyclotomicNumber, _prime_factors, root_of_unity, units_mod
from .lp import UnboundedRelaxation, variable_bounds
from .tables import CharacterTable

AUGMENTATION = "augmentation"
BERMAN_HIGMAN = "berman-higman"
WAGNER = "wagner"
FOLKLORE = "folklore"
MU_INTEGRAL = "multiplicity-integrality"
MU_NONNEGATIVE = "multiplicity-nonnegativity"
TREE_INEQUALITY = "tree-inequality"

PROVENANCE_ORDER = (AUGMENTATION, BERMAN_HIGMAN, MU_NONNEGATIVE, MU_INTEGRAL, WAGNER, FOLKLORE, TREE_INEQUALITY)

# a PA tuple: sorted ((class index, partial augmentation), ...) with zero entries dropped
PATuple = tuple[tuple[int, int], ...]
# a scenario: divisor d > 1 of n -> PA tuple of u^d
Scenario = Mapping[int, PATuple]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def pa_tuple(values: Mapping[int, int]) -> PATuple:
    return tuple(sorted((c, int(v)) for c, v in values.items() if v))


# -- affine forms and constraints ---------------------------------------------

@dataclass(frozen=True)
class AffineForm:
    """const + sum(coeffs[c] * eps_c(u))."""

    coeffs: tuple[tuple[int, Fraction], ...]
    const: Fraction

    @classmethod
    def build(cls, coeffs: Mapping[int, Fraction], const=0) -> AffineForm:
        return cls(tuple(sorted((c, Fraction(v)) for c, v in coeffs.items() if v)), Fraction(const))

    def evaluate(self, assignment: Mapping[int, int]) -> Fraction:
        return self.const + sum((a * assignment.get(c, 0) for c, a in self.coeffs), Fraction(0))

    def __add__(self, other: AffineForm) -> AffineForm:
        acc = dict(self.coeffs)
        for c, a in other.coeffs:
            acc[c] = acc.get(c, 0) + a
        return AffineForm.build(acc, self.const + other.const)

    def scale(self, s) -> AffineForm:
        return AffineForm.build({c: a * s for c, a in self.coeffs}, self.const * s)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)


@dataclass(frozen=True)
class Constraint:
    """``form == 0``, ``form >= 0`` or ``form == 0 (mod modulus)``."""

    form: AffineForm
    relation: str  # "eq", "ge", "mod"
    provenance: str
    label: str = ""
    modulus: int | None = None

    def holds(self, assignment: Mapping[int, int]) -> bool:
        v = self.form.evaluate(assignment)
        if self.relation == "eq":
            return v == 0
        if self.relation == "ge":
            return v >= 0
        return v.denominator == 1 and v.numerator % self.modulus == 0

    def variables(self) -> set[int]:
        return {c for c, _ in self.form.coeffs}


# -- building blocks -----------------------------------------------------------

def admissible_classes(table: CharacterTable, n: int) -> list[int]:
    """Classes that may carry a nonzero partial augmentation for a unit of order n."""
    if n == 1:
        return [0]
    return [i for i, c in enumerate(table.classes) if c.element_order > 1 and n % c.element_order == 0]


def character_value(table: CharacterTable, row: int, pa: PATuple) -> CyclotomicNumber:
    """chi(v) = sum eps_x(v) chi(x) for a unit v with the given partial augmentations."""
    total = CyclotomicNumber.rational(0)
    for c, e in pa:
        total = total + table.value(row, c) * e
    return total


@lru_cache(maxsize=None)
def _twisted_trace(value: CyclotomicNumber, m: int, e: int) -> Fraction:
    """Tr_{Q(zeta_m)/Q}(value * zeta_m**e)."""
    return (value * root_of_unity(m, e)).trace(m)


def multiplicity_form(table: CharacterTable, row: int, n: int, xi: int, scenario: Scenario) -> AffineForm:
    """mu(zeta_n**xi, u, chi_row) as an affine form in the top-layer partial augmentations.

    mu = (1/n) sum_{d | n} Tr_{Q(zeta_{n/d})/Q}(chi(u^d) * xi^(-d)); only the
    d = 1 term involves unknowns.
    """
    coeffs = {}
    for c in admissible_classes(table, n):
        coeffs[c] = Fraction(_twisted_trace(table.value(row, c), n, -xi), n)
    const = Fraction(0)
    for d in divisors(n)[1:]:
        m = n // d
        if d == n:
            const += table.value(row, 0).to_fraction()
            continue
        if d not in scenario:
            raise KeyError(f"scenario is missing the layer u^{d}")
        # xi**(-d) = zeta_{n/d}**(-xi)
        const += _twisted_trace(character_value(table, row, scenario[d]), m, -xi)
    const /= n
    return AffineForm.build(coeffs, const)


@lru_cache(maxsize=None)
def _fixing_group(table: CharacterTable, row: int, modulus: int) -> list[int]:
    """Units k mod `modulus` whose Galois automorphism fixes every value of the character."""
    f = 1
    for v in table.irreducibles[row]:
        c = v.reduce_conductor().conductor
        f = f * c // gcd(f, c)
    big = modulus * f // gcd(modulus, f)
    return sorted({k % modulus for k in units_mod(big) if all(v.galois(k) == v for v in table.irreducibles[row])})


def xi_transversal(table: CharacterTable, row: int, n: int) -> list[int]:
    """Smallest exponent from each orbit of mu_n under the automorphisms fixing Q(chi)."""
    group = _fixing_group(table, row, n) if n > 1 else [0]
    seen = set()
    reps = []
    for e in range(n):
        if e in seen:
            continue
        reps.append(e)
        seen.update((e * k) % n for k in group)
    return reps


def congruence_constraints(table: CharacterTable, n: int, p: int, scenario: Scenario) -> list[Constraint]:
    """Wagner's congruence for p and the folklore congruence linking u to u^p."""
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    top = admissible_classes(table, n)
    out = []
    if n != p:
        order_p = [c for c in top if table.classes[c].element_order == p]
        if order_p:
            out.append(Constraint(AffineForm.build({c: 1 for c in order_p}), "mod", WAGNER,
                                  f"sum over classes of order {p}", modulus=p))
    lower = dict(scenario[p]) if p < n else {0: 1}
    pmap = table.power_map(p)
    for x in admissible_classes(table, n // p):
        if n // p == 1:
            continue  # u^p = 1: the congruence is the augmentation itself
        preimages = {y: -1 for y in top if pmap[y] == x}
        out.append(Constraint(AffineForm.build(preimages, lower.get(x, 0)), "mod", FOLKLORE,
                              f"eps_{table.classes[x].name}(u^{p})", modulus=p))
    return out


@dataclass
class PASystem:
    table: CharacterTable
    n: int
    variables: list[int]
    scenario: dict[int, PATuple]
    constraints: list[Constraint]

    def provenance_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for c in self.constraints:
            counts[c.provenance] = counts.get(c.provenance, 0) + 1
        return {k: counts[k] for k in PROVENANCE_ORDER if k in counts}

    def restricted(self, provenances: Iterable[str]) -> PASystem:
        keep = set(provenances)
        return PASystem(self.table, self.n, self.variables, self.scenario,
                        [c for c in self.constraints if c.provenance in keep])

    def with_constraints(self, extra: Sequence[Constraint]) -> PASystem:
        return PASystem(self.table, self.n, self.variables, self.scenario, self.constraints + list(extra))

    def satisfied_by(self, assignment: Mapping[int, int]) -> list[Constraint]:
        """Constraints violated by the assignment (empty list when it is a solution)."""
        return [c for c in self.constraints if not c.holds(assignment)]


def build_system(table: CharacterTable, n: int, scenario: Scenario) -> PASystem:
    if n == 1:
        return PASystem(table, 1, [0], {}, [Constraint(AffineForm.build({0: 1}, -1), "eq", AUGMENTATION)])
    variables = admissible_classes(table, n)
    scenario = dict(scenario)
    constraints = [Constraint(AffineForm.build({c: 1 for c in variables}, -1), "eq", AUGMENTATION,
                              "sum of partial augmentations")]
    for p in _prime_factors(n):
        constraints.extend(congruence_constraints(table, n, p, scenario))
    seen = set()
    for row in range(len(table.irreducibles)):
        for xi in xi_transversal(table, row, n):
            form = multiplicity_form(table, row, n, xi, scenario)
            label = f"chi_{row}, xi=zeta_{n}^{xi}"
            if (form, "ge") not in seen:
                seen.add((form, "ge"))
                constraints.append(Constraint(form, "ge", MU_NONNEGATIVE, label))
            scaled = form.scale(n)
            if (scaled, "mod") not in seen and not _always_integral(form):
                seen.add((scaled, "mod"))
                constraints.append(Constraint(scaled, "mod", MU_INTEGRAL, label, modulus=n))
    return PASystem(table, n, variables, scenario, constraints)


def _always_integral(form: AffineForm) -> bool:
    return form.const.denominator == 1 and all(a.denominator == 1 for _, a in form.coeffs)


# -- solving --------------------------------------------------------------------

@dataclass
class PASolutionSet:
    variables: list[int]
    solutions: list[tuple[int, ...]]
    exhaustive: bool
    bounds: list[tuple[int, int]] | None = None
    note: str = ""

    def __bool__(self):
        return bool(self.solutions)

    def as_tuples(self) -> list[PATuple]:
        return [pa_tuple(dict(zip(self.variables, s))) for s in self.solutions]


def _linear_rows(system: PASystem, free: list[int], last: int):
    """Rewrite eq/ge constraints with eps_last = 1 - sum(free) as rows a.x <= b."""
    a_ub, b_ub, forms = [], [], []
    for con in system.constraints:
        if con.relation == "mod":
            continue
        coeffs = dict(con.form.coeffs)
        a_last = coeffs.pop(last, Fraction(0))
        const = con.form.const + a_last
        row = [coeffs.get(v, Fraction(0)) - a_last for v in free]
        # form = const + row.x
        if con.relation == "ge":
            a_ub.append([-a for a in row]); b_ub.append(const)
            forms.append((row, const))
        else:
            a_ub.append([-a for a in row]); b_ub.append(const)
            a_ub.append(row); b_ub.append(-const)
            forms.append((row, const))
            forms.append(([-a for a in row], -const))
    return a_ub, b_ub, forms


def solve(system: PASystem) -> PASolutionSet:
    """All integer solutions of the system.

    Bounds for each variable come from exact LP over the eq/ge relaxation,
    then a depth-first search with interval propagation enumerates the box.
    """
    variables = list(system.variables)
    if system.n == 1:
        return PASolutionSet([0], [(1,)], True, [(1, 1)])
    if not variables:
        return PASolutionSet([], [], True, [], note="no admissible classes")
    last = variables[-1]
    free = variables[:-1]
    a_ub, b_ub, forms = _linear_rows(system, free, last)

    if not free:
        assignment = {last: 1}
        ok = not system.satisfied_by(assignment)
        return PASolutionSet(variables, [(1,)] if ok else [], True, [(1, 1)])

    for row, const in forms:
        if not any(row) and const < 0:
            return PASolutionSet(variables, [], True, None, note="constant constraint violated")
    try:
        bounds = variable_bounds(a_ub, b_ub)
    except UnboundedRelaxation:
        return PASolutionSet(variables, [], False, None, note="relaxation unbounded; not enumerated")
    if bounds is None:
        return PASolutionSet(variables, [], True, None, note="relaxation infeasible")
    box = [(ceil(lo), floor(hi)) for lo, hi in bounds]
    last_lo = 1 - sum(hi for _, hi in box)
    last_hi = 1 - sum(lo for lo, _ in box)
    if any(lo > hi for lo, hi in box):
        return PASolutionSet(variables, [], True, box + [(last_lo, last_hi)], note="empty integer box")

    found = []
    mods = [c for c in system.constraints if c.relation == "mod"]
    _dfs(forms, box, found)
    solutions = []
    for values in found:
        full = dict(zip(free, values))
        full[last] = 1 - sum(values)
        if all(c.holds(full) for c in mods):
            solutions.append(tuple(full[v] for v in variables))
    solutions.sort()
    return PASolutionSet(variables, solutions, True, box + [(last_lo, last_hi)])


def _integer_forms(forms):
    """Scale each row by the lcm of its denominators so the search runs on ints."""
    out = []
    for row, const in forms:
        den = const.denominator
        for a in row:
            den = den * a.denominator // gcd(den, a.denominator)
        out.append(([int(a * den) for a in row], int(const * den)))
    return out


def _dfs(forms, box, found):
    """Enumerate integer points of the box with every form (const + row.x) >= 0."""
    forms = _integer_forms(forms)
    k = len(box)
    # tails[f][j]: largest possible contribution of variables j.. to form f
    tails = []
    for row, _ in forms:
        t = [0] * (k + 1)
        for j in range(k - 1, -1, -1):
            a = row[j]
            lo, hi = box[j]
            t[j] = t[j + 1] + max(a * lo, a * hi)
        tails.append(t)
    if any(const + t[0] < 0 for (_, const), t in zip(forms, tails)):
        return
    prefix = []

    def descend(partial):
        j = len(prefix)
        if j == k:
            found.append(tuple(prefix))
            return
        lo, hi = box[j]
        for (row, _), t, acc in zip(forms, tails, partial):
            a = row[j]
            if not a:
                continue
            rest = acc + t[j + 1]
            # a * x + rest >= 0
            if a > 0:
                lo = max(lo, -(rest // a))
            else:
                hi = min(hi, rest // -a)
        for v in range(lo, hi + 1):
            nxt = [acc + row[j] * v for (row, _), acc in zip(forms, partial)]
            if all(acc + t[j + 1] >= 0 for acc, t in zip(nxt, tails)):
                prefix.append(v)
                descend(nxt)
                prefix.pop()

    descend([const for _, const in forms])


def brute_force(system: PASystem, box: Sequence[tuple[int, int]], margin: int = 0) -> list[tuple[int, ...]]:
    """Check every integer point of the (widened) box against all constraints."""
    variables = list(system.variables)
    if not variables:
        return []
    ranges = [range(lo - margin, hi + margin + 1) for lo, hi in box[:-1]]
    out = []
    for values in itertools.product(*ranges):
        full = dict(zip(variables[:-1], values))
        full[variables[-1]] = 1 - sum(values)
        if not system.satisfied_by(full):
            out.append(tuple(full[v] for v in variables))
    return sorted(out)


# -- orchestration over the divisor lattice ------------------------------------------

Chain = dict  # divisor d of the order -> PA tuple of u^d (d = 1 is the unit itself)

ExtraProvider = Callable[[CharacterTable, int, Scenario], Sequence[Constraint]]


@dataclass
class ScenarioResult:
    scenario: dict[int, PATuple]
    system: PASystem
    solutions: PASolutionSet


@dataclass
class OrderCheck:
    n: int
    scenarios: list[ScenarioResult] = field(default_factory=list)
    note: str = ""
    lower_exhaustive: bool = True

    @property
    def feasible(self) -> bool:
        return any(s.solutions.solutions for s in self.scenarios)

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"

    @property
    def exhaustive(self) -> bool:
        return self.lower_exhaustive and all(s.solutions.exhaustive for s in self.scenarios)

    def surviving(self) -> list[dict]:
        out = []
        for s in self.scenarios:
            for t in s.solutions.as_tuples():
                out.append({"scenario": s.scenario, "pa": t})
        return out


class LayerCache(dict):
    """Solved chains per unit order, shared across calls on one table."""

    def __init__(self):
        super().__init__()
        self.partial: set[int] = set()


def _combine_scenarios(n: int, lower: Mapping[int, list[Chain]]) -> list[dict[int, PATuple]]:
    primes = sorted(lower)
    out = []
    for combo in itertools.product(*(lower[p] for p in primes)):
        merged: dict[int, PATuple] = {}
        ok = True
        for p, chain in zip(primes, combo):
            for d, t in chain.items():
                key = p * d
                if key in merged and merged[key] != t:
                    ok = False
                    break
                merged[key] = t
            if not ok:
                break
        if ok:
            out.append(merged)
    out.sort(key=lambda s: sorted(s.items()))
    return out


def layer_chains(table: CharacterTable, m: int, cache: LayerCache | None = None) -> list[Chain]:
    """Every HeLP-admissible power chain of a unit of order m (plain HeLP, no extras)."""
    cache = LayerCache() if cache is None else cache
    if m in cache:
        return cache[m]
    result = check_order(table, m, cache=cache)
    chains = []
    for s in result.scenarios:
        for t in s.solutions.as_tuples():
            chain = dict(s.scenario)
            chain[1] = t
            chains.append(chain)
    if not result.exhaustive:
        cache.partial.add(m)
    cache[m] = chains
    return chains


def check_order(table: CharacterTable, n: int, extra: ExtraProvider | None = None,
                cache: LayerCache | None = None) -> OrderCheck:
    """Decide whether HeLP (plus optional extra constraints) allows a unit of order n."""
    cache = LayerCache() if cache is None else cache
    if n == 1:
        system = build_system(table, 1, {})
        return OrderCheck(1, [ScenarioResult({}, system, solve(system))])
    lower = {}
    for p in _prime_factors(n):
        chains = layer_chains(table, n // p, cache)
        if not chains:
            return OrderCheck(n, [], note=f"no admissible u^{p} of order {n // p}",
                              lower_exhaustive=n // p not in cache.partial)
        lower[p] = chains
    result = OrderCheck(n, lower_exhaustive=not any(n // p in cache.partial for p in lower))
    for scenario in _combine_scenarios(n, lower):
        scenario[n] = ((0, 1),)
        system = build_system(table, n, scenario)
        if extra is not None:
            system = system.with_constraints(extra(table, n, scenario))
        result.scenarios.append(ScenarioResult(scenario, system, solve(system)))
    if not result.scenarios:
        result.note = "no consistent power scenario"
    return result


def element_scenario(table: CharacterTable, cls: int, n: int | None = None) -> dict[int, PATuple]:
    """Power chain of an actual group element: u^d sits in the class given by the power maps."""
    n = table.classes[cls].element_order if n is None else n
    return {d: ((table.power_map(d)[cls], 1),) for d in divisors(n)}


def explain_infeasibility(system: PASystem) -> str | None:
    """Smallest prefix of the provenance order whose constraints already rule out integer solutions."""
    present = [p for p in PROVENANCE_ORDER if any(c.provenance == p for c in system.constraints)]
    for i in range(1, len(present) + 1):
        found = solve(system.restricted(present[:i]))
        if found.exhaustive and not found.solutions:
            return present[i - 1]
    return None
