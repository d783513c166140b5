"""Principal blocks whose Brauer tree is a line.

Given a line ordering chi_1 = 1, chi_2, ..., chi_p of the ordinary characters
of the principal p-block (p odd, Sylow p-subgroup of order p, a single class
of elements of order p), units of order pq exist in V(ZG) only if G has
elements of order pq.  This module checks those hypotheses on table data,
evaluates the alternating sum ``nu = sum((-1)**i * chi_i)`` and produces the
eigenvalue-multiplicity inequality of the line for the HeLP solver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cyclo import _prime_factors
from .help_engine import (
    TREE_INEQUALITY,
    Constraint,
    Scenario,
    multiplicity_form,
)
from .tables import CharacterTable, spectrum


class BlockFormatError(ValueError):
    pass


class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class BrauerLine:
    prime: int
    character_indices: tuple[int, ...]
    principal: bool = True

    def __post_init__(self):
        if self.prime < 3 or _prime_factors(self.prime) != [self.prime]:
            raise ValueError(f"line prime must be an odd prime, got {self.prime}")
        if len(self.character_indices) != self.prime:
            raise ValueError(f"a line for p={self.prime} needs exactly {self.prime} characters")
        if len(set(self.character_indices)) != self.prime:
            raise ValueError("line characters must be distinct")

    def reversed(self) -> BrauerLine:
        return BrauerLine(self.prime, tuple(reversed(self.character_indices)), self.principal)


def parse_blocks(document) -> list[BrauerLine]:
    """Read a block file: one block object, a list of them, or ``{"blocks": [...]}``."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise BlockFormatError(f"not valid JSON: {exc}") from exc
    if isinstance(document, dict) and "blocks" in document:
        document = document["blocks"]
    if isinstance(document, dict):
        document = [document]
    if not isinstance(document, list):
        raise BlockFormatError("block document must be an object or a list")
    lines = []
    for entry in document:
        try:
            p = entry["prime"]
            order = entry["lineOrder"]
            mult = entry.get("exceptionalMultiplicity", 1)
            principal = entry.get("principal", True)
        except (KeyError, TypeError, AttributeError) as exc:
            raise BlockFormatError(f"bad block entry {entry!r}") from exc
        if mult != 1:
            raise BlockFormatError(f"exceptional multiplicity {mult} is not supported (only lines with m = 1)")
        if not isinstance(order, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in order):
            raise BlockFormatError("lineOrder must be a list of row indices")
        try:
            lines.append(BrauerLine(int(p), tuple(order), bool(principal)))
        except ValueError as exc:
            raise BlockFormatError(str(exc)) from exc
    return lines


def load_blocks(path) -> list[BrauerLine]:
    return parse_blocks(Path(path).read_text())


def blocks_to_json(group_name: str, lines) -> dict:
    return {
        "groupName": group_name,
        "blocks": [{"prime": l.prime, "principal": l.principal, "exceptionalMultiplicity": 1,
                    "lineOrder": list(l.character_indices)} for l in lines],
    }


# -- nu and the line checks ----------------------------------------------------------

def _check_indices(table: CharacterTable, line: BrauerLine) -> None:
    k = len(table.irreducibles)
    bad = [i for i in line.character_indices if not 0 <= i < k]
    if bad:
        raise IndexError(f"character rows {bad} out of range for {table.group_name}")


def nu_values(table: CharacterTable, line: BrauerLine) -> list:
    """nu(g) = sum_i (-1)**i chi_i(g) on every class (i counted from 1)."""
    _check_indices(table, line)
    out = []
    for j in range(table.num_classes):
        total = 0
        for i, row in enumerate(line.character_indices, start=1):
            total = total + (-1) ** i * table.value(row, j)
        out.append(total.to_fraction() if total.is_rational() else total)
    return out


def p_regular_classes(table: CharacterTable, p: int) -> list[int]:
    return [j for j, c in enumerate(table.classes) if c.element_order % p]


def verify_line(table: CharacterTable, line: BrauerLine) -> bool:
    """Necessary condition for the line shape: nu vanishes on all p-regular classes."""
    nu = nu_values(table, line)
    return all(nu[j] == 0 for j in p_regular_classes(table, line.prime))


def p_section_constancy(table: CharacterTable, line: BrauerLine) -> bool:
    """Every character of the line takes the same value on each p-singular class as on the order-p class."""
    p = line.prime
    order_p = [j for j, c in enumerate(table.classes) if c.element_order == p]
    if len(order_p) != 1:
        raise HypothesisError(f"expected exactly one class of order {p}, found {len(order_p)}")
    y = order_p[0]
    for j, c in enumerate(table.classes):
        if c.element_order % p == 0:
            for row in line.character_indices:
                if table.value(row, j) != table.value(row, y):
                    return False
    return True


@dataclass
class HypothesisReport:
    sylow_order_p: bool
    single_p_class: bool
    line_verified: bool
    p_rational: bool
    trivial_first: bool = True

    @property
    def applicable(self) -> bool:
        return self.sylow_order_p and self.single_p_class and self.line_verified and self.p_rational

    def to_json(self) -> dict:
        return {
            "sylowOrderP": self.sylow_order_p,
            "singlePClass": self.single_p_class,
            "lineVerified": self.line_verified,
            "pRational": self.p_rational,
            "applicable": self.applicable,
        }


def check_hypotheses(table: CharacterTable, line: BrauerLine) -> HypothesisReport:
    _check_indices(table, line)
    p = line.prime
    m, r = divmod(table.order, p)
    sylow = r == 0 and m % p != 0
    single = sum(1 for c in table.classes if c.element_order == p) == 1
    trivial_first = all(v == 1 for v in table.irreducibles[line.character_indices[0]])
    verified = trivial_first and verify_line(table, line)
    rational = all(v.is_p_rational(p) for row in line.character_indices for v in table.irreducibles[row])
    return HypothesisReport(sylow, single, verified, rational, trivial_first)


# -- the line inequality as a solver constraint --------------------------------------

def line_inequality(table: CharacterTable, line: BrauerLine, n: int, xi: int, scenario: Scenario,
                    zeta_p: int = 1) -> Constraint:
    """mu(xi, u, chi_1) - sum_i (-1)**i mu(xi * zeta_p, u, chi_i) >= 0 for a unit of order n = p*m.

    ``xi`` is the exponent of an m-th root of unity written as zeta_n**xi (so it must be a
    multiple of p); ``zeta_p`` selects the primitive p-th root zeta_n**(m * zeta_p).
    """
    p = line.prime
    if n % p or (n // p) % p == 0:
        raise ValueError(f"unit order {n} is not p times a number prime to p={p}")
    m = n // p
    if xi % p:
        raise ValueError(f"zeta_{n}^{xi} is not an {m}-th root of unity")
    if zeta_p % p == 0:
        raise ValueError("zeta_p must be primitive")
    hyp = check_hypotheses(table, line)
    if not (hyp.line_verified and hyp.p_rational):
        raise HypothesisError(f"line for p={p} is not verified or not p-rational")
    shifted = (xi + m * zeta_p) % n
    form = multiplicity_form(table, line.character_indices[0], n, xi, scenario)
    for i, row in enumerate(line.character_indices, start=1):
        term = multiplicity_form(table, row, n, shifted, scenario)
        form = form - term.scale((-1) ** i)
    return Constraint(form, "ge", TREE_INEQUALITY, f"line p={p}, xi=zeta_{n}^{xi}, zeta_p=zeta_{n}^{m * zeta_p % n}")


def line_inequalities(table: CharacterTable, line: BrauerLine, n: int, scenario: Scenario) -> list[Constraint]:
    """All instances of the line inequality for a unit of order n (empty if p does not divide n exactly once)."""
    p = line.prime
    if n % p or (n // p) % p == 0:
        return []
    m = n // p
    out = []
    seen = set()
    for j in range(m):
        for a in range(1, p):
            con = line_inequality(table, line, n, j * p, scenario, zeta_p=a)
            if con.form not in seen:
                seen.add(con.form)
                out.append(con)
    return out


def line_provider(lines):
    """An ``extra`` hook for help_engine.check_order adding every applicable line inequality."""
    usable = []

    def provider(table, n, scenario):
        if not usable:
            for line in lines:
                hyp = check_hypotheses(table, line)
                if hyp.line_verified and hyp.p_rational:
                    usable.append(line)
        out = []
        for line in usable:
            out.extend(line_inequalities(table, line, n, scenario))
        return out

    return provider


# -- the criterion ----------------------------------------------------------------------

NO_PQ_UNITS = "no_pq_units"
NOT_APPLICABLE = "not_applicable"
PQ_IN_GROUP = "pq_in_group"


@dataclass
class CriterionResult:
    p: int
    q: int
    verdict: str
    hypotheses: HypothesisReport | None = None
    section_constant: bool | None = None
    annotation: str = ""
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"p": self.p, "q": self.q, "verdict": self.verdict}
        if self.hypotheses is not None:
            out["hypotheses"] = self.hypotheses.to_json()
        if self.section_constant is not None:
            out["pSectionConstant"] = self.section_constant
        if self.annotation:
            out["annotation"] = self.annotation
        if self.certificate:
            out["certificate"] = {k: str(v) if isinstance(v, Fraction) else v for k, v in self.certificate.items()}
        return out


def nu_window(p: int, q: int) -> tuple[Fraction, Fraction]:
    """Bounds on nu(y) forced by the two line inequalities when |eps_y(u)| >= p.

    eps_y >= p gives nu(y) >= -pq / (1 + (q-1)p); eps_y <= -p gives
    nu(y) <= pq / ((q-1)p - 1).
    """
    lower = Fraction(-p * q, 1 + (q - 1) * p)
    upper = Fraction(p * q, (q - 1) * p - 1)
    return lower, upper


def apply_criterion(table: CharacterTable, line: BrauerLine, q: int) -> CriterionResult:
    p = line.prime
    if q == p:
        raise ValueError("q must differ from p")
    if any(o % (p * q) == 0 for o in spectrum(table)):
        return CriterionResult(p, q, PQ_IN_GROUP, annotation=f"G has elements of order divisible by {p * q}")
    hyp = check_hypotheses(table, line)
    result = CriterionResult(p, q, NOT_APPLICABLE, hyp)
    if not line.principal:
        result.annotation = "block is not the principal block"
        return result
    if not hyp.applicable:
        result.annotation = "hypotheses not satisfied"
        return result
    result.section_constant = p_section_constancy(table, line)
    if not result.section_constant:
        result.annotation = "p-section constancy fails; table or line data inconsistent"
        return result

    nu = nu_values(table, line)
    y = next(j for j, c in enumerate(table.classes) if c.element_order == p)
    nu_y = nu[y]
    cert = {"nu(1)": nu[0], "nu(y)": nu_y, "yClass": table.classes[y].name}
    # the alternating degree sum vanishes and chi(y) = chi(1) mod p for each chi
    if nu[0] != 0 or Fraction(nu_y).denominator != 1 or Fraction(nu_y) % p != 0:
        result.annotation = "internal check failed: nu(1) != 0 or nu(y) not divisible by p"
        result.certificate = cert
        return result
    if (p, q) == (3, 2):
        result.verdict = NO_PQ_UNITS
        result.annotation = ("(p,q) = (3,2): units of order 6 are handled by an external result "
                             "(Theorem D of [4primaryII]); the nu-window argument needs (p,q) != (3,2)")
        result.certificate = cert
        return result
    lower, upper = nu_window(p, q)
    cert["nuWindowLower"] = lower
    cert["nuWindowUpper"] = upper
    # a unit of order pq would force -p < nu(y) < p; together with p | nu(y) this means nu(y) = 0,
    # and then nu would vanish on all of G
    if not (-p < lower and upper < p):
        result.annotation = "internal check failed: inequality window not inside (-p, p)"
        result.certificate = cert
        return result
    if nu_y == 0:
        result.annotation = "internal check failed: nu(y) = 0 would make nu identically zero"
        result.certificate = cert
        return result
    result.verdict = NO_PQ_UNITS
    result.annotation = (f"a unit of order {p * q} would need -{p} < nu(y) < {p}, hence nu(y) = 0; "
                         f"the table has nu(y) = {nu_y}")
    result.certificate = cert
    return result
