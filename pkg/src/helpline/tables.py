"""Character tables: data model, file format, validation, spectra and prime graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Mapping, Sequence

from .cyclo import CyclotomicNumber, _prime_factors, lcm


class TableFormatError(ValueError):
    """Raised for documents that do not describe a character table."""


@dataclass(frozen=True)
class ConjugacyClassInfo:
    name: str
    size: int
    element_order: int


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group_name: str
    order: int
    classes: tuple[ConjugacyClassInfo, ...]
    power_maps: Mapping[int, tuple[int, ...]]
    irreducibles: tuple[tuple[CyclotomicNumber, ...], ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(c.element_order for c in self.classes)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in self.element_orders:
            e = lcm(e, o)
        return e

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(set(_prime_factors(self.exponent))))

    def class_index(self, name: str) -> int:
        for i, c in enumerate(self.classes):
            if c.name == name:
                return i
        raise KeyError(name)

    def power_map(self, d: int) -> tuple[int, ...]:
        """Class of g**d for every class g, composed from the stored prime maps."""
        return self._power_map(d)

    @cached_property
    def _power_cache(self) -> dict:
        return {}

    def _power_map(self, d: int) -> tuple[int, ...]:
        d %= self.exponent
        if d in self._power_cache:
            return self._power_cache[d]
        if d == 0:
            return (0,) * self.num_classes
        images = list(range(self.num_classes))
        rest = d
        for r in _prime_factors(d):
            while rest % r == 0:
                rest //= r
                if r in self.power_maps:
                    pm = self.power_maps[r]
                    images = [pm[i] for i in images]
                else:
                    # r does not divide any element order, so g -> g**r permutes classes;
                    # recover it from element orders and the maps we do have
                    images = [self._coprime_power(i, r) for i in images]
        result = tuple(images)
        self._power_cache[d] = result
        return result

    def _coprime_power(self, i: int, r: int) -> int:
        o = self.classes[i].element_order
        k = r % o if o > 1 else 0
        if o == 1 or k == 1:
            return i
        # r is coprime to o: r = k (mod o), and k factors into primes dividing the exponent or not;
        # fall back to matching Galois conjugate columns
        target = [row[i].galois(r) for row in self.irreducibles]
        for j in range(self.num_classes):
            if self.classes[j].element_order == o and all(row[j] == t for row, t in zip(self.irreducibles, target)):
                return j
        raise TableFormatError(f"no class matches the {r}-th power of class {self.classes[i].name}")

    def value(self, row: int, cls: int) -> CyclotomicNumber:
        return self.irreducibles[row][cls]

    def degree(self, row: int) -> int:
        return int(self.irreducibles[row][0].to_fraction())


# -- file format -------------------------------------------------------------

def parse_table(document) -> CharacterTable:
    """Build a table from a JSON string or an already decoded mapping."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise TableFormatError("table document must be an object")
    missing = {"groupName", "order", "classes", "powerMaps", "irreducibles"} - set(document)
    if missing:
        raise TableFormatError(f"missing fields: {sorted(missing)}")

    order = document["order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise TableFormatError(f"bad group order {order!r}")

    classes = []
    for entry in document["classes"]:
        try:
            info = ConjugacyClassInfo(str(entry["name"]), entry["size"], entry["elementOrder"])
        except (KeyError, TypeError) as exc:
            raise TableFormatError(f"bad class entry {entry!r}") from exc
        if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 1
                   for v in (info.size, info.element_order)):
            raise TableFormatError(f"bad class entry {entry!r}")
        classes.append(info)
    if not classes:
        raise TableFormatError("no classes")
    k = len(classes)

    rows = []
    for row in document["irreducibles"]:
        if not isinstance(row, list) or len(row) != k:
            raise TableFormatError(f"character row has {len(row) if isinstance(row, list) else '?'} entries, expected {k}")
        try:
            rows.append(tuple(CyclotomicNumber.from_json(v) for v in row))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise TableFormatError(str(exc)) from exc

    power_maps = {}
    raw_maps = document["powerMaps"]
    if not isinstance(raw_maps, dict):
        raise TableFormatError("powerMaps must be an object keyed by prime")
    for key, images in raw_maps.items():
        try:
            r = int(key)
        except ValueError as exc:
            raise TableFormatError(f"bad power map key {key!r}") from exc
        if not isinstance(images, list) or len(images) != k or not all(
                isinstance(i, int) and 0 <= i < k for i in images):
            raise TableFormatError(f"bad {r}-power map")
        power_maps[r] = tuple(images)

    exponent = 1
    for c in classes:
        exponent = lcm(exponent, c.element_order)
    for r in _prime_factors(exponent):
        if r not in power_maps:
            raise TableFormatError(f"missing power map for prime {r}")

    return CharacterTable(
        group_name=str(document["groupName"]),
        order=order,
        classes=tuple(classes),
        power_maps=power_maps,
        irreducibles=tuple(rows),
    )


def load_table(path) -> CharacterTable:
    return parse_table(Path(path).read_text())


def table_to_json(table: CharacterTable) -> dict:
    return {
        "groupName": table.group_name,
        "order": table.order,
        "classes": [{"name": c.name, "size": c.size, "elementOrder": c.element_order}
                    for c in table.classes],
        "powerMaps": {str(r): list(m) for r, m in sorted(table.power_maps.items())},
        "irreducibles": [[v.to_json() for v in row] for row in table.irreducibles],
    }


# -- validation ----------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{c.name}: {'pass' if c.passed else 'FAIL'}"
            if c.detail:
                line += f" ({c.detail})"
            out.append(line)
        return out


def _check_shape(table: CharacterTable) -> CheckResult:
    k = table.num_classes
    first = table.classes[0]
    if first.size != 1 or first.element_order != 1:
        return CheckResult("class data", False, "first class is not the identity class")
    if sum(table.class_sizes) != table.order:
        return CheckResult("class data", False, f"class sizes sum to {sum(table.class_sizes)}, not {table.order}")
    for c in table.classes:
        if table.order % c.size:
            return CheckResult("class data", False, f"size of {c.name} does not divide |G|")
    if len(table.irreducibles) != k:
        return CheckResult("class data", False, f"{len(table.irreducibles)} characters for {k} classes")
    return CheckResult("class data", True)


def _check_trivial(table: CharacterTable) -> CheckResult:
    if not table.irreducibles or any(v != 1 for v in table.irreducibles[0]):
        return CheckResult("trivial character", False, "first row is not the trivial character")
    return CheckResult("trivial character", True)


def _check_rows(table: CharacterTable) -> CheckResult:
    sizes = table.class_sizes
    conj = [[v.conjugate() for v in row] for row in table.irreducibles]
    for a, row in enumerate(table.irreducibles):
        for b in range(a, len(table.irreducibles)):
            total = CyclotomicNumber.rational(0)
            for j, s in enumerate(sizes):
                total = total + row[j] * conj[b][j] * s
            expected = table.order if a == b else 0
            if total != expected:
                return CheckResult("row orthogonality", False,
                                   f"rows {a},{b}: inner product {total / table.order}")
    return CheckResult("row orthogonality", True)


def _check_columns(table: CharacterTable) -> CheckResult:
    rows = table.irreducibles
    k = table.num_classes
    for j in range(k):
        for l in range(j, k):
            total = CyclotomicNumber.rational(0)
            for row in rows:
                total = total + row[j] * row[l].conjugate()
            expected = Fraction(table.order, table.classes[j].size) if j == l else 0
            if total != expected:
                return CheckResult("column orthogonality", False,
                                   f"columns {table.classes[j].name},{table.classes[l].name}: got {total}")
    return CheckResult("column orthogonality", True)


def _check_power_maps(table: CharacterTable) -> CheckResult:
    for r, images in sorted(table.power_maps.items()):
        for i, j in enumerate(images):
            o = table.classes[i].element_order
            if table.classes[j].element_order != o // gcd(o, r):
                return CheckResult("power maps", False,
                                   f"{r}-th power of {table.classes[i].name} lands in {table.classes[j].name}")
            # chi(g**r) is the r-th Galois conjugate of chi(g) when r is prime to o(g)
            if gcd(o, r) == 1:
                for row in table.irreducibles:
                    if row[j] != row[i].galois(r):
                        return CheckResult("power maps", False,
                                           f"{r}-th power of {table.classes[i].name} is not a Galois image")
    return CheckResult("power maps", True)


def _check_degrees(table: CharacterTable) -> CheckResult:
    total = sum((row[0] * row[0] for row in table.irreducibles), CyclotomicNumber.rational(0))
    if total != table.order:
        return CheckResult("degree sum", False, f"sum of squared degrees is {total}")
    return CheckResult("degree sum", True)


def validate(table: CharacterTable) -> ValidationReport:
    """Run every structural check; failures are recorded, never raised."""
    report = ValidationReport()
    shape = _check_shape(table)
    report.checks.append(shape)
    report.checks.append(_check_trivial(table))
    if not shape.passed:
        return report
    report.checks.append(_check_degrees(table))
    report.checks.append(_check_rows(table))
    report.checks.append(_check_columns(table))
    report.checks.append(_check_power_maps(table))
    return report


# -- spectra and prime graphs -------------------------------------------------

@dataclass(frozen=True)
class PrimeGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def has_edge(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def non_edges(self) -> list[tuple[int, int]]:
        vs = sorted(self.vertices)
        return [(p, q) for i, p in enumerate(vs) for q in vs[i + 1:] if (p, q) not in self.edges]

    def __str__(self):
        edges = ", ".join(f"{p}-{q}" for p, q in sorted(self.edges)) or "none"
        return f"vertices {sorted(self.vertices)}; edges {edges}"


def spectrum(table: CharacterTable) -> frozenset[int]:
    return frozenset(table.element_orders)


def prime_graph_from_orders(orders: Sequence[int]) -> PrimeGraph:
    vertices = set()
    edges = set()
    for o in orders:
        ps = _prime_factors(o)
        vertices.update(ps)
        for i, p in enumerate(ps):
            for q in ps[i + 1:]:
                edges.add((p, q))
    return PrimeGraph(frozenset(vertices), frozenset(edges))


def prime_graph(table: CharacterTable) -> PrimeGraph:
    return prime_graph_from_orders(table.element_orders)
