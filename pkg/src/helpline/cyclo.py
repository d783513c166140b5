"""Exact arithmetic in cyclotomic fields.

An element of Q(zeta_n) is stored as its residue modulo the n-th cyclotomic
polynomial: a dense vector of ``phi(n)`` rationals in the power basis
``1, zeta_n, ..., zeta_n**(phi(n)-1)``.  All arithmetic results are brought to
the smallest conductor, which makes equality a plain comparison of
``(conductor, coeffs)``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def units_mod(n: int) -> list[int]:
    """Residues in [0, n) coprime to n; ``[0]`` for n == 1."""
    if n == 1:
        return [0]
    return [k for k in range(1, n) if gcd(k, n) == 1]


def _poly_divmod_monic(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are low degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coordinates of zeta_n**k, 0 <= k < n."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _reduce_exponents(n: int, vec: Sequence) -> tuple[Fraction, ...]:
    """Map sum(vec[k] * zeta_n**k) to power-basis coordinates."""
    table = _power_table(n)
    phi = euler_phi(n)
    out = [Fraction(0)] * phi
    for k, c in enumerate(vec):
        if c:
            row = table[k]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@lru_cache(maxsize=None)
def _descent_solver(f: int, n: int):
    """Rows and inverse matrix recovering Q(zeta_f) coordinates from Q(zeta_n) ones."""
    phi_f, phi_n = euler_phi(f), euler_phi(n)
    step = n // f
    table = _power_table(n)
    # column i of the embedding matrix is zeta_f**i written in the basis of Q(zeta_n)
    emb = [[Fraction(table[(i * step) % n][r]) for i in range(phi_f)] for r in range(phi_n)]
    # pick phi_f independent rows greedily
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for r in range(phi_n):
        v = list(emb[r])
        for b, piv in basis:
            if v[piv]:
                c = v[piv]
                v = [a - c * bb for a, bb in zip(v, b)]
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            continue
        v = [a / v[piv] for a in v]
        basis.append((v, piv))
        chosen.append(r)
        if len(chosen) == phi_f:
            break
    square = [emb[r] for r in chosen]
    return tuple(chosen), _invert(square)


def _invert(m: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    size = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[size:]) for row in aug)


class CyclotomicNumber:
    """An exact element of Q(zeta_n).

    ``CyclotomicNumber(n, coeffs)`` accepts any representation; arithmetic,
    Galois action and :meth:`reduce_conductor` return the canonical one.
    """

    __slots__ = ("conductor", "coeffs", "_canonical")

    def __init__(self, conductor: int, coeffs: Iterable):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"conductor {conductor} needs {euler_phi(conductor)} coefficients, got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = coeffs
        self._canonical = None

    # -- construction -------------------------------------------------------

    @classmethod
    def rational(cls, value) -> CyclotomicNumber:
        return cls(1, (_as_fraction(value),))

    @classmethod
    def _from_exponents(cls, n: int, vec: Sequence) -> CyclotomicNumber:
        return cls(n, _reduce_exponents(n, vec)).reduce_conductor()

    def exponent_vector(self, n: int | None = None) -> list[Fraction]:
        """Coefficients ``c`` with ``self == sum(c[k] * zeta_n**k)``; n must be a multiple of the conductor."""
        n = self.conductor if n is None else n
        if n % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {n}")
        step = n // self.conductor
        vec = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * step) % n] += c
        return vec

    def embed(self, n: int) -> CyclotomicNumber:
        """The same value written in Q(zeta_n), without normalization."""
        if n == self.conductor:
            return self
        return CyclotomicNumber(n, _reduce_exponents(n, self.exponent_vector(n)))

    # -- canonical form -----------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def reduce_conductor(self) -> CyclotomicNumber:
        if self._canonical is not None:
            return self._canonical
        if self.is_rational():
            result = self if self.conductor == 1 else CyclotomicNumber(1, self.coeffs[:1])
        else:
            result = self
            descended = True
            while descended:
                descended = False
                n = result.conductor
                for p in _prime_factors(n):
                    f = n // p
                    if all(result._galois_raw(k) == result.coeffs for k in _kernel(n, f)):
                        result = result._descend(f)
                        descended = True
                        break
        result._canonical = result
        self._canonical = result
        return result

    def _descend(self, f: int) -> CyclotomicNumber:
        rows, inv = _descent_solver(f, self.conductor)
        rhs = [self.coeffs[r] for r in rows]
        coeffs = [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv]
        return CyclotomicNumber(f, coeffs)

    # -- Galois action ------------------------------------------------------

    def _galois_raw(self, k: int) -> tuple[Fraction, ...]:
        n = self.conductor
        vec = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * k) % n] += c
        return _reduce_exponents(n, vec)

    def galois(self, k: int) -> CyclotomicNumber:
        """Image under zeta_m -> zeta_m**k for any m divisible by the conductor; k must be a unit."""
        x = self.reduce_conductor()
        n = x.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to the conductor {n}")
        return CyclotomicNumber(n, x._galois_raw(k % n)).reduce_conductor()

    def conjugate(self) -> CyclotomicNumber:
        return self.galois(-1)

    def trace(self, m: int | None = None) -> Fraction:
        """Absolute trace from Q(zeta_m) to Q, summed over the Galois group of Q(zeta_m)."""
        x = self.reduce_conductor()
        f = x.conductor
        m = f if m is None else m
        if m < 1 or m % f:
            raise ValueError(f"element of conductor {f} does not lie in Q(zeta_{m})")
        acc = [Fraction(0)] * f
        for k in units_mod(m):
            k %= f
            for i, c in enumerate(x.coeffs):
                if c:
                    acc[(i * k) % f] += c
        total = _reduce_exponents(f, acc)
        if any(total[1:]):
            raise ArithmeticError("Galois orbit sum is not rational")
        return total[0]

    def is_p_rational(self, p: int) -> bool:
        return self.reduce_conductor().conductor % p != 0

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.rational(other)
        return None

    def _binary(self, other, op) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.reduce_conductor(), other.reduce_conductor()
        n = lcm(a.conductor, b.conductor)
        return op(a.embed(n), b.embed(n), n)

    def __add__(self, other):
        return self._binary(other, lambda a, b, n: CyclotomicNumber(
            n, [x + y for x, y in zip(a.coeffs, b.coeffs)]).reduce_conductor())

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coeffs]).reduce_conductor()

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            s = Fraction(other)
            return CyclotomicNumber(self.conductor, [c * s for c in self.coeffs]).reduce_conductor()

        def mul(a, b, n):
            vec = [Fraction(0)] * n
            for i, x in enumerate(a.coeffs):
                if x:
                    for j, y in enumerate(b.coeffs):
                        if y:
                            vec[(i + j) % n] += x * y
            return CyclotomicNumber._from_exponents(n, vec)

        return self._binary(other, mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicNumber.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison and conversion -----------------------------------------

    def _key(self):
        x = self.reduce_conductor()
        return (x.conductor, x.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __bool__(self):
        return any(self.coeffs)

    def to_fraction(self) -> Fraction:
        x = self.reduce_conductor()
        if x.conductor != 1:
            raise ValueError(f"{x} is not rational")
        return x.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        x = self.reduce_conductor()
        return {"n": x.conductor, "coeffs": [str(c) for c in x.coeffs]}

    @classmethod
    def from_json(cls, data) -> CyclotomicNumber:
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return cls.rational(_parse_rational(data))
        if not isinstance(data, dict) or set(data) != {"n", "coeffs"}:
            raise ValueError(f"malformed cyclotomic number: {data!r}")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"bad conductor {n!r}")
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list):
            raise ValueError("coeffs must be a list")
        return cls(n, [_parse_rational(c) for c in coeffs]).reduce_conductor()

    def __repr__(self):
        x = self.reduce_conductor()
        return f"CyclotomicNumber({x.conductor}, [{', '.join(str(c) for c in x.coeffs)}])"

    def __str__(self):
        x = self.reduce_conductor()
        if x.conductor == 1:
            return str(x.coeffs[0])
        terms = []
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = f"z{x.conductor}" if i == 1 else f"z{x.conductor}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _parse_rational(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"not an exact rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational string: {text!r}")
    return Fraction(text)


@lru_cache(maxsize=None)
def _kernel(n: int, f: int) -> tuple[int, ...]:
    """Units k mod n with k = 1 mod f: the Galois group of Q(zeta_n) over Q(zeta_f)."""
    return tuple(k for k in range(1, n + 1, f) if gcd(k, n) == 1 and k != 1) or ()


# -- module-level operations ------------------------------------------------

def root_of_unity(k: int, e: int = 1) -> CyclotomicNumber:
    """zeta_k**e in canonical form."""
    if k < 1:
        raise ValueError("order must be positive")
    vec = [0] * k
    vec[e % k] = 1
    return CyclotomicNumber._from_exponents(k, vec)


def galois_apply(x: CyclotomicNumber, k: int) -> CyclotomicNumber:
    return x.galois(k)


def absolute_trace(x: CyclotomicNumber, m: int) -> Fraction:
    return x.trace(m)


def reduce_conductor(x: CyclotomicNumber) -> CyclotomicNumber:
    return x.reduce_conductor()


def is_p_rational(x: CyclotomicNumber, p: int) -> bool:
    return x.is_p_rational(p)


def quadratic_surd(d: int) -> CyclotomicNumber:
    """A square root of the integer d, built from Gauss sums.

    For an odd prime p the Gauss sum ``sum((a/p) * zeta_p**a)`` squares to
    ``(-1)**((p-1)/2) * p``; other factors come from ``i`` and ``zeta_8``.
    """
    if d == 0:
        return CyclotomicNumber.rational(0)
    result = CyclotomicNumber.rational(1)
    sign = -1 if d < 0 else 1
    m = abs(d)
    for p in _prime_factors(m):
        a = 0
        while m % p == 0:
            m //= p
            a += 1
        result = result * (p ** (a // 2))
        if a % 2 == 0:
            continue
        if p == 2:
            # zeta_8 + zeta_8**7 = sqrt(2)
            result = result * (root_of_unity(8, 1) + root_of_unity(8, 7))
            continue
        vec = [0] * p
        for t in range(1, p):
            vec[t] = 1 if pow(t, (p - 1) // 2, p) == 1 else -1
        result = result * CyclotomicNumber._from_exponents(p, vec)
        if p % 4 == 3:
            sign = -sign
    if sign < 0:
        result = result * root_of_unity(4, 1)
    return result
