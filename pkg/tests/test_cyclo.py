from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpline.cyclo import (
    CyclotomicNumber,
    absolute_trace,
    euler_phi,
    galois_apply,
    is_p_rational,
    quadratic_surd,
    reduce_conductor,
    root_of_unity,
)

z = root_of_unity


def mobius(n):
    out, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    return -out if n > 1 else out


def ramanujan_sum(m, e):
    """Tr_{Q(zeta_m)/Q}(zeta_m**e) by the closed formula mu(m/g) phi(m) / phi(m/g)."""
    g = gcd(e, m)
    return mobius(m // g) * euler_phi(m) // euler_phi(m // g)


CONDUCTORS = [1, 3, 4, 5, 7, 8, 9, 12, 15]


@st.composite
def cyclo_numbers(draw, conductors=CONDUCTORS):
    n = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=euler_phi(n), max_size=euler_phi(n)))
    return CyclotomicNumber(n, coeffs)


def close(a, b):
    return abs(a - b) < 1e-9


class TestRootOfUnity:
    def test_trivial(self):
        one = z(1, 0)
        assert one.conductor == 1 and one.coeffs == (1,)

    def test_i(self):
        i = z(4, 1)
        assert i.conductor == 4
        assert i * i == -1

    def test_zeta6(self):
        x = z(6, 1)
        # exact residue identity zeta_6^2 - zeta_6 + 1 = 0
        assert x * x - x + 1 == 0
        assert x == z(3, 1) + 1
        assert x.conductor == 3

    def test_exponent_wraps(self):
        assert z(5, 7) == z(5, 2)
        assert z(5, -1) == z(5, 4)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            z(0, 1)


class TestRingOps:
    def test_phi5_relation(self):
        assert z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4) == -1

    def test_mixed_conductor_product(self):
        prod = z(3, 1) * z(4, 1)
        assert prod.conductor == 12
        assert prod == z(12, 7)
        assert (7 * 1) % 12 == (4 + 3) % 12  # zeta_12^7 = zeta_12^4 * zeta_12^3

    @given(cyclo_numbers())
    def test_additive_identity(self, x):
        assert x + 0 == x

    @given(cyclo_numbers(), cyclo_numbers())
    def test_commutative(self, x, y):
        assert x + y == y + x
        assert x * y == y * x

    @settings(max_examples=40, deadline=None)
    @given(cyclo_numbers(), cyclo_numbers(), cyclo_numbers())
    def test_associative_distributive(self, x, y, w):
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * (y + w) == x * y + x * w

    @given(cyclo_numbers(), cyclo_numbers())
    def test_matches_complex_embedding(self, x, y):
        assert close((x * y).to_complex(), x.to_complex() * y.to_complex())
        assert close((x - y).to_complex(), x.to_complex() - y.to_complex())

    def test_scalar(self):
        assert z(5) * Fraction(1, 2) + z(5) / 2 == z(5)

    def test_quadratic_surds(self):
        for d in (5, -7, -1, 2, -3, 12, -15, 45):
            r = quadratic_surd(d)
            assert r * r == d
            assert close(r.to_complex() ** 2, d)


class TestGalois:
    def test_sigma2(self):
        assert galois_apply(z(5), 2) == z(5, 2)

    @given(cyclo_numbers())
    def test_conjugation(self, x):
        n = x.reduce_conductor().conductor
        assert close(galois_apply(x, n - 1).to_complex(), x.to_complex().conjugate())
        assert galois_apply(x, 1) == x

    @given(cyclo_numbers(conductors=[5, 7, 9, 12, 15]), st.integers(1, 200), st.integers(1, 200))
    def test_composition(self, x, k, l):
        n = x.reduce_conductor().conductor
        if gcd(k, n) != 1 or gcd(l, n) != 1:
            return
        assert x.galois(k).galois(l) == x.galois(k * l % n)

    def test_rejects_non_units(self):
        with pytest.raises(ValueError):
            z(5).galois(5)


class TestTrace:
    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_prime_root(self, p):
        assert absolute_trace(z(p), p) == -1

    @pytest.mark.parametrize("m", [1, 2, 6, 10, 12, 35])
    def test_one(self, m):
        assert absolute_trace(CyclotomicNumber.rational(1), m) == euler_phi(m)

    def test_inverse_zeta5_in_q_zeta10(self):
        # -(q-1) with p = 5, q = 2
        assert absolute_trace(z(5, -1), 10) == -1

    @pytest.mark.parametrize("p,q", [(5, 2), (7, 2), (7, 3), (5, 3), (3, 5), (11, 2)])
    def test_inverse_zeta_p_in_q_zeta_pq(self, p, q):
        assert absolute_trace(z(p, -1), p * q) == -(q - 1)

    @pytest.mark.parametrize("m", [1, 4, 6, 9, 12, 15, 20, 35])
    def test_ramanujan_oracle(self, m):
        for e in range(m):
            assert absolute_trace(z(m, e), m) == ramanujan_sum(m, e)

    def test_prime_power_pattern(self):
        for p in (3, 5, 7):
            for e in range(2 * p):
                assert absolute_trace(z(p, e), p) == (p - 1 if e % p == 0 else -1)

    @given(cyclo_numbers(), cyclo_numbers(), st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5))
    def test_linear(self, x, y, a, b):
        m = 2 * lcm(x.conductor, y.conductor)
        assert absolute_trace(x * a + y * b, m) == a * absolute_trace(x, m) + b * absolute_trace(y, m)

    @given(cyclo_numbers(), st.sampled_from([1, 2, 3, 7]))
    def test_transitive(self, x, k):
        f = x.reduce_conductor().conductor
        m = f * k
        assert absolute_trace(x, m) == Fraction(euler_phi(m), euler_phi(f)) * absolute_trace(x, f)

    @given(cyclo_numbers(conductors=[5, 7, 12, 15]), st.integers(1, 100))
    def test_galois_invariant(self, x, k):
        n = x.reduce_conductor().conductor
        if gcd(k, n) == 1:
            assert absolute_trace(x.galois(k), n) == absolute_trace(x, n)

    def test_wrong_ambient_field(self):
        with pytest.raises(ValueError):
            absolute_trace(z(5), 6)


class TestReduceConductor:
    def test_minus_one(self):
        x = CyclotomicNumber(6, [0, 0]) + z(6, 3)
        r = reduce_conductor(z(6, 3))
        assert r.conductor == 1 and r.coeffs == (-1,)
        assert x == -1

    def test_real_subfield_of_q_zeta5(self):
        x = (z(5) + z(5, 4)).embed(10)
        assert x.conductor == 10
        # oracle: fixed by every sigma_k with k = 1 mod 5
        raw = x.coeffs
        assert x._galois_raw(1) == raw
        r = reduce_conductor(x)
        assert r.conductor == 5
        assert r == z(5) + z(5, 4)

    @given(st.fractions(-10, 10, max_denominator=7), st.sampled_from([1, 2, 6, 12, 30]))
    def test_rationals(self, r, n):
        x = CyclotomicNumber.rational(r).embed(n)
        assert reduce_conductor(x).conductor == 1
        assert reduce_conductor(x).coeffs == (r,)

    @given(cyclo_numbers())
    def test_idempotent_and_value_preserving(self, x):
        r = reduce_conductor(x)
        assert reduce_conductor(r) is r
        assert close(r.to_complex(), x.to_complex())
        assert r.embed(x.conductor * 2).reduce_conductor() == r

    @given(cyclo_numbers(conductors=[5, 7, 8, 9]), st.sampled_from([2, 3, 5]))
    def test_canonical_after_embedding(self, x, k):
        big = x.embed(x.conductor * k)
        assert reduce_conductor(big)._key() == reduce_conductor(x)._key()

    def test_never_2_mod_4(self):
        assert (z(10, 1) * z(10, 3)).conductor == 5
        assert z(14, 1).conductor == 7


class TestPRational:
    def test_examples(self):
        assert is_p_rational(z(5) + z(5, -1), 3)
        assert not is_p_rational(z(5), 5)
        assert is_p_rational(z(10, 5), 5)


class TestSerialization:
    @given(cyclo_numbers())
    def test_roundtrip(self, x):
        assert CyclotomicNumber.from_json(x.to_json()) == x

    def test_format(self):
        assert CyclotomicNumber.rational(Fraction(-3, 2)).to_json() == {"n": 1, "coeffs": ["-3/2"]}

    @pytest.mark.parametrize("bad", [
        {"n": 5, "coeffs": ["1"]},
        {"n": 1, "coeffs": [0.5]},
        {"n": 1, "coeffs": ["0.5"]},
        {"n": 0, "coeffs": []},
        {"n": 1},
    ])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            CyclotomicNumber.from_json(bad)
