import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threefolds.cyclotomic import (
    Cyc,
    ConductorLimitError,
    cyclo_arith,
    cyclotomic_polynomial,
    euler_phi,
    get_max_conductor,
    set_max_conductor,
)


def approx_complex(a, b, tol=1e-9):
    return abs(a - b) <= tol


def float_root(e, k=1):
    return cmath.exp(2j * cmath.pi * k / e)


class TestCyclotomicPolynomial:
    def test_degree_one(self):
        assert cyclotomic_polynomial(1) == (-1, 1)

    def test_small_table(self):
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_phi_12(self):
        # oracle: divide x^12 - 1 by Phi_1 * Phi_2 * Phi_3 * Phi_4 * Phi_6,
        # which factors as (x^6 - 1)(x^2 + 1); the quotient is x^4 - x^2 + 1
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_degrees_are_phi(self):
        for e in range(1, 40):
            assert len(cyclotomic_polynomial(e)) - 1 == euler_phi(e)

    def test_product_over_divisors(self):
        # Prod_{d | e} Phi_d = x^e - 1
        for e in (10, 12, 18, 30):
            prod = [1]
            for d in range(1, e + 1):
                if e % d == 0:
                    phi_d = cyclotomic_polynomial(d)
                    out = [0] * (len(prod) + len(phi_d) - 1)
                    for i, a in enumerate(prod):
                        for j, b in enumerate(phi_d):
                            out[i + j] += a * b
                    prod = out
            expected = [-1] + [0] * (e - 1) + [1]
            assert prod == expected


class TestArithmetic:
    def test_zeta2_squared(self):
        z = Cyc.root_of_unity(2)
        assert cyclo_arith(z, z, "mul") == 1

    def test_primitive_cube_roots_sum(self):
        z = Cyc.root_of_unity(3)
        assert cyclo_arith(z, z * z, "add") == -1

    def test_golden_product(self):
        # (1 + z5)(1 + z5^4) against the floating-point embedding
        z = Cyc.root_of_unity(5)
        lhs = (1 + z) * (1 + z**4)
        want = (1 + float_root(5)) * (1 + float_root(5, 4))
        assert approx_complex(lhs.complex_value(), want)

    def test_sub(self):
        z = Cyc.root_of_unity(7)
        assert cyclo_arith(z, z, "sub").is_zero()

    def test_mixed_conductors(self):
        a = Cyc.root_of_unity(4)  # i
        b = Cyc.root_of_unity(3)
        c = a * b
        assert c.conductor == 12
        assert approx_complex(c.complex_value(), float_root(4) * float_root(3))

    def test_rational_coercion(self):
        z = Cyc.root_of_unity(6)
        assert (z - z) + Fraction(3, 2) == Fraction(3, 2)

    def test_conductor_limit(self):
        old = get_max_conductor()
        try:
            set_max_conductor(10)
            with pytest.raises(ConductorLimitError):
                Cyc.root_of_unity(11)
        finally:
            set_max_conductor(old)

    def test_unknown_op(self):
        z = Cyc.root_of_unity(3)
        with pytest.raises(ValueError):
            cyclo_arith(z, z, "div")


class TestConjugate:
    def test_conj_i(self):
        i = Cyc.root_of_unity(4)
        assert i.conjugate() == -i
        assert i.conjugate() == i**3

    def test_conj_rational(self):
        q = Cyc.rational(Fraction(7, 3))
        assert q.conjugate() == Fraction(7, 3)

    def test_conj_seven(self):
        z = Cyc.root_of_unity(7)
        a = z + 2 * z**3
        want = float_root(7, 6) + 2 * float_root(7, 4)
        assert approx_complex(a.conjugate().complex_value(), want)

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(20):
            e = rng.choice([3, 4, 5, 8, 12, 15])
            a = Cyc(e, [rng.randint(-3, 3) for _ in range(euler_phi(e))])
            assert a.conjugate().conjugate() == a

    def test_automorphism(self):
        rng = random.Random(8)
        for _ in range(20):
            e = rng.choice([5, 8, 12])
            d = euler_phi(e)
            a = Cyc(e, [rng.randint(-3, 3) for _ in range(d)])
            b = Cyc(e, [rng.randint(-3, 3) for _ in range(d)])
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()


class TestFieldAxioms:
    @given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
    @settings(max_examples=60, deadline=None)
    def test_distributivity_q8(self, x, y, z):
        e = 8
        d = euler_phi(e)
        a = Cyc(e, [x, y, z, 1][:d])
        b = Cyc(e, [z, x, -y, 0][:d])
        c = Cyc(e, [1, -x, y, z][:d])
        assert a * (b + c) == a * b + a * c

    @given(st.integers(-4, 4), st.integers(-4, 4))
    @settings(max_examples=40, deadline=None)
    def test_associativity(self, x, y):
        a = Cyc(5, [x, y, 1, 0])
        b = Cyc(5, [y, -x, 0, 2])
        c = Cyc(5, [1, 1, x, y])
        assert (a * b) * c == a * (b * c)

    def test_inverse(self):
        rng = random.Random(11)
        for _ in range(25):
            e = rng.choice([4, 5, 7, 9, 12, 20])
            a = Cyc(e, [rng.randint(-4, 4) for _ in range(euler_phi(e))])
            if a.is_zero():
                continue
            assert a * a.inverse() == 1

    def test_float_embedding_random(self):
        rng = random.Random(13)
        for _ in range(30):
            e = rng.choice([6, 12, 24, 30, 42, 60])
            coeffs = [rng.randint(-2, 2) for _ in range(euler_phi(e))]
            a = Cyc(e, coeffs)
            b = Cyc(e, [rng.randint(-2, 2) for _ in range(euler_phi(e))])
            z = float_root(e)
            fa = sum(c * z**k for k, c in enumerate(coeffs))
            assert approx_complex(a.complex_value(), fa, tol=1e-8)
            assert approx_complex(
                (a * b).complex_value(), a.complex_value() * b.complex_value(), tol=1e-7
            )


class TestConductorChanges:
    def test_embed_roundtrip_identity(self):
        rng = random.Random(4)
        for _ in range(20):
            e = rng.choice([3, 4, 6, 10, 12])
            mult = rng.choice([2, 3, 5])
            a = Cyc(e, [rng.randint(-3, 3) for _ in range(euler_phi(e))])
            up = a.embed(e * mult)
            back = up.restrict(e)
            assert back is not None
            assert back == a

    def test_restrict_outside_subfield(self):
        z = Cyc.root_of_unity(12)
        assert z.restrict(4) is None
        assert (z**3).restrict(4) is not None  # z12^3 = i

    def test_embed_requires_divisibility(self):
        with pytest.raises(ValueError):
            Cyc.root_of_unity(4).embed(6)

    def test_power_basis_consistency(self):
        # zeta_6 = zeta_12^2 under the embedding
        z6 = Cyc.root_of_unity(6).embed(12)
        z12 = Cyc.root_of_unity(12)
        assert z6 == z12**2
