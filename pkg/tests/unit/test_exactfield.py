from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from backend.core.errors import FieldMismatchError
from backend.core.exactfield import (
    CycloField,
    RootOfUnityLevel,
    Scalar,
    cyclotomic_polynomial,
    euler_phi,
    quantum_integer,
    sqrt_two,
)

CONDUCTORS = [1, 4, 5, 8, 12, 24, 32, 40]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw, field: CycloField):
    coeffs = draw(st.lists(rationals, min_size=field.degree, max_size=field.degree))
    return field.from_coeffs(coeffs)


@st.composite
def field_and_triple(draw):
    field = CycloField.of(draw(st.sampled_from(CONDUCTORS)))
    return field, draw(scalars(field)), draw(scalars(field)), draw(scalars(field))


class TestCyclotomicPolynomials:
    """Φ_n and φ(n) against an independent oracle."""

    @pytest.mark.parametrize("n", range(1, 65))
    def test_matches_sympy(self, n):
        x = sp.symbols("x")
        expected = [int(c) for c in reversed(sp.Poly(sp.cyclotomic_poly(n, x), x).all_coeffs())]
        assert list(cyclotomic_polynomial(n)) == expected

    @pytest.mark.parametrize("n", [1, 2, 7, 8, 24, 40, 64])
    def test_degree_is_totient(self, n):
        assert euler_phi(n) == int(sp.totient(n))

    @pytest.mark.parametrize("n", range(1, 41))
    def test_product_over_divisors_reconstructs(self, n):
        """Π_{d|n} Φ_d = xⁿ − 1."""
        x = sp.symbols("x")
        product = sp.Integer(1)
        for d in sp.divisors(n):
            product *= sum(c * x ** k for k, c in enumerate(cyclotomic_polynomial(d)))
        assert sp.expand(product - (x ** n - 1)) == 0

    def test_rejects_bad_conductor(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)


class TestFieldAxioms:
    """Exact field axioms on random triples."""

    @given(field_and_triple())
    def test_ring_laws(self, data):
        F, a, b, c = data
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + F.zero() == a
        assert a * F.one() == a
        assert a - a == F.zero()

    @given(field_and_triple())
    def test_inverses(self, data):
        F, a, b, _ = data
        if not a.is_zero():
            assert a * a.inverse() == F.one()
            assert (b / a) * a == b

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            CycloField.of(8).zero().inverse()
        with pytest.raises(ZeroDivisionError):
            CycloField.of(8).one() / 0

    def test_fields_do_not_mix(self):
        with pytest.raises(FieldMismatchError):
            CycloField.of(8).zeta() + CycloField.of(12).zeta()

    def test_scalars_are_built_through_fields(self):
        with pytest.raises(TypeError):
            Scalar()


class TestRootsOfUnity:
    """ζ, √2 and quantum integers."""

    @pytest.mark.parametrize("n", [3, 8, 12, 24, 40])
    def test_zeta_has_order_n(self, n):
        F = CycloField.of(n)
        z = F.zeta()
        assert z ** n == F.one()
        assert all(z ** k != F.one() for k in range(1, n))

    def test_negative_powers(self):
        F = CycloField.of(24)
        assert F.zeta(-1) * F.zeta() == F.one()
        assert F.zeta(25) == F.zeta(1)

    @pytest.mark.parametrize("n", [8, 24, 32, 40])
    def test_sqrt_two_squares_to_two(self, n):
        F = CycloField.of(n)
        assert sqrt_two(F) * sqrt_two(F) == F.rational(2)

    def test_sqrt_two_needs_multiple_of_eight(self):
        with pytest.raises(ValueError):
            sqrt_two(CycloField.of(12))

    def test_rational_rendering(self):
        F = CycloField.of(8)
        assert str(F.rational(Fraction(-3, 4))) == "-3/4"
        assert F.rational(Fraction(1, 2)).rational_value() == Fraction(1, 2)

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_level_parameters(self, r):
        level = RootOfUnityLevel(r)
        F = level.field
        assert F.conductor == 8 * r
        assert level.epsilon ** 2 == level.q
        assert level.q_half_power(2) == level.q
        assert level.q ** (2 * r) == F.one()
        assert level.sqrt2 ** 2 == 2

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_quantum_integers(self, r):
        level = RootOfUnityLevel(r)
        q = level.q
        assert level.qint(0) == 0
        assert level.qint(1) == 1
        assert level.qint(2) == q + q.inverse()
        assert level.qint(r).is_zero()
        for n in range(1, r):
            assert not level.qint(n).is_zero()
            # ⟦2⟧⟦n⟧ = ⟦n+1⟧ + ⟦n−1⟧
            assert level.qint(2) * level.qint(n) == level.qint(n + 1) + level.qint(n - 1)
            assert level.qint(-n) == -level.qint(n)

    def test_quantum_integer_needs_q_squared_not_one(self):
        with pytest.raises(ValueError):
            quantum_integer(2, CycloField.of(1).one())

    def test_level_must_be_at_least_three(self):
        with pytest.raises(ValueError):
            RootOfUnityLevel(2)


class TestScalarArithmetic:
    """Worked values in small fields."""

    def test_zeta_squared_in_gaussian_field(self):
        F = CycloField.of(4)
        assert F.zeta() * F.zeta() == F.rational(-1)

    def test_inverse_of_zeta_eight(self):
        F = CycloField.of(8)
        z = F.zeta()
        assert F.one() / z == -(z ** 3)

    def test_sum_cancels(self):
        F = CycloField.of(8)
        z = F.zeta()
        assert (F.one() + z) + (F.one() - z) == F.rational(2)
