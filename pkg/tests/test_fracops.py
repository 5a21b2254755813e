"""Gamma, erfc, and the fractional integral operator in both routes:
closed-form on monomials and adaptive quadrature on arbitrary fields."""

import math

import numpy as np
import pytest
import scipy.integrate

from fracolloc import (
    ConvergenceError,
    DomainError,
    MonomialTerm,
    ParameterError,
    PoleError,
    erfc,
    gamma_fn,
    rl_monomial,
    rl_numeric,
    rl_poly,
)

ALPHAS = (0.1, 0.5, 2.0 / 3.0, 0.9)


class TestGamma:
    def test_half_integers(self):
        assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert gamma_fn(1.5) == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-14)

    def test_factorials(self):
        for n in range(1, 15):
            assert gamma_fn(float(n)) == pytest.approx(math.factorial(n - 1),
                                                       rel=1e-14)

    def test_accuracy_sweep(self):
        """Relative error at most 1e-13 against the stdlib across (0, 50],
        including the reflection region below 0.5."""
        xs = np.concatenate([
            np.linspace(1e-3, 0.5, 400),
            np.linspace(0.5, 50.0, 1600),
        ])
        worst = max(abs(gamma_fn(float(x)) - math.gamma(float(x)))
                    / abs(math.gamma(float(x))) for x in xs)
        assert worst <= 1e-13

    def test_negative_non_integers(self):
        for x in (-0.5, -1.5, -2.5, -3.7):
            assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-12)

    @pytest.mark.parametrize("x", [0.0, -1.0, -3.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            gamma_fn(x)


class TestErfc:
    def test_origin(self):
        assert erfc(0.0) == 1.0

    def test_against_quadrature(self):
        # erfc(x) = (2/sqrt(pi)) integral of exp(-s^2) from x to infinity.
        rng = np.random.default_rng(7)
        for x in rng.uniform(-3.0, 3.0, 12):
            ref, _ = scipy.integrate.quad(lambda s: math.exp(-s * s),
                                          float(x), math.inf)
            ref *= 2.0 / math.sqrt(math.pi)
            assert erfc(float(x)) == pytest.approx(ref, abs=1e-13)

    def test_symmetry(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(-3.0, 3.0, 100):
            assert erfc(float(x)) + erfc(float(-x)) == pytest.approx(2.0,
                                                                     abs=1e-13)

    def test_saturation(self):
        assert erfc(30.0) == 0.0
        assert erfc(-30.0) == 2.0


class TestMonomialTerm:
    def test_rejects_non_integrable_exponent(self):
        with pytest.raises(DomainError):
            MonomialTerm(1.0, -1.0)


class TestRlMonomial:
    def test_order_one_is_plain_integration(self):
        # I^1 of 1 evaluated at x is x itself.
        assert rl_monomial(1.0, 0.0, 0.49) == pytest.approx(0.49, rel=1e-14)

    def test_half_order_of_constant(self):
        # x^(1/2) / Gamma(3/2) at x = 1 is 2 / sqrt(pi).
        assert rl_monomial(0.5, 0.0, 1.0) == pytest.approx(
            2.0 / math.sqrt(math.pi), rel=1e-14)

    def test_half_order_of_linear(self):
        assert rl_monomial(0.5, 1.0, 1.0) == pytest.approx(
            1.0 / math.gamma(2.5), rel=1e-14)

    def test_order_zero_is_identity(self):
        assert rl_monomial(0.0, 2.0, 0.5) == pytest.approx(0.25, rel=1e-15)
        assert rl_monomial(0.0, 0.0, 0.3) == 1.0

    def test_at_origin(self):
        assert rl_monomial(0.5, 0.0, 0.0) == 0.0
        assert rl_monomial(0.5, 2.0, 0.0) == 0.0

    def test_invalid_order(self):
        with pytest.raises(ParameterError):
            rl_monomial(1.5, 0.0, 1.0)
        with pytest.raises(ParameterError):
            rl_monomial(-0.1, 0.0, 1.0)

    def test_invalid_exponent(self):
        with pytest.raises(DomainError):
            rl_monomial(0.5, -1.0, 1.0)


class TestRlPoly:
    def test_empty_sum(self):
        assert rl_poly(0.5, [], 1.0) == 0.0

    def test_two_terms(self):
        terms = [MonomialTerm(1.0, 0.0), MonomialTerm(1.0, 1.0)]
        ref = 2.0 / math.sqrt(math.pi) + 1.0 / math.gamma(2.5)
        assert rl_poly(0.5, terms, 1.0) == pytest.approx(ref, rel=1e-14)

    def test_linearity_in_coefficients(self):
        terms = [MonomialTerm(2.0, 1.0), MonomialTerm(-3.0, 3.0)]
        scaled = [MonomialTerm(4.0, 1.0), MonomialTerm(-6.0, 3.0)]
        assert rl_poly(0.5, scaled, 0.7) == pytest.approx(
            2.0 * rl_poly(0.5, terms, 0.7), rel=1e-14)


class TestSemigroup:
    @pytest.mark.parametrize("a", [0.25, 0.5])
    @pytest.mark.parametrize("b", [0.25, 0.5])
    @pytest.mark.parametrize("nu", [0.0, 1.0, 2.0])
    @pytest.mark.parametrize("x", [0.3, 1.0])
    def test_composition_on_monomials(self, a, b, nu, x):
        """I^a I^b x^nu = I^(a+b) x^nu.  The inner application turns x^nu
        into a known multiple of x^(b+nu), so both sides stay closed-form."""
        inner_coeff = gamma_fn(nu + 1.0) / gamma_fn(b + nu + 1.0)
        lhs = inner_coeff * rl_monomial(a, b + nu, x)
        rhs = rl_monomial(a + b, nu, x)
        assert abs(lhs - rhs) <= 1e-12

    @pytest.mark.parametrize("nu", [0.0, 1.0, 2.0])
    def test_commutativity(self, nu):
        a, b, x = 0.3, 0.6, 0.8
        ab = gamma_fn(nu + 1.0) / gamma_fn(b + nu + 1.0) * rl_monomial(a, b + nu, x)
        ba = gamma_fn(nu + 1.0) / gamma_fn(a + nu + 1.0) * rl_monomial(b, a + nu, x)
        assert abs(ab - ba) <= 1e-13


class TestRlNumeric:
    def test_zero_field(self):
        assert rl_numeric(0.5, lambda s: 0.0, 1.0, 1e-12) == 0.0

    def test_matches_constant_closed_form(self):
        got = rl_numeric(0.5, lambda s: 1.0, 1.0, 1e-12)
        assert got == pytest.approx(2.0 / math.sqrt(math.pi), abs=1e-12)

    def test_matches_linear_closed_form(self):
        got = rl_numeric(2.0 / 3.0, lambda s: s, 1.0, 1e-12)
        assert got == pytest.approx(1.0 / math.gamma(8.0 / 3.0), abs=1e-12)

    def test_order_one_is_the_running_integral(self):
        got = rl_numeric(1.0, lambda s: s * s, 0.9, 1e-12)
        assert got == pytest.approx(0.9 ** 3 / 3.0, rel=1e-13)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_oracle_agreement_on_random_polynomials(self, alpha):
        """rl_numeric and rl_poly are independent routes to the same
        operator; on polynomials they must agree within 10x the oracle
        tolerance."""
        rng = np.random.default_rng(int(1000 * alpha))
        tol = 1e-12
        for _ in range(50):
            deg = int(rng.integers(0, 7))
            terms = [MonomialTerm(float(c), float(k))
                     for k, c in enumerate(rng.uniform(-1.0, 1.0, deg + 1))]
            x = float(rng.uniform(0.1, 1.0))
            ref = rl_poly(alpha, terms, x)
            got = rl_numeric(alpha, lambda s: sum(
                t.coefficient * s ** t.exponent for t in terms), x, tol)
            assert abs(got - ref) <= 10.0 * tol

    def test_non_convergence_on_wild_oscillation(self):
        with pytest.raises(ConvergenceError):
            rl_numeric(0.5, lambda s: math.sin(1000.0 * s * s), 1.0, 1e-12)

    def test_parameter_validation(self):
        with pytest.raises(ParameterError):
            rl_numeric(0.0, lambda s: 1.0, 1.0, 1e-10)
        with pytest.raises(ParameterError):
            rl_numeric(0.5, lambda s: 1.0, 1.0, 1e-13)
        with pytest.raises(DomainError):
            rl_numeric(0.5, lambda s: 1.0, 0.0, 1e-10)

    def test_returns_plain_float(self):
        assert type(rl_numeric(0.5, lambda s: s, 0.5, 1e-10)) is float
