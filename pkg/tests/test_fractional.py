"""Differintegral quadrature against the closed-form rules, and the rules
against their classical limits."""

import math

import pytest

from fracbessel import (
    BoundarySetup,
    DomainError,
    QuadratureSpec,
    ToleranceNotMet,
    exp_rule,
    leibniz_series,
    log_rule,
    lower_incomplete_gamma,
    power_rule,
    rl_derivative,
    rl_integral,
)

SQRT_PI = math.sqrt(math.pi)


class TestRlIntegral:
    def test_constant(self):
        # order -1 of f == 1 is the plain antiderivative
        assert rl_integral(lambda t: 1.0, -1.0, BoundarySetup(0.0, 2.0)) == pytest.approx(
            2.0, rel=1e-12
        )

    def test_half_order_of_t(self):
        # Gamma(2)/Gamma(2.5) * x^{1.5} = 4/(3 sqrt(pi)) at x = 1
        got = rl_integral(lambda t: t, -0.5, BoundarySetup(0.0, 1.0))
        assert got == pytest.approx(4.0 / (3.0 * SQRT_PI), rel=1e-11)

    def test_shifted_boundary(self):
        got = rl_integral(lambda t: (t - 1.0) ** 2, -0.3, BoundarySetup(1.0, 2.0))
        assert got == pytest.approx(math.gamma(3.0) / math.gamma(3.3), rel=1e-11)

    def test_validation(self):
        with pytest.raises(DomainError):
            rl_integral(lambda t: 1.0, 0.5, BoundarySetup(0.0, 1.0))
        with pytest.raises(DomainError):
            BoundarySetup(2.0, 1.0)

    def test_endpoint_hint(self):
        # f carrying its own (x - t)^0.5 factor: hint removes it exactly
        spec = QuadratureSpec(endpoint_exponent_hint=0.5)
        got = rl_integral(lambda t: math.sqrt(2.0 - t) * t, -0.5, BoundarySetup(0.0, 2.0), spec)
        ref = rl_integral(lambda t: math.sqrt(2.0 - t) * t, -0.5, BoundarySetup(0.0, 2.0))
        assert got == pytest.approx(ref, rel=1e-9)

    def test_budget_exhaustion(self):
        spec = QuadratureSpec(rel_tol=1e-13, abs_tol=1e-15, max_subdivisions=1)
        with pytest.raises(ToleranceNotMet):
            rl_integral(lambda t: math.sin(40.0 * t) ** 2 / math.sqrt(t + 1e-12), -0.5,
                        BoundarySetup(0.0, 1.0), spec)


class TestPowerRuleConsistency:
    @pytest.mark.parametrize("s", [-0.2, -0.5, -0.8])
    @pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 3.3])
    @pytest.mark.parametrize("a", [0.0, 1.0])
    def test_quadrature_matches_closed_form(self, s, p, a):
        x = a + 1.5
        bounds = BoundarySetup(a, x)
        quad_val = rl_integral(lambda t: (t - a) ** p, s, bounds)
        assert quad_val == pytest.approx(power_rule(s, p, bounds), rel=1e-6)


class TestPowerRule:
    def test_integer_order(self):
        # second derivative of t^3 at x = 2: 3!/1! * 2 = 12
        assert power_rule(2.0, 3.0, BoundarySetup(0.0, 2.0)) == pytest.approx(12.0, rel=1e-13)

    def test_half_order(self):
        assert power_rule(0.5, 1.0, BoundarySetup(0.0, 1.0)) == pytest.approx(
            2.0 / SQRT_PI, rel=1e-13
        )

    def test_gamma_pole_gives_zero(self):
        # d^2 of a linear function vanishes through the reciprocal-gamma zero
        assert power_rule(2.0, 1.0, BoundarySetup(0.0, 5.0)) == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            power_rule(0.5, -1.0, BoundarySetup(0.0, 1.0))

    def test_semigroup_on_powers(self):
        # order s1 then s2 equals order s1 + s2 in one step (exact gamma identity):
        # the first application rescales t^p to c1 t^{p-s1}, so the chain is
        # c1 * power_rule(s2, p - s1).
        for s1, s2 in [(-0.3, -0.4), (0.5, 0.25), (-0.5, 1.2), (1.5, -0.7)]:
            p = 2.6
            bounds = BoundarySetup(0.0, 1.7)
            span = bounds.x - bounds.a
            c1 = power_rule(s1, p, bounds) / span ** (p - s1)
            chained = c1 * power_rule(s2, p - s1, bounds)
            assert chained == pytest.approx(power_rule(s1 + s2, p, bounds), rel=1e-11)


class TestRlDerivative:
    def test_half_derivative_of_t(self):
        got = rl_derivative(lambda t: t, 0.5, BoundarySetup(0.0, 1.0))
        assert got == pytest.approx(2.0 / SQRT_PI, rel=1e-7)

    def test_integer_order(self):
        got = rl_derivative(lambda t: t * t, 1.0, BoundarySetup(0.0, 3.0))
        assert got == pytest.approx(6.0, rel=1e-7)

    def test_matches_exp_rule(self):
        got = rl_derivative(math.exp, 0.5, BoundarySetup(0.0, 1.0))
        assert got == pytest.approx(exp_rule(0.5, 1.0, 1.0), rel=1e-7)

    @pytest.mark.parametrize("s", [0.3, 0.7, 1.4])
    def test_composition_independence(self, s):
        # the result must not depend on how far the order is lifted
        bounds = BoundarySetup(0.0, 1.5)
        n0 = math.floor(s) + 1
        a = rl_derivative(lambda t: t * t, s, bounds, n=n0)
        b = rl_derivative(lambda t: t * t, s, bounds, n=n0 + 1)
        assert a == pytest.approx(b, rel=1e-4)
        # and the default-n value agrees with the power rule
        assert a == pytest.approx(power_rule(s, 2.0, bounds), rel=1e-5)

    def test_validation(self):
        with pytest.raises(DomainError):
            rl_derivative(lambda t: t, -0.5, BoundarySetup(0.0, 1.0))
        with pytest.raises(DomainError):
            rl_derivative(lambda t: t, 1.5, BoundarySetup(0.0, 1.0), n=1)


class TestExpRule:
    def test_integer_orders(self):
        assert exp_rule(1.0, 2.0, 0.5) == pytest.approx(2.0 * math.e, rel=1e-12)
        assert exp_rule(0.0, 1.0, 1.0) == pytest.approx(math.e, rel=1e-12)
        assert exp_rule(3.0, -2.0, 0.25) == pytest.approx(-8.0 * math.exp(-0.5), rel=1e-12)

    def test_order_minus_one_is_the_integral(self):
        # int_0^1 e^t dt = e - 1
        assert exp_rule(-1.0, 1.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-12)

    def test_against_quadrature(self):
        for s, beta, x in [(-0.5, 1.0, 1.0), (-0.25, 2.0, 0.8), (-1.7, 1.0, 2.0)]:
            ref = rl_integral(lambda t: math.exp(beta * t), s, BoundarySetup(0.0, x))
            assert exp_rule(s, beta, x) == pytest.approx(ref, rel=1e-9)

    def test_gamma_identity_form(self):
        # beta^s e^{beta x} gamma(-s, beta x)/Gamma(-s) reproduced from parts
        s, beta, x = 0.5, 1.0, 1.0
        expected = (
            beta ** s
            * math.exp(beta * x)
            * lower_incomplete_gamma(-s, beta * x)
            / math.gamma(-s)
        )
        assert exp_rule(s, beta, x) == pytest.approx(expected, rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            exp_rule(0.5, -1.0, 1.0)  # beta x < 0 with non-integer order


class TestLogRule:
    def test_classical_orders(self):
        assert log_rule(1.0, 2.0) == pytest.approx(0.5, rel=1e-14)
        assert log_rule(2.0, 1.0) == pytest.approx(-1.0, rel=1e-14)
        assert log_rule(3.0, 0.5) == pytest.approx(2.0 / 0.125, rel=1e-13)

    def test_identity_order(self):
        assert log_rule(0.0, 3.0) == math.log(3.0)

    def test_order_minus_one_is_the_integral(self):
        # int_0^1 ln t dt = -1
        assert log_rule(-1.0, 1.0) == pytest.approx(-1.0, rel=1e-12)

    def test_against_quadrature(self):
        for s, x in [(-0.5, 1.0), (-0.3, 2.0), (-1.2, 0.7)]:
            ref = rl_integral(lambda t: math.log(t), s, BoundarySetup(0.0, x))
            assert log_rule(s, x) == pytest.approx(ref, rel=1e-8)

    def test_half_order(self):
        # fractional orders cross-checked against the composition route
        got = rl_derivative(math.log, 0.5, BoundarySetup(0.0, 2.0))
        assert log_rule(0.5, 2.0) == pytest.approx(got, rel=1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_rule(0.5, -2.0)


class TestLeibniz:
    def test_constant_g_is_single_term(self):
        # g == 1 kills every j >= 1 term; the sum must be d^s f bit-for-bit
        bounds = BoundarySetup(0.0, 1.3)
        f_frac = lambda order, x: power_rule(order, 2.0, BoundarySetup(0.0, x))
        direct = f_frac(0.6, 1.3)
        approx = leibniz_series([lambda x: 1.0], f_frac, 0.6, 1.3, 10)
        assert approx.value == direct
        assert approx.terms_used == 1
        assert approx.converged

    def test_reproduces_integral_of_t(self):
        # f == 1, g = t, s = -1: the product rule must rebuild int_0^x t dt
        x = 1.7
        f_frac = lambda order, y: power_rule(order, 0.0, BoundarySetup(0.0, y))
        g_derivs = [lambda y: y, lambda y: 1.0]
        approx = leibniz_series(g_derivs, f_frac, -1.0, x, 12)
        assert approx.value == pytest.approx(x * x / 2.0, rel=1e-12)
        assert approx.converged  # terminated on the exhausted derivative list

    def test_fractional_order_against_quadrature(self):
        # f = t^0.5, g = t^2, s = -0.4 assembled by the product rule
        s, x = -0.4, 1.2
        f_frac = lambda order, y: power_rule(order, 0.5, BoundarySetup(0.0, y))
        g_derivs = [lambda y: y * y, lambda y: 2.0 * y, lambda y: 2.0]
        approx = leibniz_series(g_derivs, f_frac, s, x, 3)
        ref = rl_integral(lambda t: t ** 2.5, s, BoundarySetup(0.0, x))
        assert approx.value == pytest.approx(ref, rel=1e-9)

    def test_validation(self):
        with pytest.raises(DomainError):
            leibniz_series([], lambda o, x: 0.0, 0.5, 1.0, 3)
        with pytest.raises(DomainError):
            leibniz_series([lambda x: 1.0], lambda o, x: 0.0, 0.5, 1.0, 0)
