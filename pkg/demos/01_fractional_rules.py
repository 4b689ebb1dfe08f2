"""Tour of the differintegral machinery.

Runs the order-s operator through its closed-form rules and checks each one
against the quadrature route, the way the test suite does but with the
numbers printed for inspection.

    python demos/01_fractional_rules.py
"""

import math

from fracbessel import (
    BoundarySetup,
    exp_rule,
    leibniz_series,
    log_rule,
    power_rule,
    rl_derivative,
    rl_integral,
)


def show(label, got, want):
    rel = abs(got - want) / max(abs(want), 1e-300)
    print(f"  {label:<46} {got: .12f}  (expected {want: .12f}, rel {rel:.1e})")


print("Order -1 is ordinary integration:")
show("d^-1 [1] over (0, 2)", rl_integral(lambda t: 1.0, -1.0, BoundarySetup(0.0, 2.0)), 2.0)

print("\nHalf-order integral of t, against the power rule:")
bounds = BoundarySetup(0.0, 1.0)
show(
    "d^-1/2 [t] at x=1 (quadrature)",
    rl_integral(lambda t: t, -0.5, bounds),
    4.0 / (3.0 * math.sqrt(math.pi)),
)
show("d^-1/2 [t] at x=1 (closed form)", power_rule(-0.5, 1.0, bounds), 4.0 / (3.0 * math.sqrt(math.pi)))

print("\nHalf-order derivative by composition (d/dx of a half-order integral):")
show("d^1/2 [t] at x=1", rl_derivative(lambda t: t, 0.5, bounds), 2.0 / math.sqrt(math.pi))

print("\nThe exponential rule and its classical limits:")
show("d^1 [e^{2x}] at x=0.5", exp_rule(1.0, 2.0, 0.5), 2.0 * math.e)
show("d^-1 [e^t] at x=1 (= e - 1)", exp_rule(-1.0, 1.0, 1.0), math.e - 1.0)
show(
    "d^1/2 [e^x] at x=1 vs composition",
    exp_rule(0.5, 1.0, 1.0),
    rl_derivative(math.exp, 0.5, bounds),
)

print("\nThe logarithm rule:")
show("d^1 [ln x] at x=2", log_rule(1.0, 2.0), 0.5)
show("d^2 [ln x] at x=1", log_rule(2.0, 1.0), -1.0)
show("d^-1 [ln t] at x=1 (= x ln x - x)", log_rule(-1.0, 1.0), -1.0)

print("\nThe product rule rebuilding int_0^x t dt from f == 1, g = t:")
x = 1.7
f_frac = lambda order, y: power_rule(order, 0.0, BoundarySetup(0.0, y))
approx = leibniz_series([lambda y: y, lambda y: 1.0], f_frac, -1.0, x, 10)
show(f"sum of {approx.terms_used} product-rule terms", approx.value, x * x / 2.0)
