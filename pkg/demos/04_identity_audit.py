"""The identity audit: every catalogued identity against the quadrature oracle.

M4A/M4B/M5A are asserted facts and pass at tight tolerance.  M5B is printed
with an ambiguous K argument, so both readings are measured; M10 descends
from M5B and is adjudicated rather than assumed.  The audit shows both of
them failing away from their analytically forced anchor rows, which is the
measured answer, not a bug.

    python demos/04_identity_audit.py
"""

from fracbessel import OrderArg, adjudicate_m10, verify_m4a, verify_m4b, verify_m5a, verify_m5b

print("Asserted identities (quadrature LHS vs oracle-backed RHS):")
for name, verify, grid in (
    ("M4A", verify_m4a, [(1.0, 1.0, 1.0), (0.5, 2.0, 1.0), (2.5, 1.0, 0.5)]),
    ("M4B", verify_m4b, [(1.0, 1.0, 1.0), (1.5, 1.0, 2.0), (0.7, 3.0, 1.0)]),
    ("M5A", verify_m5a, [(-0.5, 1.0, 1.0), (-0.25, 2.0, 1.0), (-0.9, 1.0, 2.0)]),
):
    for params in grid:
        rec = verify(*params, tol=1e-7)
        print(f"  {name} {str(params):<20} rel_dev = {rec.rel_dev:.2e}  {'ok' if rec.passed else 'FAIL'}"
              )

print("\nM5B, both readings of the K argument (x = 1 makes them coincide):")
for s, beta, x in ((-0.25, 1.0, 1.0), (-0.25, 1.0, 4.0), (-0.4, 2.0, 2.0)):
    printed, alt = verify_m5b(s, beta, x, tol=1e-7)
    print(f"  s={s} beta={beta} x={x}:")
    print(f"    as printed  (arg beta/x      = {printed.params['k_arg']:.4g}): rel_dev = {printed.rel_dev:.2e}")
    print(f"    alternative (arg beta/sqrt x = {alt.params['k_arg']:.4g}): rel_dev = {alt.rel_dev:.2e}")

print("\nM10 adjudication (informational; only s = 1/2 rows are forced):")
grid = [OrderArg(0.5, 1.0), OrderArg(0.5, 2.0), OrderArg(1.5, 2.0), OrderArg(0.7, 1.0), OrderArg(2.5, 1.0)]
for rec in adjudicate_m10(grid, tol=1e-9):
    forced = " (forced)" if rec.params["s"] == 0.5 else ""
    print(
        f"  s={rec.params['s']:<4} z={rec.params['z']:<4} series={rec.lhs:.10g}  "
        f"oracle={rec.rhs:.10g}  rel_dev={rec.rel_dev:.2e}{forced}"
    )

print("\nReading: the expansion labelled M10 reproduces the oracle only where its")
print("leading term is forced; elsewhere the recorded deviations are large and")
print("systematic, consistent with the variable-substitution inconsistency the")
print("M5B audit exposes at x != 1.")
