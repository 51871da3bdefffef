"""Walkthrough: generating order conditions for a 3-stage scheme, both routes.

The product e^{a1 A t} e^{b1 B t} ... e^{a3 A t} e^{b3 B t} has order 3 when
five polynomial conditions on the six stage coefficients hold.  The two
generation routes produce different-looking but equivalent systems; both are
printed and then evaluated at a classical rational solution.
"""

from fractions import Fraction

from splitcond import (
    ConcreteScheme,
    conditions_bch,
    conditions_taylor,
    systems_equivalent,
    verify_scheme,
)

STAGES, ORDER = 3, 3

print("Route 1: logarithm of the splitting product, Lyndon coefficients")
print(conditions_bch(STAGES, ORDER))

print("\nRoute 2: Taylor derivatives of the local error, Lyndon-word coefficients")
print(conditions_taylor(STAGES, ORDER))

# A classical order-3 solution with small rational coefficients.
classical = ConcreteScheme(
    (Fraction(7, 24), Fraction(3, 4), Fraction(-1, 24)),
    (Fraction(2, 3), Fraction(-2, 3), Fraction(1)),
    name="classical-order3",
)

print(f"\nverifying {classical}:")
for route in ("bch", "taylor"):
    report = verify_scheme(classical, ORDER, route)
    print(f"  {route:6s}: satisfied = {report.satisfied}")

# The two systems must agree on any witness; here the classical solution and
# a deliberately wrong scheme.
wrong = ConcreteScheme((Fraction(1), Fraction(0), Fraction(0)),
                       (Fraction(1), Fraction(0), Fraction(0)), name="lie-trotter-padded")
report = systems_equivalent(
    conditions_taylor(STAGES, ORDER), conditions_bch(STAGES, ORDER), [classical, wrong]
)
print(f"\nroutes agree on both witnesses: {report.all_agree}")
