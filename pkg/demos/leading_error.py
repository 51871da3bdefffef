"""Walkthrough: the leading local-error term of a verified scheme.

Once a scheme passes its order-p conditions, the first surviving term of the
local error is a degree-(p+1) Lie element; its Lyndon decomposition tells
you exactly which commutators dominate the error and with what weights.
"""

from splitcond import leading_error_term, verify_scheme
from splitcond.cli import REGISTRY

for name, entry in REGISTRY.items():
    scheme, order = entry.scheme, entry.order
    report = verify_scheme(scheme, order)
    print(f"{name}: order {order} verified = {report.satisfied}")
    term = leading_error_term(scheme, order)
    print(f"  leading error (degree {term.degree} commutators): {term}")
    print()

# Reading the output: lie-trotter's error is dominated by [A,B]/2, the
# Strang-type composition by the two degree-3 commutators, and the 3-stage
# order-3 scheme by the three degree-4 basis elements.
