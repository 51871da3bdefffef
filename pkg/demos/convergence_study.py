"""Walkthrough: numeric confirmation of scheme orders on matrix flows.

The symbolic machinery says a scheme has order p; replacing the letters with
seeded random 4x4 matrices and measuring one-step errors over a geometric
grid of step sizes should then fit a log-log slope close to p + 1.
"""

from splitcond import empirical_order
from splitcond.cli import REGISTRY

print(f"{'scheme':14s} {'order':>5s} {'fitted slope':>12s} {'fit rms':>8s}")
for name, entry in REGISTRY.items():
    report = empirical_order(entry.scheme, dimension=4, seed=1)
    print(
        f"{name:14s} {entry.order:5d} {report.slope:12.3f} {report.fit_residual:8.4f}"
    )

print("\nerror decay for strang (slope ~ 3 means order 2):")
report = empirical_order(REGISTRY["strang"].scheme, dimension=4, seed=1)
for t, err, used in zip(report.step_sizes, report.errors, report.used):
    marker = "" if used else "   (below roundoff floor, excluded from fit)"
    print(f"  t = {t:9.3e}   error = {err:9.3e}{marker}")
