"""Gibbs overshoot near the interval ends, classical vs half-integer series.

The classical partial sums of f(x) = x overshoot the function by about
0.562 just inside +-pi (the Wilbraham-Gibbs constant times the endpoint
jump), and the spike does not shrink as the order grows.  The half-integer
series converges uniformly, so its excursion beyond the function's range
vanishes with M.
"""

import numpy as np

from antifourier import (
    AntiperiodicCoefficients,
    ClassicalCoefficients,
    FunctionSpec,
    Named,
    gibbs_overshoot,
)

f = FunctionSpec(np.pi, Named("identity"))

# closed-form coefficients keep this demo instant even at M = 1000
N = 1000
n = np.arange(1, N + 1)
classical = ClassicalCoefficients(np.pi, np.zeros(N + 1), 2.0 * (-1.0) ** (n + 1) / n)
m = np.arange(N + 1)
anti = AntiperiodicCoefficients(
    np.pi, 0.0, np.zeros(N + 1), 8.0 * (-1.0) ** m / (np.pi * (2 * m + 1) ** 2)
)

print("peak overshoot beyond f near the endpoints (window fraction 0.1):\n")
print(f"{'M':>6} {'classical':>12} {'half-integer':>14}")
for M in (50, 100, 200, 400, 1000):
    oc = gibbs_overshoot(f, classical, M, 0.1, 4001)
    oa = gibbs_overshoot(f, anti, M, 0.1, 4001)
    print(f"{M:>6} {oc:>12.6f} {oa:>14.3e}")

print("\nclassical limit: 2 Si(pi) - pi ~= 0.5622  (independent of M)")
print("half-integer values <= 0 mean the sum never exceeds the function there.")
