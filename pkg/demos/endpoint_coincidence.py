"""Endpoint behaviour of the two series for f(x) = x on [-pi, pi].

The classical Fourier sum is 2L-periodic, so at x = +-pi it lands on the
midpoint of the periodic jump (zero) no matter how many terms are kept.
The half-integer-harmonic series matches f at both endpoints instead.
"""

import numpy as np

from antifourier import (
    FunctionSpec,
    Named,
    antiperiodic_coefficients,
    antiperiodic_partial_sum,
    classical_coefficients,
    classical_partial_sum,
)

f = FunctionSpec(np.pi, Named("identity"))

N = 200
classical = classical_coefficients(f, N)
anti = antiperiodic_coefficients(f, N)

print(f"f(x) = x on [-pi, pi], truncation order M = {N}")
print(f"shift gamma = {anti.gamma}  (zero: f is already antiperiodic)\n")

print(f"{'x':>10} {'f(x)':>12} {'classical':>12} {'half-integer':>14}")
for x in (-np.pi, -3.0, -1.5, 0.0, 1.5, 3.0, np.pi):
    s = classical_partial_sum(classical, x)
    a = antiperiodic_partial_sum(anti, x)
    print(f"{x:>10.6f} {f(x):>12.6f} {s:>12.6f} {a:>14.6f}")

print("\nendpoint errors |S_M f(pi) - pi| as M grows:")
print(f"{'M':>6} {'classical':>12} {'half-integer':>14}")
for M in (10, 25, 50, 100, 200):
    err_c = abs(classical_partial_sum(classical, np.pi, M) - np.pi)
    err_a = abs(antiperiodic_partial_sum(anti, np.pi, M) - np.pi)
    print(f"{M:>6} {err_c:>12.3e} {err_a:>14.3e}")

print("\nThe classical error stays pi forever; the half-integer error decays like 1/M.")
