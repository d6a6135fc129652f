"""Expanding measured (sampled) data without endpoint artefacts.

Writes a small CSV of noisy measurements of an asymmetric profile, loads it
back as a piecewise-linear spec, and expands it in both bases.  The table
is integrated in closed form panel by panel, so no quadrature error is
aliased with the interpolation error.
"""

import os
import tempfile

import numpy as np

from antifourier import (
    antiperiodic_coefficients,
    antiperiodic_partial_sum,
    classical_coefficients,
    classical_partial_sum,
    evaluate,
    parse_function_spec,
    shift_gamma,
)

rng = np.random.default_rng(7)
xs = np.linspace(-2.0, 2.0, 81)
ys = np.tanh(1.5 * xs) + 0.4 * xs + 0.02 * rng.standard_normal(xs.size)

path = os.path.join(tempfile.mkdtemp(), "profile.csv")
with open(path, "w", encoding="utf-8") as handle:
    handle.write("x,y\n")
    for x, y in zip(xs, ys):
        handle.write(f"{float(x)!r},{float(y)!r}\n")

spec = parse_function_spec(f"csv:{path}", 2.0)
print(f"loaded {len(spec.body.xs)} samples from {path}")
print(f"f(-L) = {evaluate(spec, -2.0):+.4f}, f(L) = {evaluate(spec, 2.0):+.4f}, "
      f"shift gamma = {shift_gamma(spec):+.4f}")

N = 64
classical = classical_coefficients(spec, N)
anti = antiperiodic_coefficients(spec, N)

print("\nreconstruction error |series - data| at the samples:")
print(f"{'M':>6} {'classical max':>14} {'half-integer max':>18}")
for M in (8, 16, 32, 64):
    err_c = np.abs(classical_partial_sum(classical, xs, M) - ys).max()
    err_a = np.abs(antiperiodic_partial_sum(anti, xs, M) - ys).max()
    print(f"{M:>6} {err_c:>14.3e} {err_a:>18.3e}")

edge = np.abs(classical_partial_sum(classical, xs[-1], N) - ys[-1])
print(f"\nclassical error at the right edge: {edge:.3f} "
      f"(stuck near half the endpoint gap {abs(ys[-1] - ys[0]) / 2:.3f})")
print("the half-integer expansion tracks the measured endpoints instead.")
