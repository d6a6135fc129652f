"""Projection of a FunctionSpec onto trigonometric kernels.

Every coefficient in the package is an integral (1/L) * int_{-L}^{L}
(f(x) - shift) * K(x) dx where the kernel K is a short sum of atoms
amp * cos(mult * pi * x / L) or amp * sin(mult * pi * x / L), all of one
parity.  Two integration paths are used:

* callable bodies: the symmetric integral is folded onto [0, L] with the
  parity-matched combination of f(x) and f(-x), then handed to the Simpson
  engine.  The fold makes the integral of an odd integrand exactly zero in
  floating point (the combination cancels pointwise before multiplication),
  and it removes the catalog sign-function jumps at the origin, where every
  odd kernel vanishes.

* sampled bodies: each panel of the piecewise-linear interpolant is
  integrated against each atom in closed form, so no quadrature error is
  aliased with interpolation error.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ._trig import cospi, sinpi
from .catalog import FunctionSpec, Sampled, evaluate
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate


@dataclass(frozen=True)
class TrigAtom:
    """One term amp * trig(mult * pi * x / L); kind is "cos" or "sin"."""

    kind: str
    amplitude: float
    mult: float


def kernel_values(atoms, L, x):
    """Evaluate a sum of atoms at scalar or array ``x``."""
    u = np.asarray(x, dtype=float) / L
    total = 0.0
    for atom in atoms:
        base = cospi(atom.mult * u) if atom.kind == "cos" else sinpi(atom.mult * u)
        total = total + atom.amplitude * base
    return total


def _kernel_parity(atoms):
    kinds = {atom.kind for atom in atoms}
    if kinds == {"cos"}:
        return 1.0
    if kinds == {"sin"}:
        return -1.0
    raise ValueError("kernel atoms must share one parity")


def _atom_table_integral(xs, ys, atom, L):
    """Exact integral of the piecewise-linear table against one atom."""
    omega = atom.mult * np.pi / L
    x0, x1 = xs[:-1], xs[1:]
    y0, y1 = ys[:-1], ys[1:]
    if omega == 0.0:
        if atom.kind == "sin":
            return 0.0
        return atom.amplitude * float((0.5 * (y0 + y1) * (x1 - x0)).sum())
    slope = (y1 - y0) / (x1 - x0)
    s0, s1 = np.sin(omega * x0), np.sin(omega * x1)
    c0, c1 = np.cos(omega * x0), np.cos(omega * x1)
    if atom.kind == "cos":
        panels = (y1 * s1 - y0 * s0) / omega + slope * (c1 - c0) / omega**2
    else:
        panels = (y0 * c0 - y1 * c1) / omega + slope * (s1 - s0) / omega**2
    return atom.amplitude * float(panels.sum())


def project(
    spec: FunctionSpec,
    shift: float,
    atoms,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Return int_{-L}^{L} (f(x) - shift) * K(x) dx for kernel K = sum(atoms)."""
    L = spec.L
    body = spec.body
    if isinstance(body, Sampled):
        ys = np.asarray(body.ys, dtype=float) - shift
        xs = np.asarray(body.xs, dtype=float)
        return sum(_atom_table_integral(xs, ys, atom, L) for atom in atoms)

    parity = _kernel_parity(atoms)

    # Keep the initial panel count above the largest frequency multiplier.
    # With p panels and p > mult, no dyadic refinement grid can contain all
    # zeros of trig(mult * pi * x / L) (that would need p * 2^d to divide
    # mult), so an oscillation can never alias to an exact zero estimate.
    max_mult = max(abs(atom.mult) for atom in atoms)
    if max_mult >= cfg.base_panels:
        cfg = replace(cfg, base_panels=2 * (int(max_mult) // 2 + 1))

    def integrand(x):
        folded = (evaluate(spec, x) - shift) + parity * (evaluate(spec, -x) - shift)
        return folded * kernel_values(atoms, L, x)

    return integrate(integrand, 0.0, L, cfg)
