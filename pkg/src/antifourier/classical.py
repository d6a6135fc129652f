"""Classical Fourier series on [-L, L].

Coefficients follow the usual normalization

    a_n = (1/L) int_{-L}^{L} f(x) cos(n pi x / L) dx,   n = 0..N,
    b_n = (1/L) int_{-L}^{L} f(x) sin(n pi x / L) dx,   n = 1..N,

and the partial sum is a_0/2 + sum_{n=1}^{M} (a_n cos + b_n sin).  Each
coefficient is an independent quadrature (no FFT), so arbitrary function
specs and tolerances are supported.  Basis values are computed with the
exact-at-half-multiples helpers, which makes sin(n pi) at x = +-L exactly
zero and the endpoint symmetry S(-L) == S(L) hold bitwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import TrigAtom, project
from ._trig import cospi, sinpi
from .catalog import FunctionSpec
from .errors import NonConvergence, OrderExceedsTruncation
from .quadrature import DEFAULT_CONFIG, QuadratureConfig


@dataclass(frozen=True, eq=False)
class ClassicalCoefficients:
    """Truncated classical Fourier coefficients.

    ``a`` holds a_0..a_N, ``b`` holds b_1..b_N.  Arrays are read-only.
    """

    L: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.size != b.size + 1:
            raise ValueError("expected len(a) == len(b) + 1")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise ValueError("coefficients must be finite")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def N(self) -> int:
        return self.a.size - 1

    def truncated(self, M: int) -> "ClassicalCoefficients":
        """Copy truncated to order M <= N."""
        if M > self.N:
            raise OrderExceedsTruncation(f"M={M} exceeds stored order N={self.N}")
        return ClassicalCoefficients(self.L, self.a[: M + 1].copy(), self.b[:M].copy())


def classical_coefficients(
    f: FunctionSpec, N: int, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> ClassicalCoefficients:
    """Compute a_0..a_N and b_1..b_N of ``f`` by quadrature.

    Raises NonConvergence tagged with the offending harmonic index and
    kernel kind if an integral cannot meet the tolerance.
    """
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    L = f.L
    a = np.empty(N + 1)
    b = np.empty(N)
    for n in range(N + 1):
        try:
            a[n] = project(f, 0.0, (TrigAtom("cos", 1.0, float(n)),), cfg) / L
        except NonConvergence as exc:
            raise NonConvergence(
                f"cosine coefficient n={n} did not converge: {exc}",
                achieved=exc.achieved, target=exc.target, index=n, kind="cos",
            ) from exc
    for n in range(1, N + 1):
        try:
            b[n - 1] = project(f, 0.0, (TrigAtom("sin", 1.0, float(n)),), cfg) / L
        except NonConvergence as exc:
            raise NonConvergence(
                f"sine coefficient n={n} did not converge: {exc}",
                achieved=exc.achieved, target=exc.target, index=n, kind="sin",
            ) from exc
    return ClassicalCoefficients(L, a, b)


def classical_partial_sum(coeffs: ClassicalCoefficients, x, M: int | None = None):
    """Evaluate the order-M partial sum at scalar or array ``x``.

    Defined for all real x (the sum is the 2L-periodic extension).
    """
    if M is None:
        M = coeffs.N
    if M > coeffs.N:
        raise OrderExceedsTruncation(f"M={M} exceeds stored order N={coeffs.N}")
    if M < 0:
        raise ValueError("partial-sum order must be nonnegative")
    u = np.asarray(x, dtype=float) / coeffs.L
    n = np.arange(1, M + 1, dtype=float)
    phase = np.multiply.outer(n, u)
    value = (
        0.5 * coeffs.a[0]
        + np.tensordot(coeffs.a[1 : M + 1], cospi(phase), axes=1)
        + np.tensordot(coeffs.b[:M], sinpi(phase), axes=1)
    )
    if np.ndim(x) == 0:
        return float(value)
    return value
