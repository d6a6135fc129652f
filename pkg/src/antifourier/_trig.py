"""cos(pi*t) and sin(pi*t) with exact values at multiples of one half.

Partial sums and basis functions are evaluated through these helpers so that
basis zeros at the interval endpoints are exact in floating point (plain
``np.cos(n * np.pi)`` is only zero to rounding).  Argument reduction uses
``fmod``, which is exact, so accuracy does not degrade for large arguments.
"""

import numpy as np


def _reduce(t):
    # fold onto [0, 1) and record the half-period sign flip
    r = np.fmod(np.asarray(t, dtype=float), 2.0)
    r = np.where(r < 0.0, r + 2.0, r)
    sign = np.where(r >= 1.0, -1.0, 1.0)
    r = np.where(r >= 1.0, r - 1.0, r)
    return r, sign


def cospi(t):
    """Return cos(pi * t); exactly 0.0 at half-integers, +-1.0 at integers."""
    r, sign = _reduce(t)
    v = np.where(
        r < 0.25,
        np.cos(np.pi * r),
        np.where(
            r <= 0.75,
            np.sin(np.pi * (0.5 - r)),  # exact 0 at r = 0.5
            -np.cos(np.pi * (1.0 - r)),
        ),
    )
    out = sign * v
    return out.item() if np.ndim(out) == 0 else out


def sinpi(t):
    """Return sin(pi * t); exactly 0.0 at integers, +-1.0 at half-integers."""
    r, sign = _reduce(t)
    rr = np.where(r > 0.5, 1.0 - r, r)  # exact by Sterbenz
    v = np.where(rr < 0.25, np.sin(np.pi * rr), np.cos(np.pi * (0.5 - rr)))
    out = sign * v
    return out.item() if np.ndim(out) == 0 else out
