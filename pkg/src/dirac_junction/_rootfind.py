"""Plain interval searches shared by the spectral and scattering solvers.

Bisection is unconditionally convergent on a sign change, which matters
because the residuals carry square-root kinks near window edges.  The
golden-section minimizer honors an absolute width tolerance; library
minimizers floor their bracket at sqrt(eps)*|x|, which is wider than the
dips these solvers need to resolve.
"""

from __future__ import annotations

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def bisect_sign_change(f, lo: float, hi: float, xtol: float) -> float:
    """Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign."""
    flo = f(lo)
    if flo == 0.0:
        return lo
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo > 0) == (fmid > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def golden_min(f, lo: float, hi: float, xtol: float) -> float:
    """Minimizer of unimodal f on [lo, hi] to absolute width xtol."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)
