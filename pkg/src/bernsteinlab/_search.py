"""Scalar search helpers: golden-section maximization and bisection."""

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, a: float, b: float, xtol: float = 1e-6):
    """Maximize f on [a, b] by golden-section search; returns (x, f(x)).

    Assumes a single interior maximum in the bracket; callers locate the
    bracket with a coarse grid first.
    """
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > xtol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    xm = 0.5 * (a + b)
    fm = f(xm)
    if f1 > fm:
        xm, fm = x1, f1
    if f2 > fm:
        xm, fm = x2, f2
    return xm, fm


def bisect_root(f, a: float, b: float, xtol: float):
    """Root of f in [a, b] by plain bisection; f(a) and f(b) must differ in sign."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise ValueError(f"no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")
    while b - a > xtol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def refine_grid_maxima(f, xs, values, xtol: float = 1e-6, include_ends: bool = True):
    """Polish every local maximum of sampled |values| with golden sections.

    xs must be increasing.  Returns a list of (x, f(x)) pairs, one per grid
    local maximum (endpoints included when include_ends is set).
    """
    out = []
    n = len(xs)
    for i in range(n):
        left = values[i - 1] if i > 0 else -math.inf
        right = values[i + 1] if i < n - 1 else -math.inf
        if values[i] < left or values[i] < right:
            continue
        if i == 0 or i == n - 1:
            if not include_ends:
                continue
            lo = xs[max(i - 1, 0)]
            hi = xs[min(i + 1, n - 1)]
        else:
            lo, hi = xs[i - 1], xs[i + 1]
        if hi > lo:
            out.append(golden_max(f, lo, hi, xtol))
        else:
            out.append((xs[i], f(xs[i])))
    return out
