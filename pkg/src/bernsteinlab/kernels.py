"""Half-line integral kernels for |x|^alpha approximation, closed-form
L1/L2 best-approximation constants, and sup-norm searches on [0, inf).

All members of the family are integrals over t in (0, inf):

    H  (a, x) = sin(x) * J(a, x)         J(a, x) = int t^a/sinh(t) * x/(x^2+t^2) dt
    H1 (a, x) = J(a, x)                  envelope of |H|
    H2 (a, x) = x * J(a, x)
    F  (a, x) = int t^a / sinh(x t) * 1/(1+t^2) dt
    G  (a, x) = int t^a exp(-x t) * 1/(1+t^2) dt
    R  (a, x) = (x/a) F(a+1, x) - F(a, x)
    S  (a, x) = (a x^(a-1)/2) (x^2 + a^2) R(a, x)
    F1 (a, x) = (2 - 2^-a)     zeta(a+1) G(a, x)     lower bound on F
    F2 (a, x) = (2 - 2^-(a-2)) zeta(a-1) G(a, x)     upper bound on F, a > 2
    A0 (a, x) = int t^(a-1)/cosh(t) * x^2/(x^2+t^2) dt

plus the constants C(a) = int t^a/sinh(t) dt and D(a) = int t^(a-1)/cosh(t) dt.

Integrands are evaluated in the log-stable forms

    t^a/sinh t   = exp(a log t - t) * 2/(-expm1(-2t))
    t^a/cosh t   = exp(a log t - t) * 2/(1 + exp(-2t))
    t^a e^(-x t) = exp(a log t - x t)

so nothing overflows even for a = 80 on the exp-sinh tail nodes.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import specfun
from ._search import golden_max
from .quadrature import (
    DEFAULT_CONFIG,
    QuadConfig,
    QuadratureError,
    combine,
    integrate_finite,
    integrate_finite_batch,
    integrate_semi_infinite,
    integrate_semi_infinite_batch,
)

__all__ = [
    "KernelKind",
    "SupNormReport",
    "C_const",
    "D_const",
    "kernel_eval",
    "kernel_values",
    "sup_norm_H",
    "sup_norm_H1",
    "delta_1_closed",
    "delta_2_closed",
]


class KernelKind(Enum):
    H = "H"
    H1 = "H1"
    H2 = "H2"
    F = "F"
    G = "G"
    R = "R"
    S = "S"
    F1 = "F1"
    F2 = "F2"
    A0 = "A0"


_BATCH_CHUNK = 512


def _as_kind(kind) -> KernelKind:
    if isinstance(kind, KernelKind):
        return kind
    return KernelKind(str(kind))


# ---------------------------------------------------------------------------
# stable t-integrands
# ---------------------------------------------------------------------------


def _pow_over_sinh(alpha: float):
    def g(t):
        return np.exp(alpha * np.log(t) - t) * 2.0 / (-np.expm1(-2.0 * t))

    return g


def _pow_over_cosh(alpha: float):
    def g(t):
        return np.exp(alpha * np.log(t) - t) * 2.0 / (1.0 + np.exp(-2.0 * t))

    return g


def _require_alpha(alpha: float, low: float, kind: str):
    if not alpha > low:
        raise ValueError(f"{kind} requires alpha > {low}, got {alpha}")


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def C_const(alpha: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """C(alpha) = int_0^inf t^alpha / sinh(t) dt, alpha > 0."""
    _require_alpha(alpha, 0.0, "C_const")
    return _halfline(_pow_over_sinh(alpha), cfg)


def D_const(alpha: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """D(alpha) = int_0^inf t^(alpha-1) / cosh(t) dt, alpha > 0."""
    _require_alpha(alpha, 0.0, "D_const")
    return _halfline(_pow_over_cosh(alpha - 1.0), cfg)


def _halfline(g, cfg: QuadConfig) -> float:
    r = combine(
        integrate_finite(g, 0.0, cfg.split_point, cfg),
        integrate_semi_infinite(g, cfg.split_point, cfg),
        cfg,
    )
    if not r.converged:
        raise QuadratureError(f"half-line kernel integral did not converge: {r}")
    return r.value


# ---------------------------------------------------------------------------
# batched x-family: J(a, .) and A0(a, .) share one t-integrand across all x
# ---------------------------------------------------------------------------


def _batched_family(g, xkernel, xs: np.ndarray, cfg: QuadConfig) -> np.ndarray:
    out = np.empty(len(xs))
    for lo in range(0, len(xs), _BATCH_CHUNK):
        chunk = xs[lo : lo + _BATCH_CHUNK, None]

        def fmat(t):
            return g(t)[None, :] * xkernel(chunk, t[None, :])

        v1, ok1 = integrate_finite_batch(fmat, 0.0, cfg.split_point, cfg)
        v2, ok2 = integrate_semi_infinite_batch(fmat, cfg.split_point, cfg)
        if not (ok1 and ok2):
            raise QuadratureError("batched kernel integral did not converge")
        out[lo : lo + _BATCH_CHUNK] = v1 + v2
    return out


def _J_values(alpha: float, xs: np.ndarray, cfg: QuadConfig) -> np.ndarray:
    return _batched_family(
        _pow_over_sinh(alpha), lambda x, t: x / (x * x + t * t), xs, cfg
    )


def _A0_values(alpha: float, xs: np.ndarray, cfg: QuadConfig) -> np.ndarray:
    return _batched_family(
        _pow_over_cosh(alpha - 1.0), lambda x, t: x * x / (x * x + t * t), xs, cfg
    )


def kernel_values(kind, alpha: float, xs, cfg: QuadConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized kernel_eval over an array of positive x, for the kinds whose
    t-integrand does not depend on x (H, H1, H2, A0)."""
    kind = _as_kind(kind)
    xs = np.asarray(xs, dtype=float)
    if not (xs > 0).all():
        raise ValueError("kernel_values requires x > 0; use kernel_eval for limits at 0")
    _require_alpha(alpha, 0.0, kind.value)
    if kind is KernelKind.A0:
        return _A0_values(alpha, xs, cfg)
    if kind in (KernelKind.H, KernelKind.H1, KernelKind.H2):
        j = _J_values(alpha, xs, cfg)
        if kind is KernelKind.H:
            return np.sin(xs) * j
        if kind is KernelKind.H2:
            return xs * j
        return j
    raise ValueError(f"kernel_values does not support kind {kind.value}")


# ---------------------------------------------------------------------------
# scalar evaluation
# ---------------------------------------------------------------------------


def _F_kernel(alpha: float, x: float, cfg: QuadConfig) -> float:
    def g(t):
        xt = x * t
        return np.exp(alpha * np.log(t) - xt) * 2.0 / (-np.expm1(-2.0 * xt)) / (1.0 + t * t)

    return _halfline(g, cfg)


def _G_kernel(alpha: float, x: float, cfg: QuadConfig) -> float:
    def g(t):
        return np.exp(alpha * np.log(t) - x * t) / (1.0 + t * t)

    return _halfline(g, cfg)


def _eval_at_zero(kind: KernelKind, alpha: float) -> float:
    if kind in (KernelKind.H, KernelKind.H2, KernelKind.A0):
        return 0.0
    if kind is KernelKind.H1:
        if alpha == 1.0:
            return 0.5 * math.pi
        if alpha > 1.0:
            return 0.0
        raise ValueError(f"H1(alpha, 0) diverges for alpha < 1 (alpha={alpha})")
    raise ValueError(f"kernel {kind.value} requires x > 0")


def kernel_eval(kind, alpha: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Evaluate one member of the kernel family at (alpha, x).

    x = 0 is allowed for H, H1, H2 and A0, returning the limiting values
    (H1(1, 0) = pi/2; H1(alpha, 0) = 0 for alpha > 1; the rest vanish).
    """
    kind = _as_kind(kind)
    low = 2.0 if kind is KernelKind.F2 else 0.0
    _require_alpha(alpha, low, kind.value)
    if x < 0:
        raise ValueError(f"kernel {kind.value} requires x >= 0, got {x}")
    if x == 0.0:
        return _eval_at_zero(kind, alpha)

    if kind in (KernelKind.H, KernelKind.H1, KernelKind.H2):
        j = _J_values(alpha, np.array([x]), cfg)[0]
        if kind is KernelKind.H:
            return math.sin(x) * j
        if kind is KernelKind.H2:
            return x * j
        return j
    if kind is KernelKind.A0:
        return _A0_values(alpha, np.array([x]), cfg)[0]
    if kind is KernelKind.F:
        return _F_kernel(alpha, x, cfg)
    if kind is KernelKind.G:
        return _G_kernel(alpha, x, cfg)
    if kind is KernelKind.R:
        return (x / alpha) * _F_kernel(alpha + 1.0, x, cfg) - _F_kernel(alpha, x, cfg)
    if kind is KernelKind.S:
        r = (x / alpha) * _F_kernel(alpha + 1.0, x, cfg) - _F_kernel(alpha, x, cfg)
        return 0.5 * alpha * x ** (alpha - 1.0) * (x * x + alpha * alpha) * r
    if kind is KernelKind.F1:
        return (2.0 - 2.0**-alpha) * specfun.zeta(alpha + 1.0) * _G_kernel(alpha, x, cfg)
    if kind is KernelKind.F2:
        return (
            (2.0 - 2.0 ** -(alpha - 2.0))
            * specfun.zeta(alpha - 1.0)
            * _G_kernel(alpha, x, cfg)
        )
    raise ValueError(f"unknown kernel kind {kind!r}")


# ---------------------------------------------------------------------------
# closed-form best-approximation constants (L1, L2)
# ---------------------------------------------------------------------------


def delta_1_closed(alpha: float) -> float:
    """L1 constant: |sin(pi a/2)|/pi * 8 Gamma(a+1) * sum (-1)^n (1+2n)^-(a+2)."""
    if not alpha > -1.0:
        raise ValueError(f"delta_1_closed requires alpha > -1, got {alpha}")
    return (
        abs(math.sin(0.5 * math.pi * alpha))
        / math.pi
        * 8.0
        * specfun.gamma(alpha + 1.0)
        * specfun.alternating_odd_sum(alpha)
    )


def delta_2_closed(alpha: float) -> float:
    """L2 constant: |sin(pi a/2)|/pi * 2 Gamma(a+1) * sqrt(pi/(2a+1))."""
    if not alpha > -0.5:
        raise ValueError(f"delta_2_closed requires alpha > -1/2, got {alpha}")
    return (
        abs(math.sin(0.5 * math.pi * alpha))
        / math.pi
        * 2.0
        * specfun.gamma(alpha + 1.0)
        * math.sqrt(math.pi / (2.0 * alpha + 1.0))
    )


# ---------------------------------------------------------------------------
# sup norms over [0, inf)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupNormReport:
    """Supremum of a kernel over [0, inf) with certification data.

    The search is truncated at truncation_X; tail_bound dominates the
    function beyond that point (both H and H1 are bounded by C(alpha)/x),
    and the report is only valid when tail_bound < norm.
    """

    norm: float
    argmax: float
    truncation_X: float
    tail_bound: float
    local_maxima: list = field(default_factory=list)

    def __post_init__(self):
        if not self.tail_bound < self.norm:
            raise ValueError(
                f"uncertified sup norm: tail bound {self.tail_bound} >= norm {self.norm}"
            )
        peak = max(v for _, v in self.local_maxima)
        if self.norm != peak:
            raise ValueError("norm must equal the largest local maximum")


_PERIOD_GRID = 8  # coarse points per half-period before golden refinement


def _beta_lobe(alpha: float) -> float:
    # pi*floor(alpha/pi) + 3pi/2: abscissa right of alpha where |sin| = 1
    return math.pi * math.floor(alpha / math.pi) + 1.5 * math.pi


def sup_norm_H(alpha: float, cfg: QuadConfig = DEFAULT_CONFIG) -> SupNormReport:
    """sup over [0, inf) of |H(alpha, .)| = |sin(x)| * H1(alpha, x).

    |H| vanishes at every multiple of pi, so each period [k pi, (k+1) pi]
    is scanned on a coarse grid and its maximum polished by golden section.
    The horizon starts at max(alpha, beta(alpha)) + 10 pi and doubles until
    the tail bound C(alpha)/X certifies that no larger lobe lies beyond.
    """
    _require_alpha(alpha, 0.0, "sup_norm_H")
    c = C_const(alpha, cfg)

    def absH(x):
        return abs(math.sin(x)) * kernel_eval(KernelKind.H1, alpha, x, cfg)

    n_periods = math.ceil((max(alpha, _beta_lobe(alpha)) + 10.0 * math.pi) / math.pi)
    maxima: list = []
    scanned = 0
    for _ in range(40):
        if scanned < n_periods:
            ks = np.arange(scanned, n_periods)
            offs = np.arange(1, _PERIOD_GRID + 1) / (_PERIOD_GRID + 1.0)
            grid = (ks[:, None] + offs[None, :]) * math.pi
            vals = np.abs(np.sin(grid.ravel())) * _J_values(alpha, grid.ravel(), cfg)
            vals = vals.reshape(grid.shape)
            for row, k in enumerate(ks):
                i = int(np.argmax(vals[row]))
                lo = grid[row, i] - math.pi / (_PERIOD_GRID + 1.0)
                hi = grid[row, i] + math.pi / (_PERIOD_GRID + 1.0)
                maxima.append(golden_max(absH, max(lo, 1e-12), hi, xtol=1e-5))
            scanned = n_periods
        norm = max(v for _, v in maxima)
        x_cut = scanned * math.pi
        if c / x_cut < 0.5 * norm:
            break
        n_periods *= 2
    else:
        raise RuntimeError(f"sup_norm_H horizon did not certify for alpha={alpha}")

    argmax, norm = max(maxima, key=lambda p: p[1])
    return SupNormReport(norm, argmax, x_cut, c / x_cut, maxima)


def sup_norm_H1(alpha: float, cfg: QuadConfig = DEFAULT_CONFIG) -> SupNormReport:
    """sup over [0, inf) of the envelope H1(alpha, .), for alpha > 1.

    For alpha <= 1 the envelope is unbounded (or attains its sup at 0) and
    the domain is rejected.  One bracket over [0, alpha + 20 pi] suffices;
    the tail is certified through H1 = H2/x <= C(alpha)/x, doubling the
    horizon when needed.
    """
    if not alpha > 1.0:
        raise ValueError(f"sup_norm_H1 requires alpha > 1, got {alpha}")
    c = C_const(alpha, cfg)

    def h1(x):
        return kernel_eval(KernelKind.H1, alpha, x, cfg)

    x_cut = alpha + 20.0 * math.pi
    xs = np.linspace(0.0, x_cut, 601)[1:]
    vals = _J_values(alpha, xs, cfg)
    maxima: list = []
    for _ in range(40):
        i = int(np.argmax(vals))
        lo = xs[i - 1] if i > 0 else 1e-12
        hi = xs[i + 1] if i < len(xs) - 1 else xs[-1]
        maxima.append(golden_max(h1, lo, hi, xtol=1e-6))
        norm = max(v for _, v in maxima)
        if c / x_cut < 0.5 * norm:
            break
        ext = np.linspace(x_cut, 2.0 * x_cut, 301)[1:]
        vals = np.concatenate([vals, _J_values(alpha, ext, cfg)])
        xs = np.concatenate([xs, ext])
        x_cut *= 2.0
    else:
        raise RuntimeError(f"sup_norm_H1 horizon did not certify for alpha={alpha}")

    argmax, norm = max(maxima, key=lambda p: p[1])
    return SupNormReport(norm, argmax, x_cut, c / x_cut, maxima)
