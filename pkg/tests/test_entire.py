import math

import numpy as np
import pytest

from bernsteinlab.chebinterp import build_nodes, scaled_interp_eval
from bernsteinlab.entire import (
    G_alpha,
    H_alpha_integral,
    H_alpha_series,
    SeriesConfig,
    beta_point,
)
from bernsteinlab.kernels import C_const, kernel_eval

PI = math.pi


def test_interpolation_at_pi_multiples():
    assert abs(H_alpha_integral(1.0, PI) - PI) <= 1e-12
    assert abs(H_alpha_integral(0.5, 2.0 * PI) - (2.0 * PI) ** 0.5) <= 1e-12


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.9, 3.1, 5.3])
def test_series_matches_integral(alpha):
    for x in (0.3, 2.0, 7.0, 15.0):
        a = H_alpha_integral(alpha, x)
        b = H_alpha_series(alpha, x)
        assert abs(a - b) <= 1e-6


def test_series_branch_boundaries():
    # alpha = 3.1 exercises the one-term polynomial part, 5.3 the two-term one
    assert abs(H_alpha_series(3.1, 5.0) - H_alpha_integral(3.1, 5.0)) <= 1e-6
    assert abs(H_alpha_series(1.5, 1.7) - H_alpha_integral(1.5, 1.7)) <= 1e-6


def test_series_at_poles():
    for k in (1, 2, 5):
        assert abs(H_alpha_series(1.0, k * PI) - (k * PI)) <= 1e-10
    assert abs(H_alpha_series(3.1, 3.0 * PI) - (3.0 * PI) ** 3.1) <= 1e-8


def test_series_near_poles():
    for x in (PI + 1e-5, 2.0 * PI - 3e-5, 3.0 * PI + 1e-7):
        assert abs(H_alpha_series(0.7, x) - H_alpha_integral(0.7, x)) <= 1e-9


def test_series_rejects_even_integer_alpha():
    with pytest.raises(ValueError):
        H_alpha_series(2.0, 1.0)
    with pytest.raises(ValueError):
        H_alpha_series(4.0, 1.0)


def test_series_pairing_mode():
    cfg = SeriesConfig(accel="pairing", target_tol=1e-8)
    assert abs(H_alpha_series(0.5, 2.0, cfg) - H_alpha_series(0.5, 2.0)) <= 1e-7


def test_series_pairing_stalls_near_branch_edge():
    # tail exponent approaches -1 as alpha -> 2N+2: pairing cannot reach the
    # tolerance within max_terms and must say so
    cfg = SeriesConfig(accel="pairing", target_tol=1e-8, max_terms=10_000)
    with pytest.raises(RuntimeError, match="short of"):
        H_alpha_series(1.9, 2.0, cfg)


def test_series_config_validation():
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=10)
    with pytest.raises(ValueError):
        SeriesConfig(accel="magic")
    with pytest.raises(ValueError):
        SeriesConfig(target_tol=0.0)


def test_even_reflection():
    assert H_alpha_integral(0.5, -2.0) == H_alpha_integral(0.5, 2.0)
    assert H_alpha_series(0.5, -2.0) == H_alpha_series(0.5, 2.0)
    assert G_alpha(0.5, -2.0) == G_alpha(0.5, 2.0)


def test_value_at_zero():
    assert H_alpha_integral(0.5, 0.0) == 0.0
    assert H_alpha_series(0.5, 0.0) == 0.0
    assert G_alpha(1.0, 0.0) == 0.0


def test_G_alpha_interpolates_half_integer_lattice():
    assert abs(G_alpha(1.0, PI / 2.0) - PI / 2.0) <= 1e-12
    for k in range(3):
        x = (k + 0.5) * PI
        assert abs(G_alpha(0.5, x) - x**0.5) <= 1e-9


def test_G_alpha_vs_scaled_interpolant():
    v = scaled_interp_eval(build_nodes("P1", 128), 0.5, 3.0)
    assert abs(v - G_alpha(0.5, 3.0)) <= 5e-2


def test_beta_point_values():
    assert beta_point(3.9) == 2.5 * PI
    assert beta_point(8.4) == 3.5 * PI
    assert beta_point(PI) == 2.5 * PI  # floor at the integer boundary


@pytest.mark.parametrize("alpha", [3.9, 8.4, PI, 0.2])
def test_beta_point_bracket(alpha):
    beta = beta_point(alpha)
    assert alpha + PI / 2.0 < beta <= alpha + 1.5 * PI


@pytest.mark.parametrize("alpha", [3.9, 8.4])
def test_envelope_touches_error_at_beta(alpha):
    beta = beta_point(alpha)
    lhs = abs(kernel_eval("H", alpha, beta))
    rhs = kernel_eval("H1", alpha, beta)
    assert abs(lhs - rhs) <= 1e-9 * rhs


def test_growth_proxy_bound():
    # |H_alpha(x)| <= |x|^alpha + (2/pi) C(alpha): assertable stand-in for
    # exponential type 1 on the real axis
    alpha = 1.5
    bound_c = 2.0 / PI * C_const(alpha)
    for x in np.linspace(0.0, 100.0, 201):
        assert abs(H_alpha_integral(alpha, x)) <= x**alpha + bound_c
