"""Smoothing weight: plateau, support, transform identities, bump pair."""

import random
from fractions import Fraction

import pytest
from scipy.integrate import quad

from cheblab.smoothing import (F_closed, PiecewisePoly, WeightParams,
                               build_weight, laplace_by_quadrature, phi1, phi2,
                               phi_hat, phi_pair, verify_weight_bounds)


def test_param_validation():
    with pytest.raises(ValueError):
        WeightParams(2.0, 2, 0.1)  # x < 3
    with pytest.raises(ValueError):
        WeightParams(10.0, 1, 0.1)  # ell < 2
    with pytest.raises(ValueError):
        WeightParams(10.0, 2, 0.3)  # eps >= 1/4


def test_weight_plateau_and_support():
    params = WeightParams(10.0, 2, 0.1)
    f = build_weight(params)
    assert f(Fraction(3, 4)) == 1
    assert f(Fraction(1, 2)) == 1 and f(Fraction(1)) == 1
    assert f(2) == 0 and f(0) == 0
    lo, hi = params.support
    assert f.breakpoints[0] == lo and f.breakpoints[-1] == hi
    assert f(lo) == 0 and f(hi) == 0
    mid = Fraction(1, 2) - params.a_exact  # inside the left ramp
    assert 0 < f(mid) < 1


def test_weight_integral_is_F0():
    for x, ell, eps in ((10.0, 2, 0.1), (1e6, 4, 0.01), (31.0, 3, 0.2)):
        params = WeightParams(x, ell, eps)
        f = build_weight(params)
        assert f.integral() == Fraction(1, 2) + 2 * ell * params.a_exact
        assert abs(float(f.integral()) - F_closed(0.0, params).real) < 1e-12
        assert 0.5 < F_closed(0.0, params).real < 0.75


def test_laplace_agreement():
    params = WeightParams(50.0, 3, 0.05)
    f = build_weight(params)
    rng = random.Random(0)
    worst = 0.0
    for _ in range(20):
        z = complex(rng.uniform(-4, 4), rng.uniform(-10, 10))
        worst = max(worst, abs(laplace_by_quadrature(f, z) - F_closed(z, params)))
    assert worst <= 1e-8


def test_F_closed_series_switch_continuity():
    params = WeightParams(100.0, 2, 0.1)
    # values just above and below the series switch radius must agree
    for z in (1e-4 + 0j, 1.0000001e-4 + 0j, 1e-5 + 1e-5j):
        a = F_closed(z, params)
        b = laplace_by_quadrature(build_weight(params), z)
        assert abs(a - b) < 1e-10


def test_plain_transform_bound():
    params = WeightParams(1000.0, 2, 0.2)
    lx = 6.907755278982137
    from math import exp, log

    lx = log(params.x)
    for sigma, t in ((0.5, 3.0), (1.0, 0.0), (2.0, -7.0)):
        val = abs(F_closed(-complex(sigma, t) * lx, params))
        assert val <= exp(sigma * params.eps) * params.x**sigma * (1 + 1e-12)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_bounds_random_grid(ell):
    rng = random.Random(ell)
    grid = [(rng.uniform(0.02, 2.5), rng.uniform(-40, 40)) for _ in range(200)]
    params = WeightParams(1e5, ell, 0.02)
    report = verify_weight_bounds(params, grid)
    assert report["ok"], report["failures"][:2]
    assert report["F0_in_range"]
    assert all(row["relative_to_O_terms"] < 50 for row in report["asymptotic_slack"])


def test_phi_values():
    assert phi1(0.5) == pytest.approx(4 / 2.718281828459045)
    assert phi2(-1.0) == 0.0
    assert phi2(0.0) == 0.0 and phi2(1.0) == 0.0
    assert 0 < phi2(0.5) < 1
    assert phi1(-0.6) == 0.0 and phi1(1.6) == 0.0


def test_phi_hat_quadrature_stability():
    a = phi_hat(2, complex(1.0, 0.0), epsabs=1e-10)
    b = phi_hat(2, complex(1.0, 0.0), epsabs=1e-13)
    assert abs(a - b) <= 1e-9


def test_phi_pair_report():
    out = phi_pair(m_max=4, grid_points=2000)
    assert out["ok"] and not out["sandwich_violations"]
    assert all(v < 1e6 for v in out["decay_constants"].values())
    with pytest.raises(ValueError):
        phi_pair(m_max=7)


def test_piecewise_poly_integrity():
    params = WeightParams(10.0, 3, 0.2)
    f = build_weight(params)
    # continuity at breakpoints, exact
    for i in range(1, len(f.breakpoints) - 1):
        t = f.breakpoints[i]
        left = f.pieces[i - 1]
        right = f.pieces[i]
        from cheblab.smoothing import _poly_eval

        assert _poly_eval(left, t) == _poly_eval(right, t)
    # degree stays at most ell
    assert max(len(p) - 1 for p in f.pieces) <= 3
