"""The smoothing weight and its Laplace transform, plus the bump pair.

The weight f is reconstructed from the product structure of its transform:
an indicator of length 1/2 + 2*ell*A convolved with ell uniform densities
on [0, 2A], then shifted so the support ends at 1 + 2*ell*A.  Convolutions
are done symbolically on piecewise polynomials with exact rational
coefficients, so the plateau f = 1 on [1/2, 1] and the support interval
can be asserted exactly (A is taken as the exact binary rational of the
floating value eps/(2 ell log x)).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import exp, log, sqrt

import numpy as np
from scipy.integrate import quad

__all__ = [
    "WeightParams",
    "PiecewisePoly",
    "build_weight",
    "F_closed",
    "laplace_by_quadrature",
    "verify_weight_bounds",
    "phi_pair",
    "phi1",
    "phi2",
    "phi_hat",
]


@dataclass(frozen=True)
class WeightParams:
    x: float
    ell: int
    eps: float

    def __post_init__(self):
        if not self.x >= 3:
            raise ValueError("x must be >= 3")
        if not (isinstance(self.ell, int) and self.ell >= 2):
            raise ValueError("ell must be an integer >= 2")
        if not 0 < self.eps < 0.25:
            raise ValueError("eps must lie in (0, 1/4)")

    @property
    def a(self) -> float:
        return self.eps / (2 * self.ell * log(self.x))

    @property
    def a_exact(self) -> Fraction:
        return Fraction(self.a)

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        a = self.a_exact
        return (Fraction(1, 2) - 2 * self.ell * a, 1 + 2 * self.ell * a)


# ---------------------------------------------------------------------------
# Piecewise polynomials over Q
# ---------------------------------------------------------------------------

def _poly_eval(coeffs: tuple[Fraction, ...], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _poly_shift(coeffs: tuple[Fraction, ...], h: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of p(t + h)."""
    out = [Fraction(0)] * len(coeffs)
    for i, c in enumerate(coeffs):
        # expand c*(t+h)^i
        binom = Fraction(1)
        power = [Fraction(0)] * (i + 1)
        for k in range(i, -1, -1):
            power[k] = binom * h ** (i - k)
            binom = binom * k / (i - k + 1) if k else binom
        for k in range(i + 1):
            out[k] += c * power[k]
    return tuple(out)


def _poly_trim(coeffs) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PiecewisePoly:
    """Continuous piecewise polynomial, zero outside [breakpoints[0], breakpoints[-1]]."""

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[tuple[Fraction, ...], ...]  # pieces[i] on [bp[i], bp[i+1]]

    def __post_init__(self):
        assert len(self.pieces) == len(self.breakpoints) - 1
        assert all(a < b for a, b in zip(self.breakpoints, self.breakpoints[1:]))

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        bp = self.breakpoints
        if t < bp[0] or t > bp[-1]:
            return Fraction(0)
        for i in range(len(self.pieces)):
            if t <= bp[i + 1]:
                return _poly_eval(self.pieces[i], t)
        return Fraction(0)

    def integral(self) -> Fraction:
        total = Fraction(0)
        for i, coeffs in enumerate(self.pieces):
            anti = [Fraction(0)] + [c / (k + 1) for k, c in enumerate(coeffs)]
            total += _poly_eval(tuple(anti), self.breakpoints[i + 1]) \
                - _poly_eval(tuple(anti), self.breakpoints[i])
        return total

    def antiderivative(self) -> "PiecewisePoly":
        """Continuous antiderivative, zero at the left end of the support."""
        pieces = []
        acc = Fraction(0)
        for i, coeffs in enumerate(self.pieces):
            anti = tuple([Fraction(0)] + [c / (k + 1) for k, c in enumerate(coeffs)])
            const = acc - _poly_eval(anti, self.breakpoints[i])
            pieces.append(_poly_trim((anti[0] + const,) + anti[1:]))
            acc = _poly_eval(anti, self.breakpoints[i + 1]) + const
        return PiecewisePoly(self.breakpoints, tuple(pieces))

    def sliding_average(self, h: Fraction) -> "PiecewisePoly":
        """(1/h) integral of self over [t-h, t]: convolution with Uniform[0,h]."""
        big = self.antiderivative()
        total = big.pieces[-1]
        total_val = _poly_eval(total, big.breakpoints[-1])

        def big_eval_poly(i_new, bps):
            # piecewise expression of G(t) on the new interval
            lo = bps[i_new]
            if lo >= self.breakpoints[-1]:
                return (total_val,)
            return None

        bps = sorted(set(list(self.breakpoints)
                         + [b + h for b in self.breakpoints]))
        pieces = []
        for i in range(len(bps) - 1):
            mid = (bps[i] + bps[i + 1]) / 2
            g_here = _locate_poly(big, mid, total_val)
            g_shift = _locate_poly(big, mid - h, total_val)
            shifted = _poly_shift(g_shift, -h)
            n = max(len(g_here), len(shifted))
            diff = tuple((g_here[k] if k < len(g_here) else Fraction(0))
                         - (shifted[k] if k < len(shifted) else Fraction(0))
                         for k in range(n))
            pieces.append(_poly_trim(tuple(c / h for c in diff)))
        return PiecewisePoly(tuple(bps), tuple(pieces))

    def translate(self, t0: Fraction) -> "PiecewisePoly":
        """The function t -> self(t - t0)."""
        bps = tuple(b + t0 for b in self.breakpoints)
        pieces = tuple(_poly_shift(p, -t0) for p in self.pieces)
        return PiecewisePoly(bps, pieces)


def _locate_poly(pp: PiecewisePoly, t: Fraction, above_value: Fraction):
    """Polynomial expression of the antiderivative at parameter t (constant
    0 below the support, constant total above)."""
    if t < pp.breakpoints[0]:
        return (Fraction(0),)
    if t > pp.breakpoints[-1]:
        return (above_value,)
    for i in range(len(pp.pieces)):
        if t <= pp.breakpoints[i + 1]:
            return pp.pieces[i]
    return (above_value,)


def build_weight(params: WeightParams) -> PiecewisePoly:
    """The smoothing weight as an exact piecewise polynomial of degree <= ell.

    Asserts the plateau (f = 1 on [1/2, 1]), the support containment, and
    0 <= f <= 1 on a rational grid; the first two are exact statements
    about the breakpoint structure.
    """
    a = params.a_exact
    ell = params.ell
    plateau_len = Fraction(1, 2) + 2 * ell * a
    f = PiecewisePoly((Fraction(0), plateau_len), ((Fraction(1),),))
    h = 2 * a
    for _ in range(ell):
        f = f.sliding_average(h)
    f = f.translate(Fraction(1, 2) - 2 * ell * a)

    lo, hi = params.support
    assert f.breakpoints[0] == lo and f.breakpoints[-1] == hi, "support mismatch"
    half, one = Fraction(1, 2), Fraction(1)
    for i, piece in enumerate(f.pieces):
        seg_lo, seg_hi = f.breakpoints[i], f.breakpoints[i + 1]
        if seg_lo >= half and seg_hi <= one:
            assert _poly_trim(piece) == (Fraction(1),), "plateau is not exactly 1"
    assert f(Fraction(3, 4)) == 1
    for i in range(len(f.pieces)):
        seg_lo, seg_hi = f.breakpoints[i], f.breakpoints[i + 1]
        for k in range(8):
            t = seg_lo + (seg_hi - seg_lo) * Fraction(k, 8)
            v = f(t)
            assert 0 <= v <= 1, f"f({t}) = {v} outside [0,1]"
    assert f.integral() == plateau_len, "integral does not match F(0)"
    return f


# ---------------------------------------------------------------------------
# Closed-form Laplace transform
# ---------------------------------------------------------------------------

def _expm1_ratio(a: float, z: complex, terms: int = 24) -> complex:
    """(1 - exp(a z)) / (-a z), via series near z = 0 (value 1 at z = 0)."""
    w = a * z
    if abs(w) > 1e-4:
        return (1.0 - cmath.exp(w)) / (-w)
    acc = 0j
    term = 1.0 + 0j
    for k in range(1, terms + 1):
        acc += term / _factorial(k)
        term *= w
    return acc


def _factorial(k: int) -> float:
    out = 1.0
    for i in range(2, k + 1):
        out *= i
    return out


def F_closed(z: complex, params: WeightParams) -> complex:
    """Laplace transform of the weight, entire in z."""
    a = params.a
    ell = params.ell
    len1 = 0.5 + 2 * ell * a
    z = complex(z)
    return (cmath.exp(-(1 + 2 * ell * a) * z)
            * len1 * _expm1_ratio(len1, z)
            * _expm1_ratio(2 * a, z) ** ell)


def laplace_by_quadrature(f: PiecewisePoly, z: complex) -> complex:
    lo, hi = float(f.breakpoints[0]), float(f.breakpoints[-1])

    def integrand_re(t):
        return float(f(Fraction(t))) * cmath.exp(-z * t).real

    def integrand_im(t):
        return float(f(Fraction(t))) * cmath.exp(-z * t).imag

    pts = [float(b) for b in f.breakpoints[1:-1]]
    re, _ = quad(integrand_re, lo, hi, points=pts, limit=200, epsabs=1e-13)
    im, _ = quad(integrand_im, lo, hi, points=pts, limit=200, epsabs=1e-13)
    return complex(re, im)


# ---------------------------------------------------------------------------
# Stated bounds
# ---------------------------------------------------------------------------

def verify_weight_bounds(params: WeightParams, sigma_t_grid, alphas=None) -> dict:
    """Check the transform bounds on a grid of s = sigma + it samples.

    The decay bounds with the alpha exponent and the critical-line bound
    are asserted (report marks failures with the offending sample); the
    asymptotic two-term comparison is reported as measured slack only,
    since its implied constant is unspecified.
    """
    x, ell, eps = params.x, params.ell, params.eps
    lx = log(x)
    alphas = list(range(ell + 1)) if alphas is None else alphas
    failures = []
    checked = 0
    for sigma, t in sigma_t_grid:
        if sigma <= 0:
            continue
        s = complex(sigma, t)
        fv = abs(F_closed(-s * lx, params))
        base = exp(sigma * eps) * x**sigma
        if fv > base * (1 + 1e-12):
            failures.append({"sample": (sigma, t), "bound": "plain", "value": fv,
                             "limit": base})
        for alpha in alphas:
            lim = (base / (abs(s) * lx) * (1 + x ** (-sigma / 2))
                   * (2 * ell / (eps * abs(s))) ** alpha)
            checked += 1
            if fv > lim * (1 + 1e-12):
                failures.append({"sample": (sigma, t, alpha), "bound": "decay",
                                 "value": fv, "limit": lim})
    # critical-line bound (vi) on the same |t| values
    for _, t in sigma_t_grid:
        s = complex(-0.5, t)
        fv = abs(F_closed(-s * lx, params))
        lim = (5 * x**-0.25 / lx) * (2 * ell / eps) ** ell * (0.25 + t * t) ** (-ell / 2)
        checked += 1
        if fv > lim * (1 + 1e-12):
            failures.append({"sample": ("-1/2", t), "bound": "critical-line",
                             "value": fv, "limit": lim})
    # two-term asymptotic (v): measured slack, not asserted
    slack_rows = []
    if x >= 10:
        for sigma in (0.8, 0.9, 1.0):
            main_plus = x / lx + x**sigma / (sigma * lx)
            main_minus = x / lx - x**sigma / (sigma * lx)
            got_plus = F_closed(-lx, params).real + F_closed(-sigma * lx, params).real
            got_minus = F_closed(-lx, params).real - F_closed(-sigma * lx, params).real
            for sign, got, main in (("+", got_plus, main_plus),
                                    ("-", got_minus, main_minus)):
                scale = abs(main) * eps + sqrt(x) / lx
                slack_rows.append({
                    "sigma": sigma, "sign": sign,
                    "relative_to_O_terms": abs(got - main) / scale if scale else 0.0,
                })
    f0 = F_closed(0.0, params).real
    return {
        "ok": not failures,
        "failures": failures,
        "checked": checked,
        "F0": f0,
        "F0_in_range": 0.5 < f0 < 0.75,
        "asymptotic_slack": slack_rows,
    }


# ---------------------------------------------------------------------------
# The bump pair
# ---------------------------------------------------------------------------

def phi1(t: float) -> float:
    """Bump with values in [0, 2], supported on (-1/2, 3/2), >= 1 on [0, 1]."""
    if not -0.5 < t < 1.5:
        return 0.0
    return 4.0 * exp(1.0 / ((t - 0.5) ** 2 - 1.0))


def phi2(t: float) -> float:
    """Bump with values in [0, 1], supported on (0, 1)."""
    if not 0.0 < t < 1.0:
        return 0.0
    return exp(1.0 / (4.0 * (t - 0.5) ** 2 - 1.0))


def phi_hat(which: int, s: complex, epsabs: float = 1e-12) -> complex:
    """Transform integral of Phi_j(log t) t^(s-1) dt = integral Phi_j(u) e^(su) du."""
    f = phi1 if which == 1 else phi2
    lo, hi = (-0.5, 1.5) if which == 1 else (0.0, 1.0)

    def integrand_re(u):
        return f(u) * cmath.exp(s * u).real

    def integrand_im(u):
        return f(u) * cmath.exp(s * u).imag

    re, _ = quad(integrand_re, lo, hi, limit=300, epsabs=epsabs)
    im, _ = quad(integrand_im, lo, hi, limit=300, epsabs=epsabs)
    return complex(re, im)


def phi_pair(m_max: int = 4, grid_points: int = 10_000) -> dict:
    """Sandwich and decay report for the bump pair.

    Checks Phi2 <= indicator of [0,1] <= Phi1 pointwise on the grid and
    records max |Phi_hat_j(it)| |t|^m over t in [1, 100] for m <= m_max
    (a finite-constant check; the asymptotic constant is not at issue).
    """
    if m_max > 6:
        raise ValueError("m_max above 6 is not supported")
    ts = np.linspace(-1.0, 2.0, grid_points)
    ts = np.unique(np.concatenate([ts, [0.0, 1.0, 0.5]]))
    violations = []
    for t in ts:
        ind = 1.0 if 0.0 <= t <= 1.0 else 0.0
        p1, p2 = phi1(float(t)), phi2(float(t))
        if not (p2 <= ind + 1e-15 and ind <= p1 + 1e-15):
            violations.append(float(t))
        if not (0.0 <= p1 <= 2.0 and 0.0 <= p2 <= 1.0):
            violations.append(float(t))
    decay = {}
    t_samples = np.linspace(1.0, 100.0, 40)
    for which in (1, 2):
        for m in range(m_max + 1):
            vals = [abs(phi_hat(which, complex(0.0, t), epsabs=1e-10)) * t**m
                    for t in t_samples]
            decay[f"phi{which}_m{m}_sup"] = max(vals)
    return {
        "ok": not violations,
        "sandwich_violations": violations,
        "grid_points": len(ts),
        "decay_constants": decay,
    }
