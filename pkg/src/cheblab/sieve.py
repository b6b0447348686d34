"""Selberg sieve objects and auxiliary coefficient sums.

The sieve is instantiated over the rational base (one prime ideal per
rational prime, norm p), keeping local densities g as exact real
cyclotomic numbers so the diagonalization identity can be checked with no
rounding.  The general-norm data model lives in the scenario objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, log

from .chartab import Character
from .coeffs import InertiaScenario, a_coeff, local_roots
from .cyclotomic import Cyclo

__all__ = [
    "SieveInstance",
    "selberg_objects",
    "omega_bound_check",
    "dirichlet_tail_check",
]

SIEVE_Z_CAP = 10_000


@dataclass
class SieveInstance:
    """Output bundle of selberg_objects."""

    z: float
    g: dict[int, Cyclo]            # prime -> local density g_chi(p)
    support_primes: list[int]      # primes dividing P_chi(z)
    divisors: list[int]            # D_chi(z): squarefree d | P_chi(z), d <= z
    rho: dict[int, Cyclo]          # Selberg weights, rho[1] = 1
    big_g: Cyclo                   # G(z) = sum_{d in D} prod_{p|d} g/(1-g)
    quad_value: Cyclo              # sum_{d,d'} rho rho' g([d,d'])

    def rho_floats(self) -> dict[int, float]:
        return {d: complex(v).real for d, v in self.rho.items()}


def _local_density(chi: Character, sc: InertiaScenario) -> Cyclo:
    """g_chi(p) = 1 - prod_{j,j'} (1 - a_j conj(a_j') / Np)."""
    roots = local_roots(chi, sc).roots
    inv_np = Cyclo.rational(Fraction(1, sc.norm))
    prod = Cyclo.one()
    for a in roots:
        for b in roots:
            prod = prod * (Cyclo.one() - a * b.conj() * inv_np)
    return Cyclo.one() - prod


def selberg_objects(chi: Character, scenarios: dict[int, InertiaScenario],
                    z: float) -> SieveInstance:
    """Local densities, sieve support, and diagonalized Selberg weights.

    scenarios must cover every prime p < z of the base.  The weights are
    the classical optimum rho_d = mu(d) (prod_{p|d} 1/(1-g(p))) G_d(z)/G(z),
    which satisfy rho(1) = 1 and |rho| <= 1; the quadratic form value
    sum rho rho' g([d,d']) then equals 1/G(z) exactly.
    """
    if z > SIEVE_Z_CAP:
        raise ValueError(f"z = {z} exceeds the combinatorial guard {SIEVE_Z_CAP}")
    primes = [p for p in sorted(scenarios) if p < z]
    needed = [p for p in _small_primes(int(z)) if p < z]
    missing = [p for p in needed if p not in scenarios]
    if missing:
        raise ValueError(f"scenarios missing for primes {missing}")

    g_map: dict[int, Cyclo] = {}
    support = []
    for p in primes:
        sc = scenarios[p]
        if sc.norm != p:
            raise ValueError(f"scenario for {p} carries norm {sc.norm}")
        gp = _local_density(chi, sc)
        g_map[p] = gp
        if not gp.is_zero():
            support.append(p)
            # g in [0, 1): sign checks are exact
            assert gp.real_sign() > 0 and (Cyclo.one() - gp).real_sign() > 0

    divisors: list[tuple[int, tuple[int, ...]]] = [(1, ())]
    for p in support:
        divisors += [(d * p, fac + (p,)) for d, fac in divisors if d * p <= z]
    divisors.sort()

    h = {p: g_map[p] / (Cyclo.one() - g_map[p]) for p in support}

    def h_of(fac):
        out = Cyclo.one()
        for p in fac:
            out = out * h[p]
        return out

    big_g = Cyclo.zero()
    for d, fac in divisors:
        big_g = big_g + h_of(fac)
    inv_g = big_g.inv()

    rho: dict[int, Cyclo] = {}
    for d, fac in divisors:
        mu = -1 if len(fac) % 2 else 1
        scale = Cyclo.one()
        for p in fac:
            scale = scale * (Cyclo.one() - g_map[p]).inv()
        cofactor = Cyclo.zero()
        for m, mfac in divisors:
            if m * d <= z and all(p not in fac for p in mfac) and _divides_support(mfac, support):
                cofactor = cofactor + h_of(mfac)
        rho[d] = Cyclo.rational(mu) * scale * cofactor * inv_g

    assert rho[1] == Cyclo.one(), "rho is not normalized at the unit ideal"
    for d, val in rho.items():
        assert (Cyclo.one() - val).real_sign() >= 0, f"rho({d}) > 1"
        assert (Cyclo.one() + val).real_sign() >= 0, f"rho({d}) < -1"

    quad = Cyclo.zero()
    fac_of = dict(divisors)
    for d, fac in divisors:
        for m, mfac in divisors:
            join = sorted(set(fac) | set(mfac))
            gval = Cyclo.one()
            for p in join:
                gval = gval * g_map[p]
            quad = quad + rho[d] * rho[m] * gval
    assert quad == inv_g, "diagonalization identity failed"
    return SieveInstance(z, g_map, support, [d for d, _ in divisors], rho,
                         big_g, quad)


def _divides_support(fac, support):
    return all(p in support for p in fac)


def _small_primes(n: int) -> list[int]:
    out = []
    for k in range(2, max(n, 2)):
        if all(k % p for p in out):
            out.append(k)
    return [p for p in out if p < n] if n > 2 else []


# ---------------------------------------------------------------------------
# Prime-divisor growth bound
# ---------------------------------------------------------------------------

def omega_bound_check(n_max: int, delta: float) -> dict:
    """Check omega(n) <= e^(1 + 1/delta) + delta log n for 2 <= n <= n_max.

    Rational-base instance (n_K = 1) of the ideal-divisor bound; omega is
    computed by a smallest-prime-factor sieve.
    """
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    omega = [0] * (n_max + 1)
    for p in range(2, n_max + 1):
        if omega[p] == 0:  # p prime
            for m in range(p, n_max + 1, p):
                omega[m] += 1
    const = exp(1.0 + 1.0 / delta)
    worst = None
    for n in range(2, n_max + 1):
        bound = const + delta * log(n)
        margin = bound - omega[n]
        if worst is None or margin < worst[1]:
            worst = (n, margin)
        if margin < 0:
            return {"ok": False, "n": n, "omega": omega[n], "bound": bound}
    return {"ok": True, "n_max": n_max, "delta": delta,
            "tightest_n": worst[0], "tightest_margin": worst[1]}


# ---------------------------------------------------------------------------
# Truncated Dirichlet-series bound
# ---------------------------------------------------------------------------

def dirichlet_tail_check(chi: Character, phi: Character, scenario_for,
                         eta: float, cap: int, log_q: float) -> dict:
    """Truncated check of sum |a_(chi x phi)(p^l)| log p / p^(l(1+eta)) <= 1/eta + log(q)/2.

    scenario_for(p) supplies the local data (or None to skip the prime);
    truncating the sum at the cap only ever lowers the left side, so the
    verdict is sound.
    """
    if not 0 < eta < 1:
        raise ValueError("eta must lie in (0, 1)")
    from .census import primes_up_to

    tensor = chi.tensor(phi)
    lhs = 0.0
    for p in primes_up_to(cap):
        sc = scenario_for(p)
        if sc is None:
            continue
        ell = 1
        while p**ell <= cap:
            a = complex(a_coeff(tensor, sc, ell))
            lhs += abs(a) * log(p) / p ** (ell * (1.0 + eta))
            ell += 1
    rhs = 1.0 / eta + log_q / 2.0
    return {"lhs": lhs, "rhs": rhs, "ok": lhs <= rhs, "eta": eta, "cap": cap}
