"""Partitions and Schur polynomials.

Schur values are computed through the Jacobi-Trudi determinant in complete
homogeneous symmetric functions, which stays well defined for repeated
roots (the bialternant quotient divides by a vanishing Vandermonde there).
Everything works over exact cyclotomic numbers or over complex floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import Cyclo

__all__ = [
    "Partition",
    "partitions_of",
    "hook_degree",
    "cycle_weight",
    "complete_homogeneous",
    "schur",
    "cauchy_check",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        conj = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                conj[j] += 1
        return Partition(tuple(conj))

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n (parts bounded by max_part), reverse-lex order."""
    if n == 0:
        yield Partition(())
        return
    cap = n if max_part is None else min(n, max_part)

    def rec(rem, bound):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, bound), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    for tup in rec(n, cap):
        yield Partition(tup)


def hook_degree(mu) -> int:
    """Dimension of the S_n irreducible labeled by mu (hook length formula)."""
    parts = tuple(mu.parts if isinstance(mu, Partition) else mu)
    n = sum(parts)
    if n == 0:
        return 1
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    num = factorial(n)
    den = 1
    for i, p in enumerate(parts):
        for j in range(p):
            den *= p - j + conj[j] - i - 1
    assert num % den == 0
    return num // den


def cycle_weight(mu) -> int:
    """w(mu) = prod n_j^(r_j) (r_j!); the S_n class of type mu has n!/w(mu) elements."""
    parts = sorted((mu.parts if isinstance(mu, Partition) else mu), reverse=True)
    w, i = 1, 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        r = j - i
        w *= parts[i] ** r * factorial(r)
        i = j
    return w


# ---------------------------------------------------------------------------
# Symmetric functions of an explicit root multiset
# ---------------------------------------------------------------------------

def _is_exact(values) -> bool:
    return all(isinstance(v, (Cyclo, int, Fraction)) for v in values)


def _coerce(values, exact: bool):
    if exact:
        return [v if isinstance(v, Cyclo) else Cyclo.rational(v) for v in values]
    return [complex(v) for v in values]


def complete_homogeneous(values, k_max: int) -> list:
    """h_0..h_k of the multiset, by Newton's identity k h_k = sum p_i h_{k-i}."""
    exact = _is_exact(values)
    vals = _coerce(values, exact)
    one = Cyclo.one() if exact else 1.0 + 0j
    zero = Cyclo.zero() if exact else 0.0 + 0j
    powers = [list(vals)]
    p_sums = []
    for i in range(1, k_max + 1):
        if i > 1:
            powers.append([a * b for a, b in zip(powers[-1], vals)])
        acc = zero
        for v in powers[-1]:
            acc = acc + v
        p_sums.append(acc)
    h = [one]
    for k in range(1, k_max + 1):
        acc = zero
        for i in range(1, k + 1):
            acc = acc + p_sums[i - 1] * h[k - i]
        scale = Cyclo.rational(Fraction(1, k)) if exact else 1.0 / k
        h.append(acc * scale)
    return h


def _det(mat, exact: bool):
    """Determinant by Gaussian elimination over the value field."""
    n = len(mat)
    if n == 0:
        return Cyclo.one() if exact else 1.0 + 0j
    a = [row[:] for row in mat]
    det = Cyclo.one() if exact else 1.0 + 0j
    for c in range(n):
        if exact:
            pr = next((i for i in range(c, n) if not a[i][c].is_zero()), None)
        else:
            pr = max(range(c, n), key=lambda i: abs(a[i][c]))
            if abs(a[pr][c]) < 1e-300:
                pr = None
        if pr is None:
            return Cyclo.zero() if exact else 0.0 + 0j
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        inv = piv.inv() if exact else 1.0 / piv
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if exact and f.is_zero():
                continue
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def schur(mu, values):
    """Schur polynomial s_mu evaluated at the multiset of values.

    Identically 1 for the empty partition and 0 when the partition is longer
    than the multiset.
    """
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    exact = _is_exact(values)
    n = len(values)
    if mu.size == 0:
        return Cyclo.one() if exact else 1.0 + 0j
    if mu.length > n:
        return Cyclo.zero() if exact else 0.0 + 0j
    ell = mu.length
    h = complete_homogeneous(values, mu.parts[0] + ell)
    zero = Cyclo.zero() if exact else 0.0 + 0j

    def h_at(k):
        if k < 0:
            return zero
        return h[k]

    mat = [[h_at(mu.parts[i] - (i + 1) + (j + 1)) for j in range(ell)]
           for i in range(ell)]
    return _det(mat, exact)


def cauchy_check(alphas, betas, degree_cap: int, tol: float = 1e-9):
    """Compare prod 1/(1 - a_i b_j t) with sum_mu s_mu(a) s_mu(b) t^|mu|.

    Coefficient-wise through t^degree_cap; exact when both root lists are
    cyclotomic, floating with the given tolerance otherwise.
    Returns (ok, max_deviation).
    """
    if degree_cap > 8:
        raise ValueError("degree_cap above 8 is not supported")
    exact = _is_exact(alphas) and _is_exact(betas)
    a_vals = _coerce(alphas, exact)
    b_vals = _coerce(betas, exact)
    one = Cyclo.one() if exact else 1.0 + 0j
    zero = Cyclo.zero() if exact else 0.0 + 0j

    series = [one] + [zero] * degree_cap
    for a in a_vals:
        for b in b_vals:
            ab = a * b
            geo = [one]
            for _ in range(degree_cap):
                geo.append(geo[-1] * ab)
            new = [zero] * (degree_cap + 1)
            for i in range(degree_cap + 1):
                si = series[i]
                if exact and si.is_zero():
                    continue
                for j in range(degree_cap + 1 - i):
                    new[i + j] = new[i + j] + si * geo[j]
            series = new

    schur_side = [one] + [zero] * degree_cap
    for k in range(1, degree_cap + 1):
        acc = zero
        for mu in partitions_of(k):
            acc = acc + schur(mu, a_vals) * schur(mu, b_vals)
        schur_side[k] = acc

    if exact:
        devs = [(x - y) for x, y in zip(series, schur_side)]
        ok = all(d.is_zero() for d in devs)
        max_dev = max(abs(complex(d)) for d in devs)
    else:
        devs = [abs(x - y) for x, y in zip(series, schur_side)]
        max_dev = max(devs)
        ok = max_dev <= tol
    return ok, max_dev
