"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Values are stored in canonical form: an integer coefficient vector over
the power basis 1, z, ..., z^(phi(m)-1) with one positive denominator,
reduced modulo the m-th cyclotomic polynomial, with m minimal for the
value.  Equality is representation equality, so orthogonality relations
and coefficient identities can be checked exactly, with no floating point.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from math import gcd

import mpmath

__all__ = ["Cyclo", "euler_phi", "cyclotomic_poly", "divisors"]


@functools.lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    assert m >= 1
    out, n, p = 1, m, 2
    while p * p <= n:
        if n % p == 0:
            out *= p - 1
            n //= p
            while n % p == 0:
                out *= p
                n //= p
        p += 1
    if n > 1:
        out *= n - 1
    return out


@functools.lru_cache(maxsize=None)
def divisors(m: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    large = [m // d for d in small if d * d != m]
    return tuple(sorted(small + large))


def _poly_divmod(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending coefficients)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert all(c == 0 for c in num)
    return q


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, computed by exact division of x^m - 1."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            num = _poly_divmod(num, list(cyclotomic_poly(d)))
    return tuple(num)


@functools.lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_m for 0 <= j < max(2*phi(m) - 1, m), integer rows."""
    phi = euler_phi(m)
    top = cyclotomic_poly(m)
    rel = [-c for c in top[:phi]]  # x^phi = rel[0] + rel[1] x + ...
    rows: list[list[int]] = []
    for j in range(max(2 * phi - 1, m)):
        if j < phi:
            row = [0] * phi
            row[j] = 1
        else:
            prev = rows[j - 1]
            row = [0] + list(prev[: phi - 1])
            lead = prev[phi - 1]
            if lead:
                row = [a + lead * b for a, b in zip(row, rel)]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def _reduce_int(m: int, coeffs: list[int]) -> tuple[int, ...]:
    phi = euler_phi(m)
    out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
    if len(coeffs) > phi:
        table = _reduction_table(m)
        for j in range(phi, len(coeffs)):
            c = coeffs[j]
            if c:
                row = table[j]
                out = [a + c * b for a, b in zip(out, row)]
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _units(m: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, m + 1) if gcd(a, m) == 1)


@functools.lru_cache(maxsize=None)
def _rel_galois_gens(m: int, d: int) -> tuple[int, ...]:
    """Generators of {a in (Z/m)^*: a = 1 mod d} (Galois group over Q(z_d))."""
    members = [a for a in _units(m) if a % d == 1 % d]
    mset = set(members)
    gens: list[int] = []
    reach = {1 % m}
    for a in members:
        if a in reach:
            continue
        gens.append(a)
        new = set(reach)
        frontier = list(reach)
        while frontier:
            x = frontier.pop()
            for b in gens:
                y = (x * b) % m
                if y not in new:
                    new.add(y)
                    frontier.append(y)
        reach = new
        if len(reach) == len(mset):
            break
    return tuple(gens)


def _solve_exact(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve mat*x = rhs over Q (mat may be tall); None if inconsistent."""
    nrow, ncol = len(mat), len(mat[0]) if mat else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for c in range(ncol):
        pr = next((i for i in range(r, nrow) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(nrow):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrow:
            break
    for i in range(r, nrow):
        if aug[i][ncol]:
            return None
    x = [Fraction(0)] * ncol
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncol]
    return x


@functools.lru_cache(maxsize=None)
def _subfield_basis(m: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Reductions of zeta_m^(j*m/d) for j < phi(d): the zeta_d power basis."""
    table = _reduction_table(m)
    step = m // d
    return tuple(table[(j * step) % m] for j in range(euler_phi(d)))


def _galois_int(m: int, vec: tuple[int, ...], a: int) -> tuple[int, ...]:
    table = _reduction_table(m)
    phi = len(vec)
    out = [0] * phi
    for i, ci in enumerate(vec):
        if ci:
            row = table[(a * i) % m]
            out = [x + ci * y for x, y in zip(out, row)]
    return tuple(out)


class Cyclo:
    """An exact cyclotomic number (immutable, hashable)."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, coeffs, _raw=None):
        if _raw is not None:
            self.m, self.num, self.den = _raw
            return
        # accept Fraction/int coefficient sequences
        fracs = [Fraction(x) for x in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        m2, num, den = _canonical(m, _reduce_int(m, ints), den)
        self.m, self.num, self.den = m2, num, den

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def _make(m: int, num: tuple[int, ...], den: int) -> "Cyclo":
        obj = object.__new__(Cyclo)
        obj.m, obj.num, obj.den = _canonical(m, num, den)
        return obj

    @staticmethod
    def zero() -> "Cyclo":
        return _ZERO

    @staticmethod
    def one() -> "Cyclo":
        return _ONE

    @staticmethod
    def rational(q) -> "Cyclo":
        f = Fraction(q)
        return Cyclo._make(1, (f.numerator,), f.denominator)

    @staticmethod
    def root_of_unity(m: int, k: int = 1) -> "Cyclo":
        k %= m
        vec = [0] * m
        vec[k] = 1
        return Cyclo._make(m, _reduce_int(m, vec), 1)

    @staticmethod
    def root_sum(m: int, counts) -> "Cyclo":
        """sum_j counts[j] * zeta_m^j, counts a mapping exponent -> integer."""
        vec = [0] * m
        for j, n in counts.items():
            vec[j % m] += int(n)
        return Cyclo._make(m, _reduce_int(m, vec), 1)

    # -- coefficient access ----------------------------------------------------

    @property
    def c(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    # -- ring operations -----------------------------------------------------

    def _lift_num(self, big: int) -> tuple[int, ...]:
        if big == self.m:
            return self.num
        step = big // self.m
        vec = [0] * (step * (len(self.num) - 1) + 1 if self.num else 1)
        for i, ci in enumerate(self.num):
            vec[i * step] = ci
        return _reduce_int(big, vec)

    def __add__(self, other) -> "Cyclo":
        other = other if isinstance(other, Cyclo) else Cyclo.rational(other)
        m = self.m * other.m // gcd(self.m, other.m)
        a, b = self._lift_num(m), other._lift_num(m)
        da, db = self.den, other.den
        den = da * db // gcd(da, db)
        fa, fb = den // da, den // db
        return Cyclo._make(m, tuple(x * fa + y * fb for x, y in zip(a, b)), den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo._make(self.m, tuple(-x for x in self.num), self.den)

    def __sub__(self, other) -> "Cyclo":
        other = other if isinstance(other, Cyclo) else Cyclo.rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "Cyclo":
        return Cyclo.rational(other) + (-self)

    def __mul__(self, other) -> "Cyclo":
        other = other if isinstance(other, Cyclo) else Cyclo.rational(other)
        m = self.m * other.m // gcd(self.m, other.m)
        a, b = self._lift_num(m), other._lift_num(m)
        if len(a) == 1:
            return Cyclo._make(m, tuple(a[0] * y for y in b), self.den * other.den)
        if len(b) == 1:
            return Cyclo._make(m, tuple(b[0] * x for x in a), self.den * other.den)
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Cyclo._make(m, _reduce_int(m, conv), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.m == 1:
            return Cyclo.rational(Fraction(self.den, self.num[0]))
        phi = euler_phi(self.m)
        cols = []
        for j in range(phi):
            prod = [0] * (phi + j)
            for i, ci in enumerate(self.num):
                prod[i + j] += ci
            cols.append(_reduce_int(self.m, prod))
        mat = [[Fraction(cols[j][i]) for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(self.den)] + [Fraction(0)] * (phi - 1)
        sol = _solve_exact(mat, rhs)
        assert sol is not None
        return Cyclo(self.m, sol)

    def __truediv__(self, other) -> "Cyclo":
        other = other if isinstance(other, Cyclo) else Cyclo.rational(other)
        return self * other.inv()

    def __rtruediv__(self, other) -> "Cyclo":
        return Cyclo.rational(other) * self.inv()

    def __pow__(self, n: int) -> "Cyclo":
        if n < 0:
            return self.inv() ** (-n)
        out, base = Cyclo.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, a: int) -> "Cyclo":
        """Apply sigma_a: zeta_m -> zeta_m^a (requires gcd(a, m) = 1)."""
        if gcd(a, self.m) != 1:
            raise ValueError(f"{a} not coprime to conductor {self.m}")
        return Cyclo._make(self.m, _galois_int(self.m, self.num, a % self.m),
                           self.den)

    def conj(self) -> "Cyclo":
        return self.galois(self.m - 1) if self.m > 1 else self

    def norm_squared(self) -> "Cyclo":
        return self * self.conj()

    # -- predicates / conversions --------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.num)

    def is_rational(self) -> bool:
        return self.m == 1

    def as_fraction(self) -> Fraction:
        if self.m != 1:
            raise ValueError(f"not rational (conductor {self.m})")
        return Fraction(self.num[0], self.den)

    def is_real(self) -> bool:
        return self.conj() == self

    def __complex__(self) -> complex:
        import cmath

        z = 0j
        for i, ci in enumerate(self.num):
            if ci:
                z += ci * cmath.exp(2j * cmath.pi * i / self.m)
        return z / self.den

    def mp_value(self, prec: int) -> "mpmath.mpc":
        with mpmath.workprec(prec):
            z = mpmath.mpc(0)
            for i, ci in enumerate(self.num):
                if ci:
                    z += ci * mpmath.expjpi(mpmath.mpf(2 * i) / self.m)
            return z / self.den

    def real_sign(self, assume_real: bool = False) -> int:
        """Exact sign of a real cyclotomic number (raises if not real)."""
        if not assume_real and not self.is_real():
            raise ValueError("real_sign of a non-real value")
        if self.is_zero():
            return 0
        if self.m == 1:
            return 1 if self.num[0] > 0 else -1
        # float fast path with a rigorous (conservative) error bound
        scale = max(abs(x) for x in self.num)
        val = 0.0
        for i, ci in enumerate(self.num):
            if ci:
                val += ci * math.cos(2 * math.pi * i / self.m)
        err = len(self.num) * scale * 1e-12
        if abs(val) > err:
            return 1 if val > 0 else -1
        height = len(self.num) * scale + 1
        for prec in (64, 128, 256, 512, 1024):
            v = self.mp_value(prec).real * self.den
            bound = height * mpmath.mpf(2) ** (8 - prec)
            if abs(v) > bound:
                return 1 if v > 0 else -1
        raise ArithmeticError("sign undetermined at maximum precision")

    # -- comparison / hashing / display ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyclo):
            if isinstance(other, (int, Fraction)):
                other = Fraction(other)
                return self.m == 1 and Fraction(self.num[0], self.den) == other
            return NotImplemented
        return (self.m == other.m and self.den == other.den
                and self.num == other.num)

    def __hash__(self):
        if self.m == 1:
            return hash(Fraction(self.num[0], self.den))
        return hash((self.m, self.num, self.den))

    def sort_key(self):
        return (self.m, self.num, self.den)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Cyclo({Fraction(self.num[0], self.den)})"
        terms = [f"{Fraction(n, self.den)}*z{self.m}^{i}"
                 for i, n in enumerate(self.num) if n]
        return "Cyclo(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {
            "conductor": self.m,
            "coeffs": [[n, self.den] for n in self.num],
        }


def _canonical(m: int, num: tuple[int, ...], den: int):
    """Normalize content, then descend to the minimal conductor."""
    if den < 0:
        den = -den
        num = tuple(-x for x in num)
    g = den
    for x in num:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = tuple(x // g for x in num)
    if m == 1:
        return m, num, den
    if all(x == 0 for x in num):
        return 1, (0,), 1
    # minimal conductor: first divisor d of m whose relative Galois group fixes
    # the value; generators suffice for the fixedness test
    for d in divisors(m):
        if d == m:
            break
        fixed = True
        for a in _rel_galois_gens(m, d):
            if _galois_int(m, num, a) != num:
                fixed = False
                break
        if not fixed:
            continue
        basis = _subfield_basis(m, d)
        mat = [[Fraction(basis[j][i]) for j in range(len(basis))]
               for i in range(euler_phi(m))]
        sol = _solve_exact(mat, [Fraction(x) for x in num])
        if sol is not None:
            # value = (basis . sol)/den: clear the solution denominators while
            # keeping the original one
            lcm_q = 1
            for f in sol:
                lcm_q = lcm_q * f.denominator // gcd(lcm_q, f.denominator)
            new_num = tuple(int(f * lcm_q) for f in sol)
            return (d,) + _content(new_num, den * lcm_q)
    return m, num, den


def _content(num: tuple[int, ...], den: int):
    g = den
    for x in num:
        g = gcd(g, x)
        if g == 1:
            return num, den
    return tuple(x // g for x in num), den // g


_ZERO = Cyclo._make(1, (0,), 1)
_ONE = Cyclo._make(1, (1,), 1)
