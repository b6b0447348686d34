"""Exact complex character tables via Dixon's method.

Class-multiplication matrices are simultaneously diagonalized over a prime
field F_p with p = 1 (mod exponent) and p > 2 sqrt(|G|); eigenvalue
multiplicities of each class representative are then recovered by a
discrete Fourier transform mod p and lifted to exact cyclotomic numbers.
No floating point enters the table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .cyclotomic import Cyclo
from .groups import Group, SubgroupHandle

__all__ = [
    "Character",
    "CharacterTable",
    "character_table",
    "inner_product",
    "tensor_decompose",
    "induce",
    "restrict",
    "sn_degree_stats",
]

TABLE_ORDER_CAP = 20000


@dataclass(frozen=True)
class Character:
    group: Group
    values: tuple[Cyclo, ...]  # indexed by canonical class order
    degree: int
    irreducible: bool

    def value_on_class(self, class_index: int) -> Cyclo:
        return self.values[class_index]

    def value(self, element: int) -> Cyclo:
        return self.values[self.group.class_of(element)]

    def conj(self) -> "Character":
        return Character(self.group, tuple(v.conj() for v in self.values),
                         self.degree, self.irreducible)

    def tensor(self, other: "Character") -> "Character":
        assert self.group is other.group, "characters on different groups"
        vals = tuple(a * b for a, b in zip(self.values, other.values))
        return Character(self.group, vals, self.degree * other.degree, False)

    def sort_key(self):
        return (self.degree, tuple(v.sort_key() for v in self.values))

    def __repr__(self):
        return f"Character(deg={self.degree}, values={list(self.values)})"


@dataclass(frozen=True)
class CharacterTable:
    group: Group
    rows: tuple[Character, ...]

    @property
    def d_G(self) -> int:
        return max(r.degree for r in self.rows)

    @property
    def trivial(self) -> Character:
        one = Cyclo.one()
        for r in self.rows:
            if r.degree == 1 and all(v == one for v in r.values):
                return r
        raise AssertionError("trivial character missing")

    def degrees(self) -> list[int]:
        return [r.degree for r in self.rows]

    def row_index(self, chi: Character) -> int:
        for i, r in enumerate(self.rows):
            if r.values == chi.values:
                return i
        raise KeyError("character is not a row of this table")

    def to_json(self) -> dict:
        classes = self.group.conjugacy_classes()
        return {
            "classes": [
                {"rep": c.representative, "size": c.size, "order": c.element_order}
                for c in classes
            ],
            "irreducibles": [
                {"degree": r.degree, "values": [v.to_json() for v in r.values]}
                for r in self.rows
            ],
        }


# ---------------------------------------------------------------------------
# mod-p linear algebra
# ---------------------------------------------------------------------------

def _nullspace_mod(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    m = len(mat[0]) if mat else 0
    a = [row[:] for row in mat]
    pivots = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if a[i][c] % p), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(v - f * w) % p for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % p
        basis.append(v)
    return basis


def _charpoly_mod(mat: list[list[int]], p: int) -> list[int]:
    """Faddeev-LeVerrier; coefficients of det(xI - M), ascending. Needs p > dim."""
    n = len(mat)
    assert p > n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- mat @ (m + c_{n-k+1} I)
        for i in range(n):
            m[i][i] = (m[i][i] + coeffs[n - k + 1]) % p
        m = [[sum(mat[i][t] * m[t][j] for t in range(n)) % p for j in range(n)]
             for i in range(n)]
        tr = sum(m[i][i] for i in range(n)) % p
        coeffs[n - k] = (-tr * pow(k, p - 2, p)) % p
    return coeffs


def _poly_roots_mod(coeffs: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _matmul_mod(a, b, p):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m)]
            for i in range(n)]


def _solve_columns_mod(b_cols: list[list[int]], target_cols: list[list[int]], p: int):
    """Solve B X = T columnwise (B tall, full column rank), mod p."""
    k = len(b_cols[0])
    d = len(b_cols)
    t = len(target_cols)
    aug = [[b_cols[j][i] for j in range(d)] + [target_cols[c][i] for c in range(t)]
           for i in range(k)]
    r = 0
    pivots = []
    for c in range(d):
        pr = next((i for i in range(r, k) if aug[i][c] % p), None)
        if pr is None:
            raise AssertionError("basis not full rank")
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(k):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    x_cols = []
    for c in range(t):
        x_cols.append([aug[i][d + c] for i in range(d)])
    return x_cols


# ---------------------------------------------------------------------------
# Dixon's algorithm
# ---------------------------------------------------------------------------

def _dixon_prime(order: int, exponent: int, min_above: int) -> int:
    p = max(2 * isqrt(order) + 1, min_above, 2)
    # smallest prime p = 1 mod exponent above the threshold
    candidate = p + ((1 - p) % exponent)
    while True:
        if candidate > p and _is_prime(candidate):
            return candidate
        candidate += exponent


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _primitive_root(p: int) -> int:
    fac = []
    n = p - 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            fac.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        fac.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise AssertionError


def _class_matrices(g: Group) -> list[list[list[int]]]:
    classes = g.conjugacy_classes()
    k = len(classes)
    reps = [c.representative for c in classes]
    mats = []
    for r in range(k):
        m = [[0] * k for _ in range(k)]
        for x in classes[r].members:
            xi = g.inv(x)
            for s in range(k):
                t = g.class_of(g.mul(xi, reps[s]))
                m[t][s] += 1
        mats.append(m)
    return mats


def _split_spaces(mats, p, k):
    """Common 1-dim eigenspaces of the commuting class matrices over F_p.

    Deterministic refinement: each invariant subspace is split by the next
    class matrix; the common eigenvectors have pairwise distinct eigenvalue
    tuples, so iterating over all matrices always reaches dimension one.
    """
    full = [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    work = [(full, 1)]
    final = []
    while work:
        cols, r = work.pop()
        if len(cols) == 1:
            final.append(cols[0])
            continue
        if r >= len(mats):
            raise ArithmeticError("class algebra did not split (bug)")
        d = len(cols)
        img = [[sum(mats[r][i][t] * col[t] for t in range(k)) % p for i in range(k)]
               for col in cols]
        a_cols = _solve_columns_mod(cols, img, p)
        a = [[a_cols[j][i] for j in range(d)] for i in range(d)]
        cp = _charpoly_mod(a, p)
        for lam in _poly_roots_mod(cp, p):
            shifted = [[(a[i][j] - (lam if i == j else 0)) % p for j in range(d)]
                       for i in range(d)]
            sub = []
            for vec in _nullspace_mod(shifted, p):
                sub.append([sum(cols[j][i] * vec[j] for j in range(d)) % p
                            for i in range(k)])
            if sub:
                work.append((sub, r + 1))
    if len(final) != k:
        raise ArithmeticError(f"found {len(final)} eigenvectors, expected {k}")
    return final


def character_table(g: Group, order_cap: int = TABLE_ORDER_CAP,
                    seed: int = 0) -> CharacterTable:
    """Complete exact character table with deterministic row order."""
    if getattr(g, "_chartab", None) is not None:
        return g._chartab
    if g.order > order_cap:
        raise ValueError(f"order {g.order} exceeds character-table cap {order_cap}")
    classes = g.conjugacy_classes()
    k = len(classes)
    if g.order == 1:
        row = Character(g, (Cyclo.one(),), 1, True)
        table = CharacterTable(g, (row,))
        g._chartab = table
        return table
    exponent = g.exponent
    p = _dixon_prime(g.order, exponent, min_above=k + 1)
    mats = _class_matrices(g)
    vecs = _split_spaces(mats, p, k)

    reps = [c.representative for c in classes]
    sizes = [c.size for c in classes]
    inv_class = [g.class_of(g.inv(r)) for r in reps]
    size_inv = [pow(s, p - 2, p) for s in sizes]
    order_mod = g.order % p
    gen = _primitive_root(p)
    w_exp = pow(gen, (p - 1) // exponent, p)  # fixed primitive exponent-th root
    # power map and root-of-unity tables, shared across rows
    power_classes = []
    root_pows = []
    for s in range(k):
        o = classes[s].element_order
        x, lst = 0, []
        for _ in range(o):
            lst.append(g.class_of(x))
            x = g.mul(x, reps[s])
        power_classes.append(lst)
        w_o = pow(w_exp, exponent // o, p)
        root_pows.append([pow(w_o, t, p) for t in range(o)])
    rows = []
    for v in vecs:
        scale = pow(v[0], p - 2, p)
        omega = [(x * scale) % p for x in v]
        dot = sum(omega[s] * omega[inv_class[s]] * size_inv[s]
                  for s in range(k)) % p
        deg_sq = (order_mod * pow(dot, p - 2, p)) % p
        deg = _sqrt_mod(deg_sq, p)
        deg = min(deg, p - deg)
        assert 1 <= deg <= isqrt(g.order) and g.order % deg == 0, "bad degree lift"
        chi_mod = [(deg * omega[s] * size_inv[s]) % p for s in range(k)]
        values = []
        for s in range(k):
            o = classes[s].element_order
            o_inv = pow(o, p - 2, p)
            pcls = power_classes[s]
            wpow = root_pows[s]
            chi_pow = [chi_mod[t] for t in pcls]
            counts = {}
            for j in range(o):
                acc = 0
                for i in range(o):
                    acc += chi_pow[i] * wpow[(-i * j) % o]
                mj = (acc % p) * o_inv % p
                assert mj <= deg, "eigenvalue multiplicity exceeds degree"
                if mj:
                    counts[j] = mj
            assert sum(counts.values()) == deg, "multiplicities do not sum to degree"
            values.append(Cyclo.root_sum(o, counts))
        rows.append(Character(g, tuple(values), deg, True))
    assert sum(r.degree**2 for r in rows) == g.order, "degree sum check failed"
    rows.sort(key=lambda r: r.sort_key())
    table = CharacterTable(g, tuple(rows))
    g._chartab = table
    return table


def _sqrt_mod(a: int, p: int) -> int:
    a %= p
    for x in range(p):
        if x * x % p == a:
            return x
    raise ArithmeticError(f"{a} is not a square mod {p}")


# ---------------------------------------------------------------------------
# Class-function operations
# ---------------------------------------------------------------------------

def inner_product(chi: Character, psi: Character) -> Fraction:
    """Exact <chi, psi> = (1/|G|) sum |C| chi(C) conj(psi(C))."""
    if chi.group is not psi.group:
        raise ValueError("characters live on different groups")
    g = chi.group
    total = Cyclo.zero()
    for cls, a, b in zip(g.conjugacy_classes(), chi.values, psi.values):
        total = total + Cyclo.rational(cls.size) * a * b.conj()
    total = total * Cyclo.rational(Fraction(1, g.order))
    return total.as_fraction()


def tensor_decompose(chi: Character, psi: Character,
                     table: CharacterTable | None = None) -> list[tuple[Character, int]]:
    """Multiset of irreducible constituents of chi (x) psi with multiplicities."""
    if chi.group is not psi.group:
        raise ValueError("characters live on different groups")
    table = table or character_table(chi.group)
    prod = chi.tensor(psi)
    out = []
    dim = 0
    for row in table.rows:
        m = inner_product(prod, row)
        if m.denominator != 1 or m < 0:
            raise AssertionError(f"non-integral multiplicity {m}")
        if m:
            out.append((row, int(m)))
            dim += int(m) * row.degree
    assert dim == chi.degree * psi.degree, "tensor dimensions do not balance"
    return out


def restrict(chi: Character, handle: SubgroupHandle) -> Character:
    """Restriction of a character of G to the subgroup (as its own group)."""
    if handle.parent is not chi.group:
        raise ValueError("handle does not belong to the character's group")
    sub, to_parent = handle.as_group()
    vals = []
    for cls in sub.conjugacy_classes():
        parent_elt = to_parent[cls.representative]
        vals.append(chi.values[chi.group.class_of(parent_elt)])
    return Character(sub, tuple(vals), chi.degree, False)


def induce(handle: SubgroupHandle, chi_h: Character, g: Group) -> Character:
    """Induced character: Ind chi(g) = (|C_G(g)|/|H|) sum_{y in H, y ~ g} chi(y)."""
    if handle.parent is not g:
        raise ValueError("handle does not belong to the target group")
    sub, to_parent = handle.as_group()
    if chi_h.group is not sub:
        raise ValueError("character does not live on the subgroup")
    h_order = handle.order
    classes = g.conjugacy_classes()
    vals = []
    for cls in classes:
        cent = g.order // cls.size
        acc = Cyclo.zero()
        for i, parent_elt in enumerate(to_parent):
            if parent_elt in cls.members:
                acc = acc + chi_h.values[sub.class_of(i)]
        vals.append(acc * Cyclo.rational(Fraction(cent, h_order)))
    degree = (g.order // h_order) * chi_h.degree
    ident = vals[0]
    assert ident == Cyclo.rational(degree), "induced degree mismatch"
    return Character(g, tuple(vals), degree, False)


# ---------------------------------------------------------------------------
# Symmetric-group degree statistics (hook lengths; no table built)
# ---------------------------------------------------------------------------

def sn_degree_stats(n: int, mu: tuple[int, ...] | None = None) -> dict:
    """Degree statistics of Irr(S_n) plus the class size data for cycle type mu."""
    from math import factorial, log

    from .symfunc import cycle_weight, hook_degree, partitions_of

    if not 1 <= n <= 40:
        raise ValueError("n out of supported range 1..40")
    degrees = sorted(hook_degree(p) for p in partitions_of(n))
    d = degrees[-1]
    out = {
        "n": n,
        "degrees": degrees,
        "d": d,
        "d2_log_d": d * d * max(1.0, log(d)),
    }
    if mu is not None:
        mu = tuple(sorted((int(x) for x in mu), reverse=True))
        if sum(mu) != n or any(x < 1 for x in mu):
            raise ValueError(f"{mu} is not a partition of {n}")
        w = cycle_weight(mu)
        out["mu"] = mu
        out["w"] = w
        out["class_size"] = factorial(n) // w
    return out
