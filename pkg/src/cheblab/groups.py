"""Finite groups from compact specs, with structural queries.

Element ids are canonical per spec kind (identity is always id 0), so
class lists, subgroup lattices and reports are reproducible across runs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "GroupSpec",
    "Group",
    "ConjugacyClass",
    "SubgroupHandle",
    "parse_spec",
    "build_group",
    "conjugacy_classes",
    "subgroups",
    "sylow",
    "structure_flags",
    "symmetric_sylow_spec",
    "quaternion_cayley_table",
    "unit_group",
]

DEFAULT_ORDER_CAP = 20000
SUBGROUP_ORDER_CAP = 512


class SpecError(ValueError):
    """Malformed group specification."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    kind: str  # cyclic | dihedral | symmetric | frobenius | product | perm | cayley
    n: int = 0
    p: int = 0
    q: int = 0
    factors: tuple["GroupSpec", ...] = ()
    generators: tuple[tuple[int, ...], ...] = ()  # image tuples, 0-based
    table: tuple[tuple[int, ...], ...] = ()

    def label(self) -> str:
        if self.kind == "cyclic":
            return f"cyclic:{self.n}"
        if self.kind == "dihedral":
            return f"dihedral:{self.n}"
        if self.kind == "symmetric":
            return f"symmetric:{self.n}"
        if self.kind == "frobenius":
            return f"frobenius:{self.p}:{self.q}"
        if self.kind == "product":
            return "product:" + "x".join(f.label() for f in self.factors)
        if self.kind == "perm":
            return "perm:" + ";".join(_cycles_str(g) for g in self.generators)
        return f"cayley:order{len(self.table)}"


def _cycles_str(perm: tuple[int, ...]) -> str:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def _parse_cycles(text: str) -> tuple[int, ...]:
    """Parse one permutation like (1,2)(3,4) into an image tuple (0-based)."""
    text = text.strip()
    if text in ("", "()"):
        return (0,)
    if not (text.startswith("(") and text.endswith(")")):
        raise SpecError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        pts = [int(t) for t in chunk.replace(" ", "").split(",") if t]
        if len(pts) != len(set(pts)) or any(p < 1 for p in pts):
            raise SpecError(f"bad cycle {chunk!r}")
        cycles.append(pts)
    degree = max(p for cyc in cycles for p in cyc)
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if img[a - 1] != a - 1:
                raise SpecError(f"point {a} repeated across cycles in {text!r}")
            img[a - 1] = b - 1
    return tuple(img)


def parse_spec(text: str) -> GroupSpec:
    """Parse the group mini-language (cyclic:n, dihedral:n, symmetric:n,
    frobenius:p:q, product:<spec>x<spec>, perm:(1,2);(1,2,3), cayley:@file)."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    if kind in ("cyclic", "dihedral", "symmetric"):
        try:
            n = int(rest)
        except ValueError:
            raise SpecError(f"bad integer in {text!r}") from None
        return GroupSpec(kind, n=n)
    if kind == "frobenius":
        parts = rest.split(":")
        if len(parts) != 2:
            raise SpecError(f"frobenius needs p:q, got {text!r}")
        return GroupSpec("frobenius", p=int(parts[0]), q=int(parts[1]))
    if kind == "product":
        factors = tuple(parse_spec(part) for part in rest.split("x"))
        if len(factors) < 2:
            raise SpecError("product needs at least two factors")
        return GroupSpec("product", factors=factors)
    if kind == "perm":
        gens = [_parse_cycles(g) for g in rest.split(";") if g.strip()]
        if not gens:
            raise SpecError("perm spec needs at least one generator")
        deg = max(len(g) for g in gens)
        gens = [g + tuple(range(len(g), deg)) for g in gens]
        return GroupSpec("perm", generators=tuple(gens))
    if kind == "cayley":
        if not rest.startswith("@"):
            raise SpecError("cayley spec must reference a JSON file: cayley:@file")
        with open(rest[1:]) as fh:
            data = json.load(fh)
        table = tuple(tuple(row) for row in data["table"])
        if len(table) != data.get("order", len(table)):
            raise SpecError("cayley order field disagrees with table size")
        return GroupSpec("cayley", table=table)
    raise SpecError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# Backends
# ---------------------------------------------------------------------------

class _Backend:
    n: int

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def generator_ids(self) -> list[int]:
        raise NotImplementedError


class _CyclicBackend(_Backend):
    def __init__(self, n):
        self.n = n

    def mul(self, a, b):
        return (a + b) % self.n

    def inv(self, a):
        return (-a) % self.n

    def generator_ids(self):
        return [1 % self.n]


class _DihedralBackend(_Backend):
    """id = s*n + r encodes the element s^s r^r, with s r s = r^-1."""

    def __init__(self, n):
        self.n = 2 * n
        self.rot = n

    def mul(self, a, b):
        n = self.rot
        s1, r1 = divmod(a, n)
        s2, r2 = divmod(b, n)
        r = (r2 + (r1 if s2 == 0 else -r1)) % n
        return ((s1 + s2) % 2) * n + r

    def inv(self, a):
        n = self.rot
        s, r = divmod(a, n)
        return a if s else (-r) % n

    def generator_ids(self):
        return [1, self.rot]


class _FrobeniusBackend(_Backend):
    """id = i*q + j encodes a^i b^j in <a,b | a^p=b^q=1, b a b^-1 = a^r>."""

    def __init__(self, p, q):
        self.p, self.q = p, q
        self.n = p * q
        r = next(r for r in range(2, p) if pow(r, q, p) == 1 and all(
            pow(r, k, p) != 1 for k in range(1, q)))
        self.r = r
        self.rpow = [pow(r, j, p) for j in range(q)]

    def mul(self, a, b):
        q, p = self.q, self.p
        i1, j1 = divmod(a, q)
        i2, j2 = divmod(b, q)
        return ((i1 + i2 * self.rpow[j1]) % p) * q + (j1 + j2) % q

    def inv(self, a):
        q, p = self.q, self.p
        i, j = divmod(a, q)
        jinv = (-j) % q
        return ((-i * self.rpow[jinv]) % p) * q + jinv

    def generator_ids(self):
        return [self.q, 1]  # a, b


class _ProductBackend(_Backend):
    def __init__(self, groups):
        self.groups = groups
        self.n = 1
        for g in groups:
            self.n *= g.order

    def _split(self, a):
        out = []
        for g in reversed(self.groups):
            a, r = divmod(a, g.order)
            out.append(r)
        return out[::-1]

    def _join(self, parts):
        a = 0
        for g, r in zip(self.groups, parts):
            a = a * g.order + r
        return a

    def mul(self, a, b):
        pa, pb = self._split(a), self._split(b)
        return self._join([g.mul(x, y) for g, x, y in zip(self.groups, pa, pb)])

    def inv(self, a):
        return self._join([g.inv(x) for g, x in zip(self.groups, self._split(a))])

    def generator_ids(self):
        gens = []
        for k, g in enumerate(self.groups):
            for gen in g.generators:
                parts = [0] * len(self.groups)
                parts[k] = gen
                gens.append(self._join(parts))
        return gens


class _PermBackend(_Backend):
    def __init__(self, elements: list[tuple[int, ...]], gens: list[tuple[int, ...]]):
        self.elements = elements
        self.n = len(elements)
        self.index = {p: i for i, p in enumerate(elements)}
        self.gen_perms = gens

    def mul(self, a, b):
        pa, pb = self.elements[a], self.elements[b]
        return self.index[tuple(pa[x] for x in pb)]

    def inv(self, a):
        pa = self.elements[a]
        out = [0] * len(pa)
        for i, x in enumerate(pa):
            out[x] = i
        return self.index[tuple(out)]

    def generator_ids(self):
        return [self.index[g] for g in self.gen_perms]


class _TableBackend(_Backend):
    def __init__(self, table: list[list[int]], gens: list[int] | None = None):
        self.table = table
        self.n = len(table)
        self._inv = [0] * self.n
        for a in range(self.n):
            self._inv[a] = table[a].index(0)
        self._gens = gens

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def generator_ids(self):
        if self._gens is not None:
            return self._gens
        gens, reach = [], {0}
        for a in range(self.n):
            if a not in reach:
                gens.append(a)
                reach = _closure_set(self, reach | {a}, gens)
            if len(reach) == self.n:
                break
        return gens


def _closure_set(backend: _Backend, seed, gens) -> set[int]:
    out = set(seed)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = backend.mul(x, g)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return out


# ---------------------------------------------------------------------------
# Group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    representative: int
    size: int
    element_order: int
    members: frozenset[int]


class Group:
    """Immutable finite group on ids 0..order-1 with identity 0."""

    def __init__(self, backend: _Backend, spec: GroupSpec | None = None):
        self._b = backend
        self.spec = spec
        self.order = backend.n
        self.generators = tuple(backend.generator_ids())
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: list[int] | None = None
        self._orders: dict[int, int] = {}

    # core operations

    def mul(self, a: int, b: int) -> int:
        return self._b.mul(a, b)

    def inv(self, a: int) -> int:
        return self._b.inv(a)

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, a: int) -> int:
        if a not in self._orders:
            k, x = 1, a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            self._orders[a] = k
        return self._orders[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        out, base = 0, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    @property
    def exponent(self) -> int:
        e = 1
        for cls in self.conjugacy_classes():
            e = lcm(e, cls.element_order)
        return e

    # conjugacy structure

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            gens = self.generators or [0]
            seen = [False] * self.order
            raw = []
            for x in range(self.order):
                if seen[x]:
                    continue
                orbit = {x}
                frontier = [x]
                seen[x] = True
                while frontier:
                    y = frontier.pop()
                    for g in gens:
                        z = self.conj(g, y)
                        if not seen[z]:
                            seen[z] = True
                            orbit.add(z)
                            frontier.append(z)
                raw.append(orbit)
            keyed = sorted(
                raw, key=lambda o: (len(o), self.element_order(min(o)), min(o)))
            classes = []
            for i, orbit in enumerate(keyed):
                rep = min(orbit)
                classes.append(ConjugacyClass(
                    i, rep, len(orbit), self.element_order(rep), frozenset(orbit)))
            self._classes = classes
            lookup = [0] * self.order
            for cls in classes:
                for x in cls.members:
                    lookup[x] = cls.index
            self._class_of = lookup
        return self._classes

    def class_of(self, x: int) -> int:
        self.conjugacy_classes()
        return self._class_of[x]

    def centralizer(self, x: int) -> frozenset[int]:
        return frozenset(g for g in range(self.order)
                         if self.mul(g, x) == self.mul(x, g))

    def center(self) -> frozenset[int]:
        gens = self.generators
        return frozenset(x for x in range(self.order)
                         if all(self.mul(x, g) == self.mul(g, x) for g in gens))

    def closure(self, gens) -> frozenset[int]:
        gens = [g for g in gens if g != 0]
        return frozenset(_closure_set(self._b, {0}, gens))

    def normal_closure(self, seed, extra_gen=None) -> frozenset[int]:
        """Smallest normal subgroup containing seed (and extra_gen if given)."""
        base = set(seed)
        if extra_gen is not None:
            base.add(extra_gen)
        gens = set(base)
        while True:
            new = set()
            for g in self.generators:
                for x in gens:
                    y = self.conj(g, x)
                    if y not in gens:
                        new.add(y)
            if not new:
                break
            gens |= new
        return self.closure(gens)

    def derived_subgroup(self) -> frozenset[int]:
        comms = set()
        for cls in self.conjugacy_classes():
            for x in cls.members:
                for g in self.generators:
                    comms.add(self.mul(self.inv(self.mul(g, x)), self.mul(x, g)))
        return self.normal_closure(comms)

    def __repr__(self):
        name = self.spec.label() if self.spec else "group"
        return f"Group({name}, order={self.order})"


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def _validate_associativity(g: Group, exhaustive: bool, seed: int = 0) -> None:
    """Exhaustive up to order 256 for table-backed (untrusted) input, sampled
    otherwise; closed-form and permutation backends are associative by
    construction, so sampling there is a cheap implementation tripwire."""
    n = g.order
    if exhaustive and n <= 256:
        for a in range(n):
            row = [g.mul(a, b) for b in range(n)]
            for b in range(n):
                ab = row[b]
                for c in range(n):
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)):
                        raise SpecError(f"associativity fails at ({a},{b},{c})")
    else:
        rng = random.Random(seed)
        for _ in range(10_000):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
                raise SpecError(f"associativity fails at ({a},{b},{c})")


def _validate_cayley(table) -> None:
    n = len(table)
    ids = set(range(n))
    for row in table:
        if len(row) != n or set(row) != ids:
            raise SpecError("cayley table is not a Latin square")
    for col in zip(*table):
        if set(col) != ids:
            raise SpecError("cayley table is not a Latin square")
    identity = next((e for e in range(n)
                     if all(table[e][x] == x and table[x][e] == x for x in range(n))),
                    None)
    if identity is None:
        raise SpecError("cayley table has no identity")
    for a in range(n):
        if identity not in table[a]:
            raise SpecError("cayley table lacks inverses")


def _renumber_table(table, identity):
    """Swap ids so the identity becomes 0."""
    if identity == 0:
        return [list(row) for row in table]
    perm = list(range(len(table)))
    perm[0], perm[identity] = identity, 0
    inv = perm  # an involution
    n = len(table)
    return [[inv[table[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]


def _perm_group_elements(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    deg = len(gens[0])
    if any(len(g) != deg or sorted(g) != list(range(deg)) for g in gens):
        raise SpecError("generators are not permutations of a common degree")
    identity = tuple(range(deg))
    elems = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[x] for x in g)
            if q not in elems:
                elems.add(q)
                frontier.append(q)
    return sorted(elems)


def build_group(spec: GroupSpec | str, order_cap: int = DEFAULT_ORDER_CAP,
                validate: bool = True) -> Group:
    """Construct the group described by spec (identity gets id 0)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind = spec.kind
    if kind == "cyclic":
        if spec.n < 1:
            raise SpecError("cyclic order must be >= 1")
        _check_cap(spec.n, order_cap)
        g = Group(_CyclicBackend(spec.n), spec)
    elif kind == "dihedral":
        if spec.n < 1:
            raise SpecError("dihedral parameter must be >= 1")
        _check_cap(2 * spec.n, order_cap)
        g = Group(_DihedralBackend(spec.n), spec)
    elif kind == "symmetric":
        if spec.n < 1:
            raise SpecError("symmetric degree must be >= 1")
        order = 1
        for k in range(2, spec.n + 1):
            order *= k
        _check_cap(order, order_cap)
        if spec.n == 1:
            g = Group(_CyclicBackend(1), spec)
        else:
            gens = [_parse_cycles("(1,2)"), tuple(list(range(1, spec.n)) + [0])]
            gens = [t + tuple(range(len(t), spec.n)) for t in gens]
            g = Group(_PermBackend(_perm_group_elements(gens), gens), spec)
    elif kind == "frobenius":
        p, q = spec.p, spec.q
        if not (_is_prime(p) and _is_prime(q)):
            raise SpecError("frobenius parameters must be prime")
        if p % q != 1:
            raise SpecError(f"frobenius requires p = 1 mod q, got {p} mod {q}")
        _check_cap(p * q, order_cap)
        g = Group(_FrobeniusBackend(p, q), spec)
    elif kind == "product":
        factors = [build_group(f, order_cap, validate=False) for f in spec.factors]
        order = 1
        for f in factors:
            order *= f.order
        _check_cap(order, order_cap)
        g = Group(_ProductBackend(factors), spec)
    elif kind == "perm":
        gens = list(spec.generators)
        elems = _perm_group_elements(gens)
        _check_cap(len(elems), order_cap)
        g = Group(_PermBackend(elems, gens), spec)
    elif kind == "cayley":
        _validate_cayley(spec.table)
        identity = next(e for e in range(len(spec.table))
                        if all(spec.table[e][x] == x for x in range(len(spec.table))))
        table = _renumber_table(spec.table, identity)
        _check_cap(len(table), order_cap)
        g = Group(_TableBackend(table), spec)
    else:
        raise SpecError(f"unknown kind {kind!r}")
    if validate:
        _validate_associativity(g, exhaustive=(kind == "cayley"))
    return g


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise SpecError(f"group order {order} exceeds cap {cap}")


def conjugacy_classes(g: Group) -> list[ConjugacyClass]:
    return g.conjugacy_classes()


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass
class SubgroupHandle:
    parent: Group
    members: frozenset[int]
    gens: tuple[int, ...]
    flags: dict = field(default_factory=dict)
    _group_cache: tuple | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def contains_class(self, cls: ConjugacyClass) -> bool:
        return bool(self.members & cls.members)

    def as_group(self) -> tuple[Group, list[int]]:
        """Subgroup as a standalone Group plus the id -> parent-id map."""
        if self._group_cache is None:
            elems = sorted(self.members)
            elems.remove(0)
            elems.insert(0, 0)
            index = {e: i for i, e in enumerate(elems)}
            table = [[index[self.parent.mul(a, b)] for b in elems] for a in elems]
            gens = [index[g] for g in self.gens if g != 0] or [0]
            sub = Group(_TableBackend(table, gens))
            self._group_cache = (sub, elems)
        return self._group_cache

    def conjugate(self, g: int) -> frozenset[int]:
        p = self.parent
        return frozenset(p.conj(g, x) for x in self.members)


def _lagrange_ok(h: int, g: int) -> bool:
    return g % h == 0


def subgroups(g: Group, order_cap: int = SUBGROUP_ORDER_CAP) -> tuple[list[SubgroupHandle], str]:
    """Subgroup conjugacy-class representatives.

    Exhaustive for |G| <= order_cap (one handle per conjugacy class of
    subgroups), otherwise the distinguished family (cyclic subgroups of
    class representatives, Sylow subgroups, center, derived subgroup).
    Returns (handles, mode) with mode in {"exhaustive", "distinguished"}.
    """
    if g.order <= order_cap:
        handles = _subgroups_exhaustive(g)
        mode = "exhaustive"
    else:
        handles = _subgroups_distinguished(g)
        mode = "distinguished"
    for h in handles:
        assert _lagrange_ok(h.order, g.order)
    return handles, mode


def _subgroups_exhaustive(g: Group) -> list[SubgroupHandle]:
    seen: dict[frozenset, tuple[int, ...]] = {}
    queue: list[frozenset] = []

    def push(members: frozenset, gens: tuple[int, ...]):
        if members not in seen:
            seen[members] = gens
            queue.append(members)

    push(frozenset({0}), ())
    for x in range(1, g.order):
        mem = frozenset(_closure_set(g._b, {0}, [x]))
        push(mem, (x,))
    idx = 0
    while idx < len(queue):
        members = queue[idx]
        gens = seen[members]
        idx += 1
        if len(members) == g.order:
            continue
        for x in range(1, g.order):
            if x in members:
                continue
            new_gens = gens + (x,)
            mem = frozenset(_closure_set(g._b, {0}, list(new_gens)))
            push(mem, new_gens)
    # collapse to conjugacy classes of subgroups
    all_sets = set(seen)
    reps = []
    visited = set()
    for members in sorted(all_sets, key=lambda s: (len(s), tuple(sorted(s)))):
        if members in visited:
            continue
        orbit = {members}
        frontier = [members]
        while frontier:
            cur = frontier.pop()
            for gen in g.generators:
                img = frozenset(g.conj(gen, x) for x in cur)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        visited |= orbit
        rep = min(orbit, key=lambda s: tuple(sorted(s)))
        reps.append(SubgroupHandle(g, rep, seen[rep]))
    reps.sort(key=lambda h: (h.order, h.key()))
    return reps


def _subgroups_distinguished(g: Group) -> list[SubgroupHandle]:
    found: dict[frozenset, tuple[int, ...]] = {frozenset({0}): ()}

    def add(members, gens):
        found.setdefault(frozenset(members), tuple(gens))

    for cls in g.conjugacy_classes():
        x = cls.representative
        add(_closure_set(g._b, {0}, [x]), (x,))
    n = g.order
    p = 2
    while p * p <= n:
        if n % p == 0:
            add(sylow(g, p).members, sylow(g, p).gens)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        add(sylow(g, n).members, sylow(g, n).gens)
    z = g.center()
    add(z, tuple(sorted(z)))
    d = g.derived_subgroup()
    add(d, tuple(sorted(d)))
    add(frozenset(range(g.order)), g.generators)
    handles = [SubgroupHandle(g, m, gens) for m, gens in found.items()]
    handles.sort(key=lambda h: (h.order, h.key()))
    return handles


def sylow(g: Group, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, grown by extension inside normalizers."""
    if not _is_prime(p) or g.order % p != 0:
        raise ValueError(f"{p} is not a prime divisor of |G| = {g.order}")
    target = 1
    n = g.order
    while n % p == 0:
        target *= p
        n //= p
    seed = next(x for x in range(1, g.order)
                if g.element_order(x) % p == 0)
    x = g.power(seed, g.element_order(seed) // p)
    members = frozenset(_closure_set(g._b, {0}, [x]))
    gens = [x]
    while len(members) < target:
        norm = [y for y in range(g.order)
                if all(g.conj(y, m) in members for m in gens) and
                frozenset(g.conj(y, m) for m in members) == members]
        grown = False
        for y in norm:
            if y in members:
                continue
            o = g.element_order(y)
            while o % p == 0:
                o //= p
            yp = g.power(y, o)  # p-part of y
            if yp in members:
                continue
            cand = frozenset(_closure_set(g._b, {0}, gens + [yp]))
            if _is_p_power(len(cand), p):
                members = cand
                gens.append(yp)
                grown = True
                break
        if not grown:
            raise RuntimeError("sylow growth stalled (bug)")
    return SubgroupHandle(g, members, tuple(gens))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# ---------------------------------------------------------------------------
# Structure flags
# ---------------------------------------------------------------------------

def structure_flags(h: SubgroupHandle | Group) -> dict:
    """{abelian, nilpotent, supersolvable}; implications are enforced."""
    if isinstance(h, SubgroupHandle):
        if h.flags:
            return h.flags
        grp, _ = h.as_group()
    else:
        grp = h
    abelian = all(c.size == 1 for c in grp.conjugacy_classes())
    nilpotent = abelian or _is_nilpotent(grp)
    ssolv = nilpotent or _is_supersolvable(grp)
    flags = {"abelian": abelian, "nilpotent": nilpotent, "supersolvable": ssolv}
    assert (not abelian or nilpotent) and (not nilpotent or ssolv)
    if isinstance(h, SubgroupHandle):
        h.flags.update(flags)
    return flags


def _is_nilpotent(grp: Group) -> bool:
    """Ascending central series reaches the whole group."""
    z = {0}
    while True:
        nxt = {x for x in range(grp.order)
               if all(grp.mul(grp.inv(grp.mul(g, x)), grp.mul(x, g)) in z
                      for g in grp.generators)}
        if nxt == z:
            return len(z) == grp.order
        z = nxt
        if len(z) == grp.order:
            return True


def _is_supersolvable(grp: Group) -> bool:
    """Build one chief series; supersolvable iff every factor has prime order.

    Chief factors are unique up to isomorphism, so one greedy series decides.
    """
    current = frozenset({0})
    while len(current) < grp.order:
        best = None
        for x in range(grp.order):
            if x in current:
                continue
            cand = grp.normal_closure(current, x)
            if best is None or len(cand) < len(best):
                best = cand
                if len(best) == 2 * len(current):
                    break
        index = len(best) // len(current)
        if not _is_prime(index):
            return False
        current = best
    return True


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------

def symmetric_sylow_spec(n: int, p: int) -> GroupSpec:
    """Permutation spec for a Sylow p-subgroup of S_n (iterated wreath products).

    Avoids building S_n itself; for n = p^k this is the k-fold wreath power
    of Z/p, of order p^((p^k - 1)/(p - 1)).
    """
    if not _is_prime(p):
        raise SpecError(f"{p} is not prime")
    gens: list[tuple[int, ...]] = []
    offset = 0
    digits = []
    m = n
    while m:
        digits.append(m % p)
        m //= p
    for level, count in enumerate(digits):
        width = p**level
        for _ in range(count):
            gens.extend(_wreath_generators(p, level, offset, n))
            offset += width
    if not gens:
        gens = [tuple(range(max(n, 1)))]
    return GroupSpec("perm", generators=tuple(g + tuple(range(len(g), n)) for g in gens))


def _wreath_generators(p: int, level: int, offset: int, degree: int):
    """Generators of the level-fold wreath power of Z/p acting on p^level points."""
    if level == 0:
        return []
    out = []
    block = p ** (level - 1)
    out.extend(_wreath_generators(p, level - 1, offset, degree))
    img = list(range(degree))
    for i in range(p * block):
        img[offset + i] = offset + (i + block) % (p * block)
    out.append(tuple(img))
    return out


def quaternion_cayley_table() -> tuple[tuple[int, ...], ...]:
    """Cayley table of Q8 with elements 1,-1,i,-i,j,-j,k,-k (ids 0..7)."""
    units = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    # axes: 0 = scalar, 1 = i, 2 = j, 3 = k
    mul_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }
    index = {u: i for i, u in enumerate(units)}
    table = []
    for s1, a1 in units:
        row = []
        for s2, a2 in units:
            s3, a3 = mul_axis[(a1, a2)]
            row.append(index[(s1 * s2 * s3, a3)])
        table.append(tuple(row))
    return tuple(table)


def unit_group(q: int) -> tuple[Group, list[int]]:
    """The multiplicative group (Z/q)^* as a Group, with its residue list.

    Residues are sorted ascending, except residue 1 is moved to id 0.
    """
    residues = [a for a in range(1, q + 1) if gcd(a, q) == 1]
    residues.remove(1 % q)
    residues.insert(0, 1 % q)
    index = {r: i for i, r in enumerate(residues)}
    table = [[index[(a * b) % q] for b in residues] for a in residues]
    return Group(_TableBackend(table)), residues
