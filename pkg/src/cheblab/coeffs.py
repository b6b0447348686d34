"""Local-root and Dirichlet-coefficient identities.

An InertiaScenario packages the local data (decomposition subgroup D,
normal inertia subgroup I, a Frobenius coset representative phi, and the
residue norm Np) that drives every local computation: power-sum traces,
Frobenius eigenvalue multisets, Euler factor coefficients, Artin conductor
exponents and the tau interpolation of the Artin symbol indicator.  All of
it is exact cyclotomic/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chartab import Character, CharacterTable
from .cyclotomic import Cyclo
from .groups import ConjugacyClass, Group, unit_group
from .symfunc import Partition, complete_homogeneous, partitions_of, schur

__all__ = [
    "InertiaScenario",
    "LocalRoots",
    "RamificationFiltration",
    "a_coeff",
    "a_coeff_vector",
    "local_roots",
    "euler_factor_series",
    "tensor_lambda",
    "tau",
    "tau_by_count",
    "conductor_exponent",
    "cyclotomic_filtration",
    "cyclotomic_tame_scenario",
    "conductor_discriminant_check",
    "all_scenarios",
]


class ScenarioError(ValueError):
    """Inconsistent local data (D, I, phi, Np)."""


@dataclass(frozen=True)
class InertiaScenario:
    group: Group
    decomposition: frozenset[int]
    inertia: frozenset[int]
    frobenius: int  # coset representative phi in D
    norm: int = 2

    def __post_init__(self):
        g = self.group
        d, i = self.decomposition, self.inertia
        if self.norm < 2:
            raise ScenarioError("prime norm must be at least 2")
        if not i <= d:
            raise ScenarioError("inertia must sit inside the decomposition group")
        if self.frobenius not in d:
            raise ScenarioError("frobenius representative must lie in D")
        if 0 not in i:
            raise ScenarioError("inertia must contain the identity")
        for x in d:
            if any(g.conj(x, a) not in i for a in i):
                raise ScenarioError("inertia is not normal in the decomposition group")
        # phi*I must generate the cyclic quotient D/I
        quotient_order = len(d) // len(i)
        k, x = 1, self.frobenius
        while x not in i:
            x = g.mul(x, self.frobenius)
            k += 1
        if k != quotient_order and not (quotient_order == 1 and k >= 1):
            raise ScenarioError(
                f"phi has order {k} in D/I, expected {quotient_order}")

    @property
    def residue_order(self) -> int:
        """|D/I|, the order of the Frobenius on the residue extension."""
        return len(self.decomposition) // len(self.inertia)

    def is_unramified(self) -> bool:
        return len(self.inertia) == 1

    @staticmethod
    def from_json(g: Group, data: dict) -> "InertiaScenario":
        return InertiaScenario(g, frozenset(data["D"]), frozenset(data["I"]),
                               data["phi"], data.get("Np", 2))

    def to_json(self) -> dict:
        return {"D": sorted(self.decomposition), "I": sorted(self.inertia),
                "phi": self.frobenius, "Np": self.norm}


@dataclass(frozen=True)
class LocalRoots:
    """Multiset of Frobenius eigenvalues of chi at the scenario, zero-padded."""

    roots: tuple[Cyclo, ...]
    invariant_dim: int

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def zero_count(self) -> int:
        return self.degree - self.invariant_dim

    def conjugates(self) -> "LocalRoots":
        return LocalRoots(tuple(r.conj() for r in self.roots), self.invariant_dim)


def _coset_class_counts(sc: InertiaScenario, ell: int) -> dict[int, int]:
    """Class-index multiplicities of {phi^ell * alpha : alpha in I}."""
    g = sc.group
    lead = g.power(sc.frobenius, ell)
    counts: dict[int, int] = {}
    for alpha in sc.inertia:
        t = g.class_of(g.mul(lead, alpha))
        counts[t] = counts.get(t, 0) + 1
    return counts


def a_coeff(chi: Character, sc: InertiaScenario, ell: int) -> Cyclo:
    """a_chi(p^ell) = (1/|I|) sum_alpha chi(phi^ell alpha), exact."""
    if chi.group is not sc.group:
        raise ScenarioError("character and scenario live on different groups")
    if ell < 0:
        raise ScenarioError("ell must be nonnegative")
    counts = _coset_class_counts(sc, ell)
    acc = Cyclo.zero()
    for t, n in counts.items():
        acc = acc + Cyclo.rational(n) * chi.values[t]
    return acc * Cyclo.rational(Fraction(1, len(sc.inertia)))


def a_coeff_vector(table: CharacterTable, sc: InertiaScenario, ell: int) -> list[Cyclo]:
    """a_chi(p^ell) for every irreducible at once (shared class counts)."""
    counts = _coset_class_counts(sc, ell)
    scale = Cyclo.rational(Fraction(1, len(sc.inertia)))
    out = []
    for row in table.rows:
        acc = Cyclo.zero()
        for t, n in counts.items():
            acc = acc + Cyclo.rational(n) * row.values[t]
        out.append(acc * scale)
    return out


def local_roots(chi: Character, sc: InertiaScenario) -> LocalRoots:
    """Eigenvalue multiset of the Frobenius on the inertia invariants.

    Multiplicities come from the exact discrete Fourier transform of the
    power sums a_chi(p^ell); they must be nonnegative integers summing to
    dim V^I, and the recovered roots must reproduce the power sums (Newton
    consistency), otherwise the scenario and character are inconsistent.
    """
    dim_c = a_coeff(chi, sc, 0)
    if not dim_c.is_rational() or dim_c.as_fraction().denominator != 1:
        raise ScenarioError(f"dim V^I is not an integer: {dim_c}")
    dim = int(dim_c.as_fraction())
    o = sc.residue_order
    traces = [a_coeff(chi, sc, ell) for ell in range(o)]
    counts: dict[int, int] = {}
    total = 0
    for j in range(o):
        acc = Cyclo.zero()
        for ell in range(o):
            acc = acc + traces[ell] * Cyclo.root_of_unity(o, (-j * ell) % o)
        acc = acc * Cyclo.rational(Fraction(1, o))
        if acc.is_zero():
            continue
        if not acc.is_rational() or acc.as_fraction().denominator != 1 \
                or acc.as_fraction() < 0:
            raise ScenarioError(f"non-integral eigenvalue multiplicity {acc}")
        m = int(acc.as_fraction())
        counts[j] = m
        total += m
    if total != dim:
        raise ScenarioError("eigenvalue multiplicities do not sum to dim V^I")
    roots = []
    for j, m in sorted(counts.items()):
        roots.extend([Cyclo.root_of_unity(o, j)] * m)
    roots.extend([Cyclo.zero()] * (chi.degree - dim))
    lr = LocalRoots(tuple(roots), dim)
    for ell in range(1, min(dim, o) + 1):
        ps = Cyclo.zero()
        for r in lr.roots:
            ps = ps + r**ell
        if ps != traces[ell % o]:
            raise ScenarioError("Newton consistency failure in local roots")
    return lr


def euler_factor_series(chi: Character, sc: InertiaScenario, k_max: int) -> list[Cyclo]:
    """Dirichlet coefficients lambda_chi(p^k) = h_k(A_chi(p)) for k <= k_max."""
    if k_max > 30:
        raise ValueError("k_max above 30 is not supported")
    roots = local_roots(chi, sc).roots
    return complete_homogeneous(list(roots), k_max)


def tensor_lambda(chi: Character, chi2: Character, sc: InertiaScenario,
                  k_max: int) -> list[Cyclo]:
    """lambda_{chi (x) chi2}(p^k) = sum_{|mu|=k} s_mu(A_chi) s_mu(A_chi2).

    Only defined here at unramified scenarios; cross-validated against the
    Euler factor of the tensor character.
    """
    if not sc.is_unramified():
        raise ScenarioError("tensor coefficients require an unramified scenario")
    a_roots = list(local_roots(chi, sc).roots)
    b_roots = list(local_roots(chi2, sc).roots)
    out = [Cyclo.one()]
    for k in range(1, k_max + 1):
        acc = Cyclo.zero()
        for mu in partitions_of(k):
            acc = acc + schur(mu, a_roots) * schur(mu, b_roots)
        out.append(acc)
    direct = euler_factor_series(chi.tensor(chi2), sc, k_max)
    assert all(x == y for x, y in zip(out, direct)), \
        "Schur expansion disagrees with the tensor Euler factor"
    return out


# ---------------------------------------------------------------------------
# tau: interpolated Artin-symbol indicator
# ---------------------------------------------------------------------------

def tau(cls: ConjugacyClass, table: CharacterTable, sc: InertiaScenario,
        ell: int) -> Fraction:
    """(|C|/|G|) (1/|I|) sum_alpha sum_chi conj(chi)(C) chi(phi^ell alpha)."""
    g = table.group
    counts = _coset_class_counts(sc, ell)
    acc = Cyclo.zero()
    for row in table.rows:
        char_c = row.values[cls.index].conj()
        inner = Cyclo.zero()
        for t, n in counts.items():
            inner = inner + Cyclo.rational(n) * row.values[t]
        acc = acc + char_c * inner
    acc = acc * Cyclo.rational(Fraction(cls.size, g.order * len(sc.inertia)))
    value = acc.as_fraction()
    assert 0 <= value <= 1, f"tau out of range: {value}"
    return value


def tau_by_count(cls: ConjugacyClass, sc: InertiaScenario, ell: int) -> Fraction:
    """Independent route: fraction of the coset phi^ell I landing in the class."""
    g = sc.group
    lead = g.power(sc.frobenius, ell)
    hits = sum(1 for alpha in sc.inertia if g.mul(lead, alpha) in cls.members)
    return Fraction(hits, len(sc.inertia))


# ---------------------------------------------------------------------------
# Artin conductors from ramification filtrations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RamificationFiltration:
    """Descending chain G_0 >= G_1 >= ... of subgroups of D with G_0 = I."""

    groups: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.groups:
            raise ValueError("filtration needs at least G_0")
        for a, b in zip(self.groups, self.groups[1:]):
            if not b <= a:
                raise ValueError("filtration must be descending")
        for gset in self.groups:
            if 0 not in gset:
                raise ValueError("each filtration group must contain the identity")


def conductor_exponent(chi: Character, filt: RamificationFiltration,
                       e0: int | None = None) -> int:
    """ord_p(f_chi) = sum_i (|G_i|/|G_0|) (chi(1) - dim V^{G_i}).

    Raises if the result is not a nonnegative integer, which signals an
    invalid filtration for the group at hand.
    """
    g = chi.group
    e0 = len(filt.groups[0]) if e0 is None else e0
    total = Fraction(0)
    for gi in filt.groups:
        acc = Cyclo.zero()
        for alpha in gi:
            acc = acc + chi.values[g.class_of(alpha)]
        dim = acc * Cyclo.rational(Fraction(1, len(gi)))
        if not dim.is_rational() or dim.as_fraction().denominator != 1:
            raise ValueError(f"dim V^(G_i) not an integer for {gi}")
        total += Fraction(len(gi), e0) * (chi.degree - int(dim.as_fraction()))
    if total.denominator != 1 or total < 0:
        raise ValueError(f"conductor exponent {total} is not a nonnegative integer")
    return int(total)


def cyclotomic_filtration(q: int, p: int, group: Group | None = None,
                          residues: list[int] | None = None) -> RamificationFiltration:
    """Built-in ramification filtration of p in Q(zeta_q)/Q.

    With q = p^a q', G_0 is the inertia subgroup {x = 1 mod q'} of (Z/q)^*,
    and the higher groups are the unit subgroups U_i = {x = 1 mod q' p^i}
    repeated for u in [p^(i-1), p^i - 1], the standard lower-numbering
    filtration of a cyclotomic field.
    """
    if q < 3 or q % p != 0:
        raise ValueError(f"{p} is unramified in the {q}-th cyclotomic field")
    if group is None or residues is None:
        group, residues = unit_group(q)
    index = {r: i for i, r in enumerate(residues)}
    a = 0
    qprime = q
    while qprime % p == 0:
        qprime //= p
        a += 1

    def u_subgroup(i: int) -> frozenset[int]:
        mod = qprime * p**min(i, a)
        return frozenset(index[r] for r in residues if r % mod == 1 % mod)

    chain = [u_subgroup(0)]
    u = 1
    while True:
        i = 0
        while p**i <= u:
            i += 1
        sub = u_subgroup(i)
        if len(sub) == 1:
            break
        chain.append(sub)
        u += 1
    return RamificationFiltration(tuple(chain))


def cyclotomic_tame_scenario(q: int, p: int, group: Group | None = None,
                             residues: list[int] | None = None) -> InertiaScenario:
    """Scenario at a ramified prime of Q(zeta_q)/Q: D is generated by the
    inertia subgroup together with the Frobenius residue p mod q'."""
    if group is None or residues is None:
        group, residues = unit_group(q)
    index = {r: i for i, r in enumerate(residues)}
    qprime = q
    while qprime % p == 0:
        qprime //= p
    inertia = frozenset(index[r] for r in residues if r % qprime == 1 % qprime)
    # any unit congruent to p mod q' represents the Frobenius coset
    frob = next(index[r] for r in residues if r % qprime == p % qprime)
    dec = set(inertia)
    cur = frob
    while cur not in dec:
        dec |= {group.mul(cur, x) for x in inertia}
        cur = group.mul(cur, frob)
    return InertiaScenario(group, frozenset(dec), inertia, frob, norm=p)


def conductor_discriminant_check(table: CharacterTable,
                                 filtrations: dict[int, RamificationFiltration],
                                 disc_l: int, disc_k: int = 1) -> dict:
    """Verify prod_chi (N f_chi)^chi(1) = D_L / D_K^|G| on supplied data."""
    norms = []
    for row in table.rows:
        nf = 1
        for p, filt in filtrations.items():
            nf *= p ** conductor_exponent(row, filt)
        norms.append(nf)
    prod = 1
    for row, nf in zip(table.rows, norms):
        prod *= nf ** row.degree
    expected, rem = divmod(disc_l, disc_k ** table.group.order)
    ok = rem == 0 and prod == expected
    return {"ok": ok, "product": prod, "expected": expected,
            "conductor_norms": norms}


# ---------------------------------------------------------------------------
# Scenario sweeps
# ---------------------------------------------------------------------------

def all_scenarios(g: Group, subgroup_handles=None, norm: int = 2):
    """Every (D, I normal in D, phi) scenario up to conjugacy and inertia cosets.

    D runs over subgroup conjugacy-class representatives, I over normal
    subgroups of D with cyclic quotient, and phi over coset representatives
    generating D/I.  Coefficient values only depend on the scenario through
    the class function data, so this sweep is exhaustive up to equivalence.
    """
    from .groups import subgroups

    if subgroup_handles is None:
        subgroup_handles, _ = subgroups(g)
    out = []
    for handle in subgroup_handles:
        d_members = handle.members
        sub, to_parent = handle.as_group()
        inner_handles, _ = subgroups(sub)
        for ih in inner_handles:
            i_members = frozenset(to_parent[x] for x in ih.members)
            if any(g.conj(x, a) not in i_members
                   for x in d_members for a in i_members):
                continue  # not normal in D
            quotient = len(d_members) // len(i_members)
            seen_cosets = set()
            for phi in sorted(d_members):
                coset = frozenset(g.mul(phi, a) for a in i_members)
                if coset in seen_cosets:
                    continue
                seen_cosets.add(coset)
                k, x = 1, phi
                while x not in i_members:
                    x = g.mul(x, phi)
                    k += 1
                if k != quotient and quotient != 1:
                    continue
                out.append(InertiaScenario(g, d_members, i_members, phi, norm))
    return out
