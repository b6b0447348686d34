"""AHC certification of subgroups and the subgroup-objective optimization.

Certification uses the sufficient conditions with sound, checkable
witnesses: abelian, nilpotent, or supersolvable subgroups are monomial,
and beyond those an explicit monomial witness (a linear character of a
subgroup inducing each irreducible) is searched for exhaustively.  A
subgroup with no certificate is reported as Unknown, never as a failure:
no decision procedure is available in general, and guessing further
sufficient conditions is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import Character, character_table, induce, inner_product
from .groups import (ConjugacyClass, Group, SubgroupHandle, structure_flags,
                     subgroups)

__all__ = [
    "AhcCertificate",
    "ObjectiveReport",
    "OptimizationResult",
    "certify_ahc",
    "monomial_witness",
    "best_subgroup",
    "orbit_stabilizer_bound",
]

MONOMIAL_CAP = 384

TIER_ORDER = ("Abelian", "Nilpotent", "Supersolvable", "MonomialExplicit", "Unknown")


@dataclass
class AhcCertificate:
    subgroup: SubgroupHandle
    tier: str
    witness: list | None = None  # [(subgroup-of-H handle, linear char, row index)]

    @property
    def certified(self) -> bool:
        return self.tier != "Unknown"


@dataclass
class ObjectiveReport:
    subgroup: SubgroupHandle
    order: int
    d_h: int
    tier: str
    objective: float           # d_H^2 Log d_H / |H|
    abelian_baseline: float    # 1/|H| (coincides with objective when abelian)
    reference: float           # |C|/|G|

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "d_H": self.d_h,
            "tier": self.tier,
            "objective": self.objective,
            "abelian_baseline": self.abelian_baseline,
            "reference": self.reference,
            "members": sorted(self.subgroup.members),
        }


@dataclass
class OptimizationResult:
    ranked: list[ObjectiveReport]
    abelian_minimum: float
    reference: float
    subgroup_mode: str
    assume_ahc: bool

    def to_json(self) -> dict:
        return {
            "subgroup_mode": self.subgroup_mode,
            "assume_ahc": self.assume_ahc,
            "reference_C_over_G": self.reference,
            "abelian_minimum": self.abelian_minimum,
            "ranked": [r.to_json() for r in self.ranked],
        }


def monomial_witness(handle: SubgroupHandle, cap: int = MONOMIAL_CAP):
    """Explicit monomial witnesses for every irreducible of the subgroup.

    Searches subgroups K of H (largest first: cheaper inductions) and linear
    characters of K whose induction to H is irreducible, matching induced
    characters against Irr(H) by exact value equality.  Returns the witness
    list, or None when some irreducible has no witness within the search.
    """
    if handle.order > cap:
        return None
    sub, _ = handle.as_group()
    table_h = character_table(sub)
    remaining = {i for i in range(len(table_h.rows))}
    witness: dict[int, tuple] = {}
    inner_handles, _ = subgroups(sub)
    for k_handle in sorted(inner_handles, key=lambda h: -h.order):
        if not remaining:
            break
        k_group, _ = k_handle.as_group()
        table_k = character_table(k_group)
        for lam in table_k.rows:
            if lam.degree != 1:
                continue
            ind = induce(k_handle, lam, sub)
            if inner_product(ind, ind) != 1:
                continue
            for i in list(remaining):
                if table_h.rows[i].values == ind.values:
                    witness[i] = (k_handle, lam, i)
                    remaining.discard(i)
                    break
    if remaining:
        return None
    # soundness: witnesses biject onto Irr(H)
    assert len(witness) == len(table_h.rows)
    return [witness[i] for i in sorted(witness)]


def certify_ahc(g: Group, handle: SubgroupHandle,
                monomial_cap: int = MONOMIAL_CAP) -> AhcCertificate:
    """Strongest applicable certificate tier for the subgroup.

    Unknown is a valid outcome, not an error; the explicit monomial search
    only runs when the structural tiers fail and |H| is within the cap.
    """
    if not handle.members <= frozenset(range(g.order)):
        raise ValueError("handle does not live in the group")
    flags = structure_flags(handle)
    if flags["abelian"]:
        return AhcCertificate(handle, "Abelian")
    if flags["nilpotent"]:
        return AhcCertificate(handle, "Nilpotent")
    if flags["supersolvable"]:
        return AhcCertificate(handle, "Supersolvable")
    wit = monomial_witness(handle, monomial_cap)
    if wit is not None:
        return AhcCertificate(handle, "MonomialExplicit", wit)
    return AhcCertificate(handle, "Unknown")


def _log_cap(x: float) -> float:
    from math import log

    return max(1.0, log(x)) if x > 0 else 1.0


def best_subgroup(g: Group, cls: ConjugacyClass, assume_ahc: bool = False,
                  order_cap: int = 512,
                  monomial_cap: int = MONOMIAL_CAP) -> OptimizationResult:
    """Rank certified subgroups meeting the class by d_H^2 Log(d_H)/|H|.

    assume_ahc also admits Unknown-tier subgroups (the conditional
    comparison); ties break by larger |H| first, then by canonical id.
    The certified minimum can never exceed the abelian-only minimum, which
    is asserted on every run.
    """
    handles, mode = subgroups(g, order_cap)
    reference = cls.size / g.order
    reports = []
    abelian_min = None
    for handle in handles:
        if not handle.contains_class(cls):
            continue
        cert = certify_ahc(g, handle, monomial_cap)
        sub, _ = handle.as_group()
        d_h = character_table(sub).d_G
        objective = d_h * d_h * _log_cap(d_h) / handle.order
        baseline = 1.0 / handle.order
        if cert.tier == "Abelian":
            abelian_min = baseline if abelian_min is None else min(abelian_min, baseline)
        if not cert.certified and not assume_ahc:
            continue
        reports.append(ObjectiveReport(handle, handle.order, d_h, cert.tier,
                                       objective, baseline, reference))
    assert abelian_min is not None, "a cyclic subgroup always meets the class"
    reports.sort(key=lambda r: (r.objective, -r.order, r.subgroup.key()))
    assert reports and reports[0].objective <= abelian_min + 1e-15, \
        "certified minimum exceeds the abelian baseline"
    return OptimizationResult(reports, abelian_min, reference, mode, assume_ahc)


def orbit_stabilizer_bound(g: Group, cls: ConjugacyClass,
                           check_exhaustive: bool = True) -> dict:
    """|C| as a lower bound on [G:H] over abelian subgroups meeting C.

    Any abelian H through an element of C lies in that element's
    centralizer, so [G:H] >= [G:C_G(rep)] = |C|.  When the exhaustive
    subgroup list is available the bound is checked against every abelian
    subgroup.
    """
    bound = cls.size
    verified = 0
    if check_exhaustive:
        handles, mode = subgroups(g)
        if mode == "exhaustive":
            for handle in handles:
                if not handle.contains_class(cls):
                    continue
                if not structure_flags(handle)["abelian"]:
                    continue
                index = g.order // handle.order
                assert index >= bound, (
                    f"abelian subgroup of index {index} beats the class size {bound}")
                verified += 1
    return {"bound": bound, "abelian_subgroups_checked": verified}
