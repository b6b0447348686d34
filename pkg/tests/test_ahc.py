"""AHC certification tiers, monomial witnesses, subgroup optimization."""

from math import log

import pytest

from cheblab.ahc import (best_subgroup, certify_ahc, monomial_witness,
                         orbit_stabilizer_bound)
from cheblab.chartab import character_table, induce, inner_product
from cheblab.groups import build_group, structure_flags, subgroups, sylow
from conftest import group


def test_tier_examples(s4):
    handles, _ = subgroups(s4)
    by_order = {}
    for h in handles:
        by_order.setdefault(h.order, []).append(h)
    assert certify_ahc(s4, by_order[3][0]).tier == "Abelian"
    assert certify_ahc(s4, by_order[8][0]).tier == "Nilpotent"  # Sylow-2
    assert certify_ahc(s4, by_order[6][0]).tier == "Supersolvable"  # S3
    a4 = certify_ahc(s4, by_order[12][0])
    assert a4.tier == "MonomialExplicit" and a4.witness is not None
    full = certify_ahc(s4, by_order[24][0])
    assert full.tier == "MonomialExplicit"


def test_witness_soundness(s4):
    handles, _ = subgroups(s4)
    whole = [h for h in handles if h.order == 24][0]
    wit = monomial_witness(whole)
    sub, _ = whole.as_group()
    table = character_table(sub)
    seen = set()
    for k_handle, lam, row_idx in wit:
        assert lam.degree == 1
        ind = induce(k_handle, lam, sub)
        assert inner_product(ind, ind) == 1  # induced character is irreducible
        assert ind.values == table.rows[row_idx].values
        seen.add(row_idx)
    assert seen == set(range(len(table.rows)))  # bijection onto Irr(H)


def test_supersolvable_subgroup_also_has_witness(s4):
    # the S3 inside S4 is supersolvable, and an explicit witness exists too
    handles, _ = subgroups(s4)
    s3h = [h for h in handles if h.order == 6][0]
    assert monomial_witness(s3h) is not None


def test_nilpotent_subgroups_admit_witnesses():
    # tier consistency on small corpus groups
    for label in ("symmetric:4", "dihedral:6", "cyclic:12"):
        g = group(label)
        handles, _ = subgroups(g)
        for h in handles:
            if structure_flags(h)["nilpotent"] and h.order <= 48:
                assert monomial_witness(h) is not None, (label, h.order)


def test_sl23_is_unknown():
    # SL(2,3) acting on the 8 nonzero vectors of F_3^2: solvable, not monomial
    sl23 = build_group("perm:(1,6,2,3)(4,7,8,5);(1,4,7)(2,8,5)")
    assert sl23.order == 24
    assert character_table(sl23).degrees() == [1, 1, 1, 2, 2, 2, 3]
    flags = structure_flags(sl23)
    assert not flags["supersolvable"]
    handles, _ = subgroups(sl23)
    whole = [h for h in handles if h.order == 24][0]
    cert = certify_ahc(sl23, whole)
    assert cert.tier == "Unknown"
    # the conditional mode still ranks it
    cls = max(sl23.conjugacy_classes(), key=lambda c: c.size)
    unconditional = best_subgroup(sl23, cls, assume_ahc=False)
    conditional = best_subgroup(sl23, cls, assume_ahc=True)
    assert all(r.tier != "Unknown" for r in unconditional.ranked)
    assert any(r.tier == "Unknown" for r in conditional.ranked)


def test_best_subgroup_abelian_group():
    g = group("cyclic:6")
    cls = g.conjugacy_classes()[3]
    out = best_subgroup(g, cls)
    assert out.ranked[0].order == 6
    assert out.ranked[0].objective == pytest.approx(1 / 6)


def test_best_subgroup_s4_four_cycles(s4):
    cls = [c for c in s4.conjugacy_classes() if c.element_order == 4][0]
    out = best_subgroup(s4, cls)
    top = out.ranked[0]
    assert top.order == 4 and top.d_h == 1  # the cyclic <(1234)> wins
    assert top.objective == pytest.approx(0.25)
    sylow2 = [r for r in out.ranked if r.order == 8][0]
    assert sylow2.objective == pytest.approx(0.5)  # 4 * Log(2) / 8 with Log 2 = 1
    assert out.abelian_minimum == pytest.approx(0.25)
    assert top.objective <= out.abelian_minimum


def test_best_subgroup_frobenius_class():
    g = group("frobenius:7:3")
    cls = [c for c in g.conjugacy_classes() if c.size == 7][0]
    out = best_subgroup(g, cls)
    whole = [r for r in out.ranked if r.order == 21]
    assert whole, "G itself must be certified (supersolvable => monomial)"
    assert whole[0].tier == "Supersolvable"
    assert whole[0].objective == pytest.approx(9 * log(3) / 21)
    assert out.reference == pytest.approx(7 / 21)


def test_objective_report_fields(s4):
    cls = s4.conjugacy_classes()[1]
    out = best_subgroup(s4, cls)
    for r in out.ranked:
        if r.tier == "Abelian":
            assert r.objective == pytest.approx(r.abelian_baseline)
        data = r.to_json()
        assert set(data) >= {"order", "d_H", "tier", "objective",
                             "abelian_baseline", "reference"}


def test_deterministic_tie_break(s4):
    cls = s4.conjugacy_classes()[0]  # identity class meets every subgroup
    a = best_subgroup(s4, cls)
    b = best_subgroup(s4, cls)
    assert [r.subgroup.key() for r in a.ranked] == [r.subgroup.key() for r in b.ranked]
    objectives = [r.objective for r in a.ranked]
    assert objectives == sorted(objectives)
    for r1, r2 in zip(a.ranked, a.ranked[1:]):
        if abs(r1.objective - r2.objective) < 1e-15:
            assert r1.order >= r2.order  # |H| descending on ties


def test_orbit_stabilizer(s4, s3):
    singleton = s3.conjugacy_classes()[0]
    assert orbit_stabilizer_bound(s3, singleton)["bound"] == 1
    transpositions = [c for c in s4.conjugacy_classes()
                      if c.size == 6 and c.element_order == 2][0]
    out = orbit_stabilizer_bound(s4, transpositions)
    assert out["bound"] == 6 and out["abelian_subgroups_checked"] >= 1
    d5 = group("dihedral:5")
    refl = [c for c in d5.conjugacy_classes() if c.size == 5][0]
    assert orbit_stabilizer_bound(d5, refl)["bound"] == 5
