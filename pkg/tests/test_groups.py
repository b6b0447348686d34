"""Group construction, classes, subgroups, Sylow, structure flags."""

import pytest

from cheblab.groups import (GroupSpec, SpecError, build_group, parse_spec,
                            quaternion_cayley_table, structure_flags, subgroups,
                            sylow, symmetric_sylow_spec, unit_group)
from conftest import group


def test_trivial_group():
    g = group("cyclic:1")
    assert g.order == 1 and g.mul(0, 0) == 0


def test_dihedral3_is_s3():
    # brute-force comparison of order-6 invariants: class sizes and orders
    d3 = group("dihedral:3")
    s3 = group("symmetric:3")
    inv = lambda g: sorted((c.size, c.element_order) for c in g.conjugacy_classes())
    assert inv(d3) == inv(s3) == [(1, 1), (2, 3), (3, 2)]


def test_frobenius_73():
    g = group("frobenius:7:3")
    assert g.order == 21 and g.exponent == 21


def test_frobenius_invalid():
    with pytest.raises(SpecError):
        build_group("frobenius:5:3")  # 5 not 1 mod 3
    with pytest.raises(SpecError):
        build_group("frobenius:9:2")  # 9 not prime


def test_order_cap():
    with pytest.raises(SpecError):
        build_group("symmetric:9")  # 362880 over the default cap


def test_class_examples():
    assert all(c.size == 1 for c in group("cyclic:5").conjugacy_classes())
    d5 = group("dihedral:5")
    assert max(c.size for c in d5.conjugacy_classes()) == 5  # reflections
    s4 = group("symmetric:4")
    assert sorted(c.size for c in s4.conjugacy_classes()) == [1, 3, 6, 6, 8]


def test_class_invariants(corpus_groups):
    for label, g in corpus_groups:
        if g.order > 200:
            continue
        classes = g.conjugacy_classes()
        assert sum(c.size for c in classes) == g.order, label
        for c in classes:
            assert c.size * len(g.centralizer(c.representative)) == g.order
        abelian = structure_flags(g)["abelian"]
        assert abelian == all(c.size == 1 for c in classes)


def test_subgroup_examples():
    assert [h.order for h in subgroups(group("cyclic:6"))[0]] == [1, 2, 3, 6]
    assert len(subgroups(group("symmetric:3"))[0]) == 4
    s4_subs, mode = subgroups(group("symmetric:4"))
    assert mode == "exhaustive" and len(s4_subs) == 11


def test_subgroups_degrade_above_cap():
    handles, mode = subgroups(group("symmetric:5"), order_cap=24)
    assert mode == "distinguished"
    assert all(120 % h.order == 0 for h in handles)


def test_subgroup_multiset_stable_under_relabeling():
    # same group, two different canonical numberings (generator orders differ)
    a = build_group("perm:(1,2);(1,2,3,4)")
    b = build_group("perm:(1,2,3,4);(3,4)")
    orders = lambda g: sorted(h.order for h in subgroups(g)[0])
    assert orders(a) == orders(b)


def test_sylow():
    s4 = group("symmetric:4")
    syl2 = sylow(s4, 2)
    assert syl2.order == 8
    sub, _ = syl2.as_group()
    assert sorted(c.size for c in sub.conjugacy_classes()) == [1, 1, 2, 2, 2]  # D4
    assert sylow(group("cyclic:12"), 3).order == 3
    with pytest.raises(ValueError):
        sylow(s4, 5)
    for p in (2, 3):
        h = sylow(s4, p)
        n, target = s4.order, 1
        while n % p == 0:
            n //= p
            target *= p
        assert h.order == target


def test_sylow_orders_across_corpus(corpus_groups):
    for label, g in corpus_groups:
        n = g.order
        p = 2
        while p * p <= n or (n > 1 and p <= n):
            if n % p == 0:
                target = 1
                while n % p == 0:
                    n //= p
                    target *= p
                assert sylow(g, p).order == target, (label, p)
            p += 1
            if n == 1:
                break


def test_symmetric_sylow_construction():
    w = group(symmetric_sylow_spec(9, 3))
    assert w.order == 81
    assert w.exponent == 9  # Z/3 wr Z/3 has elements of order 9
    flags = structure_flags(w)
    assert flags["nilpotent"] and not flags["abelian"]
    assert group(symmetric_sylow_spec(4, 2)).order == 8


def test_structure_flags():
    assert structure_flags(group("cyclic:8")) == {
        "abelian": True, "nilpotent": True, "supersolvable": True}
    d4 = structure_flags(group("dihedral:4"))
    assert d4["nilpotent"] and not d4["abelian"]
    s4 = structure_flags(group("symmetric:4"))
    assert not s4["supersolvable"]
    q8 = group(GroupSpec("cayley", table=quaternion_cayley_table()))
    assert structure_flags(q8)["nilpotent"]


def test_cayley_validation():
    bad = tuple(tuple((a + b) % 5 for b in range(5)) for a in range(5))
    ok = build_group(GroupSpec("cayley", table=bad))  # Z/5 table is fine
    assert ok.order == 5
    broken = tuple(tuple(0 for _ in range(3)) for _ in range(3))
    with pytest.raises(SpecError):
        build_group(GroupSpec("cayley", table=broken))


def test_spec_parsing():
    assert parse_spec("product:cyclic:2xcyclic:3").kind == "product"
    assert parse_spec("perm:(1,2)(3,4);(1,2,3)").kind == "perm"
    with pytest.raises(SpecError):
        parse_spec("wat:5")
    with pytest.raises(SpecError):
        parse_spec("perm:(1,1,2)")
    g = build_group("product:cyclic:2xcyclic:3")
    assert g.order == 6 and g.exponent == 6


def test_unit_group():
    ug, residues = unit_group(8)
    assert ug.order == 4 and residues[0] == 1
    assert all(ug.mul(a, a) == 0 for a in range(4))  # exponent 2
