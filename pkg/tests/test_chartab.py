"""Character tables: construction, orthogonality, induction, degree stats."""

from fractions import Fraction

import pytest

from cheblab.chartab import (character_table, induce, inner_product, restrict,
                             sn_degree_stats, tensor_decompose)
from cheblab.cyclotomic import Cyclo
from cheblab.groups import subgroups
from cheblab.symfunc import hook_degree, partitions_of
from conftest import group


def test_cyclic4_values():
    t = character_table(group("cyclic:4"))
    assert t.degrees() == [1, 1, 1, 1]
    i = Cyclo.root_of_unity(4)
    values = {tuple(r.values) for r in t.rows}
    # the generator's column runs over all 4th roots of unity
    gen_col = sorted((r.values[t.group.class_of(1)] for r in t.rows),
                     key=lambda v: v.sort_key())
    expected = sorted([Cyclo.one(), Cyclo.rational(-1), i, i**3],
                      key=lambda v: v.sort_key())
    assert gen_col == expected


def test_s5_degrees_match_hooks():
    t = character_table(group("symmetric:5"))
    hooks = sorted(hook_degree(mu) for mu in partitions_of(5))
    assert t.degrees() == hooks == [1, 1, 4, 4, 5, 5, 6]
    assert t.d_G == 6


def test_frobenius_degrees():
    t = character_table(group("frobenius:7:3"))
    assert t.degrees() == [1, 1, 1, 3, 3]
    assert t.d_G == 3  # = q


def test_inner_products(s3_table):
    triv = s3_table.trivial
    assert inner_product(triv, triv) == 1
    rows = s3_table.rows
    for i in range(3):
        for j in range(3):
            assert inner_product(rows[i], rows[j]) == (1 if i == j else 0)
    std = [r for r in rows if r.degree == 2][0]
    assert inner_product(std.tensor(std), std) == 1


def test_inner_product_group_mismatch(s3_table, s4_table):
    with pytest.raises(ValueError):
        inner_product(s3_table.rows[0], s4_table.rows[0])


def test_tensor_decompose(s3_table):
    std = [r for r in s3_table.rows if r.degree == 2][0]
    triv = s3_table.trivial
    assert tensor_decompose(std, triv) == [(std, 1)]
    parts = tensor_decompose(std, std)
    assert sorted(r.degree for r, m in parts for _ in range(m)) == [1, 1, 2]
    # chi (x) conj(chi) contains the trivial character exactly once
    assert any(r.values == triv.values and m == 1 for r, m in parts)


def test_induce_restrict(s3, s3_table):
    handles, _ = subgroups(s3)
    a3 = [h for h in handles if h.order == 3][0]
    sub, _ = a3.as_group()
    sub_table = character_table(sub)
    nontriv = [r for r in sub_table.rows
               if r.degree == 1 and r.values != sub_table.trivial.values][0]
    ind = induce(a3, nontriv, s3)
    std = [r for r in s3_table.rows if r.degree == 2][0]
    assert ind.values == std.values
    # Frobenius reciprocity, exactly
    assert inner_product(ind, std) == inner_product(nontriv, restrict(std, a3))
    # regular character from the trivial subgroup
    triv_sub = [h for h in handles if h.order == 1][0]
    sub1, _ = triv_sub.as_group()
    reg = induce(triv_sub, character_table(sub1).rows[0], s3)
    assert reg.values[0] == Cyclo.rational(6)
    assert all(v.is_zero() for v in reg.values[1:])
    for row in s3_table.rows:
        assert inner_product(reg, row) == row.degree
    # restriction of the trivial character is trivial
    res = restrict(s3_table.trivial, a3)
    assert all(v == Cyclo.one() for v in res.values)


def test_reciprocity_random_pairs(s4, s4_table):
    handles, _ = subgroups(s4)
    for h in handles:
        if h.order in (1, 24):
            continue
        sub, _ = h.as_group()
        for lam in character_table(sub).rows:
            ind = induce(h, lam, s4)
            for chi in s4_table.rows:
                assert inner_product(ind, chi) == inner_product(lam, restrict(chi, h))


def test_sn_degree_stats():
    assert sn_degree_stats(4)["d"] == 3
    st5 = sn_degree_stats(5, (5,))
    assert st5["w"] == 5 and st5["class_size"] == 24
    st7 = sn_degree_stats(7, (4, 3))
    assert st7["w"] == 12 == (7 * 7 - 1) // 4
    with pytest.raises(ValueError):
        sn_degree_stats(41)
    with pytest.raises(ValueError):
        sn_degree_stats(5, (3, 3))


def test_quaternion_table():
    from cheblab.groups import GroupSpec, quaternion_cayley_table

    q8 = group(GroupSpec("cayley", table=quaternion_cayley_table()))
    t = character_table(q8)
    assert t.degrees() == [1, 1, 1, 1, 2]


def test_table_export(s3, s3_table):
    data = s3_table.to_json()
    assert len(data["classes"]) == 3
    assert [row["degree"] for row in data["irreducibles"]] == [1, 1, 2]
    assert all("conductor" in v for row in data["irreducibles"]
               for v in row["values"])
