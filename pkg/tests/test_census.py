"""Prime censuses, factorization shapes, towers, zeta factorization."""

from fractions import Fraction

import mpmath
import pytest
import sympy

from cheblab.census import (base_change_check, census, cyclotomic_discriminant,
                            cyclotomic_frobenius, frobenius_cycle_type,
                            least_prime, li, parse_field, primes_up_to,
                            zeta_factorization_check)

X3_MINUS_2 = "splitting:-2,0,0,1:perm:(1,2);(1,2,3)"


def test_cycle_type_examples():
    f = (-2, 0, 0, 1)
    assert frobenius_cycle_type(f, 5) == (2, 1)
    assert frobenius_cycle_type(f, 2) == "ramified"
    assert frobenius_cycle_type(f, 3) == "ramified"
    assert frobenius_cycle_type(f, 31) == (1, 1, 1)  # 31 splits completely


def test_cycle_type_against_sympy_oracle():
    x = sympy.symbols("x")
    f = (-2, 1, 0, 0, 0, 1)  # x^5 + x - 2: has root 1, quartic cofactor
    disc = int(sympy.discriminant(sympy.Poly(x**5 + x - 2, x)))
    for p in primes_up_to(120):
        got = frobenius_cycle_type(f, p)
        if disc % p == 0:
            assert got == "ramified"
            continue
        facs = sympy.factor_list(sympy.Poly(x**5 + x - 2, x, modulus=p))[1]
        expect = tuple(sorted((g.degree() for g, m in facs for _ in range(m)),
                              reverse=True))
        assert got == expect, p


def test_cycle_type_rejects_nonmonic_and_nonsquarefree():
    with pytest.raises(ValueError):
        frobenius_cycle_type((1, 0, 2), 5)
    with pytest.raises(ValueError):
        frobenius_cycle_type((0, 0, 1), 5)  # x^2: not squarefree


def test_cyclotomic_frobenius():
    assert cyclotomic_frobenius(5, 7) == 2
    assert cyclotomic_frobenius(8, 17) == 1
    assert cyclotomic_frobenius(5, 5) == "ramified"


def test_li():
    assert li(2) == 0.0
    value = li(1e4)
    oracle = float(mpmath.li(10**4) - mpmath.li(2))
    assert abs(value - oracle) <= 1e-8 * oracle
    assert li(mpmath.e**2) > li(mpmath.e**1.5)
    with pytest.raises(ValueError):
        li(1.5)


def test_census_cyclotomic_small():
    spec = parse_field("cyclotomic:5")
    r = census(spec, 100)
    assert r.per_class[2]["count"] == 7
    assert r.ramified == [5]
    r2 = census(spec, 2, collect_records=True)
    assert r2.prime_count == 1 and r2.per_class[2]["count"] == 1
    assert r2.records[0].p == 2 and r2.records[0].class_ids == (2,)
    with pytest.raises(ValueError):
        census(spec, 1)


def test_census_partition_invariant():
    spec = parse_field(X3_MINUS_2)
    r = census(spec, 2000, collect_records=True)
    resolved = sum(v["count"] for v in r.per_class.values())
    assert resolved + r.ambiguous_count + len(r.ramified) == r.prime_count
    # cycle type of each resolved record matches its class representative
    for rec in r.records:
        if rec.status == "resolved":
            assert r.per_class[rec.class_ids[0]]["cycle_type"] == rec.cycle_type
    # residue degrees sum to the polynomial degree
    for rec in r.records:
        if rec.status != "ramified":
            assert sum(rec.cycle_type) == 3


def test_census_delta_reconstruction():
    spec = parse_field("cyclotomic:7")
    x = 5000
    r = census(spec, x)
    main = li(x)
    total = sum(float(v["density"]) * main * (1.0 + v["delta"])
                for v in r.per_class.values())
    assert abs(total - (r.prime_count - len(r.ramified))) < 1e-6


def test_census_equidistribution_trend():
    # max class deviation shrinks from x = 1e3 to x = 1e5
    for q in (5, 7, 8, 12):
        spec = parse_field(f"cyclotomic:{q}")
        devs = []
        for x in (10**3, 10**5):
            r = census(spec, x)
            resolved = sum(v["count"] for v in r.per_class.values())
            devs.append(max(abs(v["count"] / resolved - float(v["density"]))
                            for v in r.per_class.values()))
        assert devs[1] < devs[0], (q, devs)


def test_census_exceptional_form():
    spec = parse_field("cyclotomic:5")
    r = census(spec, 1000, exceptional={"beta1": 0.9, "chi1": -1})
    r0 = census(spec, 1000)
    for key in r.per_class:
        assert r.per_class[key]["delta"] < r0.per_class[key]["delta"]


def test_ambiguous_cycle_types():
    # x^4 + 1 with Galois group V4: the three involution classes share (2,2)
    spec = parse_field("splitting:1,0,0,0,1:perm:(1,2)(3,4);(1,3)(2,4)")
    r = census(spec, 500)
    assert r.ambiguous_count > 0
    assert r.ambiguous_types == [(2, 2)]


def test_least_prime_examples():
    assert least_prime(parse_field("cyclotomic:7"), 4) == 11
    assert least_prime(parse_field("cyclotomic:5"), 1) == 11
    assert least_prime(parse_field("cyclotomic:3"), 1) == 7
    assert least_prime(parse_field(X3_MINUS_2), 0) == 31  # split primes
    assert least_prime(parse_field("cyclotomic:5"), 3, cap=2) is None


def test_cyclotomic_discriminants():
    assert cyclotomic_discriminant(5) == 125
    assert cyclotomic_discriminant(7) == 7**5
    assert cyclotomic_discriminant(8) == 256
    assert cyclotomic_discriminant(9) == 3**9
    assert cyclotomic_discriminant(12) == 144
    assert cyclotomic_discriminant(15) == 1265625


def test_base_change_towers():
    for q, sub, cls in ((15, [1, 4, 7, 13], 1), (8, [1, 5], 5)):
        out = base_change_check(q, sub, cls, 10**4)
        assert out["ok"] and out["slack"] > 0
    trivial = base_change_check(5, [1, 2, 3, 4], 2, 1000)
    assert trivial["lhs"] == 0.0 and trivial["slack"] == trivial["rhs"]
    with pytest.raises(ValueError):
        base_change_check(15, [1, 4, 7, 13], 2, 100)  # class misses H


def test_zeta_factorization():
    out = zeta_factorization_check(parse_field(X3_MINUS_2), 3000)
    assert out["ok"] and out["first_mismatch"] is None
    out5 = zeta_factorization_check(parse_field("cyclotomic:5"), 1000,
                                    include_ramified=True)
    assert out5["ok"]
    with pytest.raises(ValueError):
        zeta_factorization_check(
            parse_field("splitting:1,0,0,0,1:perm:(1,2)(3,4);(1,3)(2,4)"), 100)
