"""Selberg sieve objects, the divisor-count bound, and the tail sum."""

from fractions import Fraction
from math import log

import pytest

from cheblab.chartab import character_table
from cheblab.coeffs import InertiaScenario, cyclotomic_tame_scenario
from cheblab.cyclotomic import Cyclo
from cheblab.groups import unit_group
from cheblab.sieve import dirichlet_tail_check, omega_bound_check, selberg_objects
from conftest import group


def _cyclotomic_scenarios(q, z):
    ug, res = unit_group(q)
    idx = {r: i for i, r in enumerate(res)}
    out = {}
    p = 2
    while p < z:
        if all(p % k for k in range(2, p)):
            if p % q == 0:
                sc = cyclotomic_tame_scenario(q, p, ug, res)
                out[p] = InertiaScenario(sc.group, sc.decomposition, sc.inertia,
                                         sc.frobenius, norm=p)
            else:
                e = idx[p % q]
                out[p] = InertiaScenario(ug, ug.closure([e]), frozenset({0}), e,
                                         norm=p)
        p += 1
    return ug, out


def test_trivial_sieve():
    ug, scens = _cyclotomic_scenarios(5, 2)
    chi = character_table(ug).rows[1]
    inst = selberg_objects(chi, {}, 2.0)
    assert inst.divisors == [1]
    assert inst.rho[1] == Cyclo.one()


def test_linear_character_densities():
    ug, scens = _cyclotomic_scenarios(5, 12)
    chi = character_table(ug).rows[1]
    inst = selberg_objects(chi, scens, 12.0)
    for p in (2, 3, 7, 11):
        assert inst.g[p] == Cyclo.rational(Fraction(1, p))
    assert inst.g[5].is_zero()  # ramified prime drops out of the support
    assert 5 not in inst.support_primes
    assert inst.quad_value == inst.big_g.inv()


def _solve_cyclo(mat, rhs):
    """Gaussian elimination over the cyclotomic field (test-local oracle)."""
    n = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if not aug[i][c].is_zero())
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inv()
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def _bruteforce_selberg(inst):
    """Stationary point of the quadratic form under rho(1) = 1 (Lagrange)."""
    divs = inst.divisors
    n = len(divs)
    fact = {}
    for d in divs:
        fs, m = [], d
        for p in inst.support_primes:
            if m % p == 0:
                fs.append(p)
                m //= p
        fact[d] = fs
    mat = []
    for d in divs:
        row = []
        for e in divs:
            join = set(fact[d]) | set(fact[e])
            val = Cyclo.one()
            for p in join:
                val = val * inst.g[p]
            row.append(val)
        mat.append(row)
    # solve M rho = lam e1 with rho_1 = 1: [M, -e1; e1^T, 0] [rho; lam] = [0; 1]
    big = [row[:] + [Cyclo.rational(-1 if i == 0 else 0)]
           for i, row in enumerate(mat)]
    big.append([Cyclo.rational(1 if j == 0 else 0) for j in range(n)]
               + [Cyclo.zero()])
    rhs = [Cyclo.zero()] * n + [Cyclo.one()]
    sol = _solve_cyclo(big, rhs)
    rho = sol[:n]
    lam = sol[n]
    value = Cyclo.zero()
    for i in range(n):
        for j in range(n):
            value = value + rho[i] * rho[j] * mat[i][j]
    return rho, value


@pytest.mark.parametrize("q,z", [(5, 8.0), (7, 7.0), (5, 12.0)])
def test_diagonalization_matches_bruteforce(q, z):
    ug, scens = _cyclotomic_scenarios(q, z)
    table = character_table(ug)
    chi = table.rows[1]
    inst = selberg_objects(chi, scens, z)
    assert len(inst.divisors) <= 12
    rho_oracle, value_oracle = _bruteforce_selberg(inst)
    assert value_oracle == inst.quad_value
    for d, r in zip(inst.divisors, rho_oracle):
        assert inst.rho[d] == r


def test_irrational_density_instance():
    # dihedral(5) degree-2 character: g(p) lives in the real quintic field
    d5 = group("dihedral:5")
    table = character_table(d5)
    chi = [r for r in table.rows if r.degree == 2][0]
    rot = next(x for x in range(10) if d5.element_order(x) == 5)
    scens = {p: InertiaScenario(d5, d5.closure([rot]), frozenset({0}), rot, norm=p)
             for p in (2, 3)}
    inst = selberg_objects(chi, scens, 4.0)
    assert inst.g[2].m == 5  # genuinely irrational local density
    rho_oracle, value_oracle = _bruteforce_selberg(inst)
    assert value_oracle == inst.quad_value == inst.big_g.inv()
    for d, r in zip(inst.divisors, rho_oracle):
        assert inst.rho[d] == r


def test_selberg_constraints_and_guard():
    ug, scens = _cyclotomic_scenarios(5, 12)
    chi = character_table(ug).rows[1]
    inst = selberg_objects(chi, scens, 12.0)
    assert inst.rho[1] == Cyclo.one()
    for d, v in inst.rho.items():
        assert (Cyclo.one() - v).real_sign() >= 0
        assert (Cyclo.one() + v).real_sign() >= 0
        assert d in inst.divisors
    with pytest.raises(ValueError):
        selberg_objects(chi, scens, 20000.0)
    with pytest.raises(ValueError):
        selberg_objects(chi, {}, 10.0)  # missing scenarios


def test_omega_bound():
    assert omega_bound_check(2, 1.0)["ok"]
    assert omega_bound_check(10**5, 1.0)["ok"]
    out = omega_bound_check(30030, 0.25)
    assert out["ok"]  # omega(30030) = 6 <= e^5 + 0.25 log 30030
    with pytest.raises(ValueError):
        omega_bound_check(100, 0.0)


def test_dirichlet_tail_trivial_character():
    # base Q, trivial chi: the sum tends to -zeta'/zeta(2) = 0.5699... <= 1/eta
    ug, scens = _cyclotomic_scenarios(3, 2000)
    table = character_table(ug)
    triv = table.trivial
    out = dirichlet_tail_check(triv, triv, lambda p: scens.get(p), 0.999, 2000, 0.0)
    assert out["ok"]
    assert 0.5 < out["lhs"] < 0.60  # near -zeta'/zeta(2) = 0.5699


def test_dirichlet_tail_empty():
    ug, _ = _cyclotomic_scenarios(5, 2)
    table = character_table(ug)
    out = dirichlet_tail_check(table.rows[0], table.rows[1], lambda p: None,
                               0.5, 100, 2 * log(5.0))
    assert out["lhs"] == 0.0 and out["ok"]


def test_dirichlet_tail_cyclotomic5():
    ug, scens = _cyclotomic_scenarios(5, 10**4)
    table = character_table(ug)
    log_q = 2 * log(5.0)  # d = 1, max conductor norm 5
    for chi in table.rows:
        for phi in table.rows[:2]:
            out = dirichlet_tail_check(chi, phi, lambda p: scens.get(p), 0.5,
                                       10**4, log_q)
            assert out["ok"], (out["lhs"], out["rhs"])
