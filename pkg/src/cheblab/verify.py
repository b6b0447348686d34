"""Verification suites: exact table invariants and coefficient sweeps.

These are the run-anywhere checks behind `cheblab verify`: character-table
orthogonality, the tensor-constituent facts, the exhaustive nonnegativity
and Cauchy-Schwarz sweep over local scenarios, tau interpolation, and the
Cauchy identity on scenario-derived root multisets.  Each suite returns a
dict with an "ok" flag and enough detail to name the first failure.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .chartab import CharacterTable, character_table, inner_product
from .coeffs import all_scenarios, local_roots, tau, tau_by_count
from .cyclotomic import Cyclo
from .groups import Group
from .symfunc import cauchy_check

__all__ = [
    "verify_table",
    "verify_tensor_parts",
    "coefficient_sweep",
    "tau_sweep",
    "cauchy_scenario_sweep",
]


def verify_table(g: Group, table: CharacterTable | None = None) -> dict:
    """Exact row/column orthogonality, degree sum, and degree divisibility."""
    table = table or character_table(g)
    classes = g.conjugacy_classes()
    k = len(classes)
    problems = []
    if sum(r.degree**2 for r in table.rows) != g.order:
        problems.append("degree sum")
    for r in table.rows:
        if g.order % r.degree != 0:
            problems.append(f"degree {r.degree} does not divide |G|")
    for i in range(k):
        for j in range(i, k):
            ip = inner_product(table.rows[i], table.rows[j])
            if ip != (1 if i == j else 0):
                problems.append(f"row orthogonality ({i},{j}) = {ip}")
    for s in range(k):
        for t in range(s, k):
            acc = Cyclo.zero()
            for r in table.rows:
                acc = acc + r.values[s] * r.values[t].conj()
            expected = Cyclo.rational(Fraction(g.order, classes[s].size)) \
                if s == t else Cyclo.zero()
            if acc != expected:
                problems.append(f"column orthogonality ({s},{t})")
    return {"ok": not problems, "problems": problems, "classes": k,
            "order": g.order}


def verify_tensor_parts(g: Group, table: CharacterTable | None = None) -> dict:
    """The three tensor-constituent facts, for every irreducible pair.

    (1) the trivial character sits in chi (x) psi exactly when psi is the
    conjugate of chi, (2) then with multiplicity one, and (3) any chi of
    degree >= 2 has a constituent tau of chi (x) conj(chi) outside
    {chi, conj(chi), trivial} with chi a constituent of chi (x) tau but not
    the trivial character.
    """
    table = table or character_table(g)
    triv = table.trivial
    problems = []
    for chi in table.rows:
        conj_values = tuple(v.conj() for v in chi.values)
        for psi in table.rows:
            mult = inner_product(chi.tensor(psi), triv)
            expected = 1 if psi.values == conj_values else 0
            if mult != expected:
                problems.append(
                    f"<chi psi, 1> = {mult}, expected {expected} "
                    f"(deg {chi.degree} x deg {psi.degree})")
        if chi.degree >= 2:
            found = False
            chichibar = chi.tensor(chi.conj())
            for cand in table.rows:
                if cand.values in (chi.values, conj_values, triv.values):
                    continue
                if inner_product(chichibar, cand) < 1:
                    continue
                chitau = chi.tensor(cand)
                if inner_product(chitau, chi) >= 1 and inner_product(chitau, triv) == 0:
                    found = True
                    break
            if not found:
                problems.append(f"no extra constituent for degree {chi.degree}")
    return {"ok": not problems, "problems": problems}


def coefficient_sweep(g: Group, ell_max: int = 6,
                      table: CharacterTable | None = None) -> dict:
    """Exhaustive nonnegativity / Cauchy-Schwarz sweep over local scenarios.

    For every (D, I normal in D, phi) scenario up to conjugacy and every
    ell <= ell_max, checks a_(chi x conj chi)(p^ell) >= 0 and
    |a_(chi1 x chi2)|^2 <= a_(chi1 x conj chi1) a_(chi2 x conj chi2),
    in exact arithmetic via sign isolation of real cyclotomic numbers.
    """
    table = table or character_table(g)
    rows = table.rows
    k = len(rows)
    start = time.time()
    scenarios = all_scenarios(g)
    seen_cosets: dict[tuple, None] = {}
    violations = []
    checks = 0
    for sc in scenarios:
        inertia_size = len(sc.inertia)
        for ell in range(1, ell_max + 1):
            lead = g.power(sc.frobenius, ell)
            counts: dict[int, int] = {}
            for alpha in sc.inertia:
                t = g.class_of(g.mul(lead, alpha))
                counts[t] = counts.get(t, 0) + 1
            key = (inertia_size, tuple(sorted(counts.items())))
            if key in seen_cosets:
                continue
            seen_cosets[key] = None
            scale = Fraction(1, inertia_size)
            norms = []
            for i in range(k):
                acc = Cyclo.zero()
                for t, n in counts.items():
                    v = rows[i].values[t]
                    acc = acc + Cyclo.rational(n) * v * v.conj()
                norms.append(acc * Cyclo.rational(scale))
            for i, nrm in enumerate(norms):
                checks += 1
                if nrm.real_sign() < 0:
                    violations.append(("nonnegativity", i, key))
            for i in range(k):
                for j in range(i, k):
                    acc = Cyclo.zero()
                    for t, n in counts.items():
                        acc = acc + Cyclo.rational(n) * rows[i].values[t] \
                            * rows[j].values[t]
                    a_ij = acc * Cyclo.rational(scale)
                    delta = norms[i] * norms[j] - a_ij * a_ij.conj()
                    checks += 1
                    if delta.real_sign() < 0:
                        violations.append(("cauchy-schwarz", (i, j), key))
    return {
        "ok": not violations,
        "violations": violations,
        "scenarios": len(scenarios),
        "distinct_cosets": len(seen_cosets),
        "checks": checks,
        "seconds": time.time() - start,
    }


def tau_sweep(g: Group, ell_max: int = 3,
              table: CharacterTable | None = None) -> dict:
    """tau partitions unity, stays in [0,1], and matches the direct count."""
    table = table or character_table(g)
    classes = g.conjugacy_classes()
    problems = []
    scenarios = all_scenarios(g)
    for sc in scenarios:
        for ell in range(1, ell_max + 1):
            total = Fraction(0)
            for cls in classes:
                value = tau(cls, table, sc, ell)
                if not 0 <= value <= 1:
                    problems.append(("range", cls.index, value))
                if value != tau_by_count(cls, sc, ell):
                    problems.append(("mismatch", cls.index, value))
                total += value
            if total != 1:
                problems.append(("sum", ell, total))
    return {"ok": not problems, "problems": problems, "scenarios": len(scenarios)}


def cauchy_scenario_sweep(g: Group, degree_cap: int = 6,
                          table: CharacterTable | None = None) -> dict:
    """Exact Cauchy-identity check on scenario-derived local root multisets."""
    table = table or character_table(g)
    problems = []
    checked = 0
    seen = set()
    for sc in all_scenarios(g):
        if not sc.is_unramified():
            continue
        for chi in table.rows:
            roots = local_roots(chi, sc).roots
            key = tuple(sorted(r.sort_key() for r in roots))
            if key in seen:
                continue
            seen.add(key)
            ok, dev = cauchy_check(list(roots), list(roots), degree_cap)
            checked += 1
            if not ok:
                problems.append((key, dev))
    return {"ok": not problems, "problems": problems, "root_sets": checked}
