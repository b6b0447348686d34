"""Bound quantities for the least-prime machinery.

Everything here is a structural comparison: the absolute constants in the
underlying estimates are effectively computable but never specified, so
each report carries configurable multipliers (default 1) and a banner
saying so.  All arithmetic is done in log space; conductor norms stay big
integers until the final log.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log

from .chartab import CharacterTable, character_table, sn_degree_stats
from .groups import (ConjugacyClass, Group, GroupSpec, SubgroupHandle,
                     build_group, parse_spec, symmetric_sylow_spec)

__all__ = [
    "ConductorData",
    "BoundReport",
    "CONSTANTS_BANNER",
    "log_cap",
    "q_and_Q",
    "linnik_exponent",
    "dl_estimate",
    "nu",
    "section2_table",
]

CONSTANTS_BANNER = ("structural comparison: absolute constants are "
                    "effectively computable but unspecified; multipliers "
                    "default to 1 and outputs are not rigorous numeric bounds")


def log_cap(x: float) -> float:
    """Log x = max(1, log x), natural log."""
    return max(1.0, log(x)) if x > 0 else 1.0


@dataclass(frozen=True)
class ConductorData:
    """Arithmetic data of the base field and the conductor norms per irreducible."""

    disc_f: int                 # absolute discriminant value of the base field
    degree_f: int               # n_F
    conductor_norms: tuple[int, ...]  # aligned with the table's row order

    def __post_init__(self):
        if self.disc_f < 1 or self.degree_f < 1:
            raise ValueError("discriminant and degree must be positive")
        if any(n < 1 for n in self.conductor_norms):
            raise ValueError("conductor norms must be >= 1")


@dataclass
class BoundReport:
    d: int
    log_q: float
    log_big_q: float
    linnik_log_bound: float | None = None
    argmin: dict | None = None
    exceptional: dict | None = None
    banner: str = CONSTANTS_BANNER
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "banner": self.banner,
            "d": self.d,
            "log_q": self.log_q,
            "log_Q": self.log_big_q,
        }
        if self.linnik_log_bound is not None:
            out["linnik_log_bound"] = self.linnik_log_bound
        if self.argmin is not None:
            out["argmin"] = self.argmin
        if self.exceptional is not None:
            out["exceptional"] = self.exceptional
        out.update(self.extra)
        return out


def q_and_Q(cond: ConductorData, table: CharacterTable) -> tuple[float, float]:
    """(log q, log Q) of the extension data.

    log q = d^2 log D_F + 2 d log(max norm); log Q adds the archimedean
    factor (d^2 n_F)^(d^2 n_F LogLog d) and the |Irr(G)| multiplier.
    """
    rows = table.rows
    if len(cond.conductor_norms) != len(rows):
        raise ValueError("conductor map does not cover all irreducibles")
    triv = table.row_index(table.trivial)
    if cond.conductor_norms[triv] != 1:
        raise ValueError("the trivial character must have conductor norm 1")
    d = table.d_G
    max_norm = max(cond.conductor_norms)
    log_q = d * d * log(cond.disc_f) + 2 * d * log(max_norm)
    dd_nf = d * d * cond.degree_f
    log_big_q = (dd_nf * log_cap(log_cap(d)) * log(dd_nf)
                 + log(len(rows)) + log_q)
    return log_q, log_big_q


def linnik_exponent(g: Group, cls: ConjugacyClass, certified: list,
                    cond_per_subext: dict, c_factor: float = 1.0) -> BoundReport:
    """min over certified H meeting C of Log(d_H) * log(2 Q_{L/L^H}).

    certified holds AhcCertificate-like objects with a .subgroup handle;
    cond_per_subext maps handle.key() to the ConductorData of L/L^H.
    """
    best = None
    for cert in certified:
        handle = cert.subgroup
        if not handle.contains_class(cls):
            continue
        sub, _ = handle.as_group()
        table_h = character_table(sub)
        cond = cond_per_subext[handle.key()]
        log_q, log_big_q = q_and_Q(cond, table_h)
        value = c_factor * log_cap(table_h.d_G) * (log(2.0) + log_big_q)
        if best is None or value < best[0]:
            best = (value, handle, table_h, log_q, log_big_q)
    if best is None:
        raise ValueError("no certified subgroup meets the class")
    value, handle, table_h, log_q, log_big_q = best
    return BoundReport(
        d=table_h.d_G,
        log_q=log_q,
        log_big_q=log_big_q,
        linnik_log_bound=value,
        argmin={"subgroup_order": handle.order,
                "subgroup": sorted(handle.members),
                "d_H": table_h.d_G},
        extra={"c_factor": c_factor},
    )


def dl_estimate(disc_l: int, handle: SubgroupHandle,
                table_h: CharacterTable | None = None) -> dict:
    """Variable part of the discriminant route: (4 d_H^2/|H|) log D_L + log|Irr(H)|.

    The suppressed multiplicative constant depends on (d_H, n_{L^H}) and is
    reported as unspecified rather than guessed.
    """
    if disc_l < 1:
        raise ValueError("discriminant must be >= 1")
    if table_h is None:
        sub, _ = handle.as_group()
        table_h = character_table(sub)
    d_h = table_h.d_G
    h_order = handle.order
    value = (4.0 * d_h * d_h / h_order) * log(disc_l) + log(len(table_h.rows))
    return {
        "log_variable_part": value,
        "d_H": d_h,
        "subgroup_order": h_order,
        "irr_count": len(table_h.rows),
        "implied_constant": "unspecified (depends on d_H and the fixed-field degree)",
    }


def nu(u: float, beta1: float | None = None) -> float:
    """nu(U) = min(1, (1 - beta1) log U); 1 when no exceptional zero is supplied."""
    if u <= 1:
        raise ValueError("nu requires U > 1")
    if beta1 is None:
        return 1.0
    if not 0 < beta1 < 1:
        raise ValueError("beta1 must lie in (0, 1)")
    return min(1.0, (1.0 - beta1) * log(u))


# ---------------------------------------------------------------------------
# Families of worked comparisons
# ---------------------------------------------------------------------------

TABLE_FEASIBLE_ORDER = 128


def section2_table(family: str) -> list[dict]:
    """Comparison rows for the worked families (dihedral, pq, sn, sylow, product).

    Quantities come from actual character tables when the group is small
    enough, and from the closed forms otherwise; the provenance column
    records which.
    """
    kind, _, rest = family.partition(":")
    if kind == "dihedral":
        return _dihedral_rows(int(rest))
    if kind == "pq":
        p, q = (int(t) for t in rest.split(":"))
        return _pq_rows(p, q)
    if kind == "sn":
        parts = rest.split(":")
        n = int(parts[0])
        mu = tuple(int(t) for t in parts[1].split(",")) if len(parts) > 1 else (n,)
        return _sn_rows(n, mu)
    if kind == "sylow_s_p2":
        return _sylow_rows(int(rest))
    if kind == "product":
        return _product_rows(parse_spec(family))
    raise ValueError(f"unknown section2 family {family!r}")


def _dihedral_rows(n: int) -> list[dict]:
    if n < 3:
        raise ValueError("dihedral family needs n >= 3")
    order = 2 * n
    if order <= TABLE_FEASIBLE_ORDER:
        table = character_table(build_group(GroupSpec("dihedral", n=n)))
        d = table.d_G
        provenance = "character-table"
    else:
        d = 2
        provenance = "closed-form"
    d2logd = d * d * log_cap(d)
    refl = [n] if n % 2 else [n // 2, n // 2]
    return [{
        "family": "dihedral",
        "label": f"dihedral:{n}",
        "order": order,
        "d": d,
        "d2_log_d": d2logd,
        "class_size": c,
        "ratio": d2logd / c,
        "satisfied": d2logd < c,
        "provenance": provenance,
    } for c in refl]


def _pq_rows(p: int, q: int) -> list[dict]:
    order = p * q
    if order <= TABLE_FEASIBLE_ORDER:
        g = build_group(GroupSpec("frobenius", p=p, q=q))
        table = character_table(g)
        d = table.d_G
        csize = max(c.size for c in g.conjugacy_classes())
        provenance = "character-table"
    else:
        d = q
        csize = p
        provenance = "closed-form"
    d2logd = d * d * log_cap(d)
    return [{
        "family": "pq",
        "label": f"pq:{p}:{q}",
        "order": order,
        "d": d,
        "d2_log_d": d2logd,
        "class_size": csize,
        "ratio": d2logd / csize,
        "satisfied": d2logd < csize,
        "provenance": provenance,
    }]


def _sn_rows(n: int, mu: tuple[int, ...]) -> list[dict]:
    stats = sn_degree_stats(n, mu)
    return [{
        "family": "sn",
        "label": f"sn:{n}:mu={','.join(map(str, stats['mu']))}",
        "order": None,
        "d": stats["d"],
        "d2_log_d": stats["d2_log_d"],
        "w_mu": stats["w"],
        "class_size": stats["class_size"],
        "ratio": stats["d2_log_d"] / stats["class_size"],
        "satisfied": stats["d2_log_d"] < stats["class_size"],
        "provenance": "hook-lengths",
    }]


def _sylow_rows(p: int) -> list[dict]:
    order = p ** (p + 1)
    if order <= TABLE_FEASIBLE_ORDER:
        g = build_group(symmetric_sylow_spec(p * p, p))
        assert g.order == order
        d = character_table(g).d_G
        provenance = "character-table"
    else:
        d = p
        provenance = "closed-form"
    objective = d * d * log_cap(d) / order
    reference = 1.0 / (p * p)  # |C|/|G| for the p^2-cycles of S_(p^2)
    return [{
        "family": "sylow_s_p2",
        "label": f"sylow_s_p2:{p}",
        "order": order,
        "d": d,
        "d2_log_d": d * d * log_cap(d),
        "objective": objective,
        "reference": reference,
        "ratio": objective / reference,
        "satisfied": objective < reference,
        "provenance": provenance,
    }]


def _product_rows(spec: GroupSpec) -> list[dict]:
    assert spec.kind == "product"
    factor_ds = []
    factor_cs = []
    provenance = "character-table"
    for f in spec.factors:
        g = build_group(f)
        if g.order > TABLE_FEASIBLE_ORDER:
            raise ValueError("product factors above the table cap are unsupported")
        factor_ds.append(character_table(g).d_G)
        factor_cs.append(max(c.size for c in g.conjugacy_classes()))
    d = 1
    csize = 1
    for x in factor_ds:
        d *= x
    for x in factor_cs:
        csize *= x
    total = build_group(spec) if _product_order(spec) <= TABLE_FEASIBLE_ORDER else None
    if total is not None:
        d_check = character_table(total).d_G
        assert d_check == d, "product degree is not multiplicative (bug)"
    d2logd = d * d * log_cap(d)
    return [{
        "family": "product",
        "label": spec.label(),
        "order": _product_order(spec),
        "d": d,
        "d2_log_d": d2logd,
        "class_size": csize,
        "ratio": d2logd / csize,
        "satisfied": d2logd < csize,
        "provenance": provenance,
    }]


def _product_order(spec: GroupSpec) -> int:
    from math import factorial

    if spec.kind == "cyclic":
        return spec.n
    if spec.kind == "dihedral":
        return 2 * spec.n
    if spec.kind == "symmetric":
        return factorial(spec.n)
    if spec.kind == "frobenius":
        return spec.p * spec.q
    if spec.kind == "product":
        out = 1
        for f in spec.factors:
            out *= _product_order(f)
        return out
    return len(build_group(spec).order)
