"""Command-line front end.

Subcommands: group, ahc, bounds, census, verify, smoothing.  Output is
deterministic for a fixed configuration (stable key order, 12 significant
digits); exit status is 0 on success, 1 on verification failure, 2 on
usage errors.  CHEB_LAB_THREADS bounds the verify worker pool.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import ahc, bounds, census, smoothing, verify
from .chartab import character_table
from .corpus import corpus_by_name
from .groups import SpecError, build_group, parse_spec, structure_flags, subgroups
from .report import csv_text, json_dumps

__all__ = ["main", "RunConfig"]


@dataclass
class RunConfig:
    """Run-wide knobs: unspecified-constant multipliers, caps, output, seed."""

    constants: dict = field(default_factory=dict)  # name -> positive multiplier
    subgroup_cap: int = 512
    monomial_cap: int = 384
    census_cap: int = census.LEAST_PRIME_CAP
    output: str = "json"  # json | csv | text
    seed: int = 0

    def __post_init__(self):
        if any(v <= 0 for v in self.constants.values()):
            raise ValueError("constant overrides must be positive")
        if min(self.subgroup_cap, self.monomial_cap, self.census_cap) <= 0:
            raise ValueError("caps must be positive")

    @staticmethod
    def from_args(args) -> "RunConfig":
        constants = {}
        if getattr(args, "constants", None):
            constants = {str(k): float(v)
                         for k, v in _load_json_arg(args.constants).items()}
        return RunConfig(
            constants=constants,
            subgroup_cap=getattr(args, "subgroup_cap", 512),
            monomial_cap=getattr(args, "monomial_cap", 384),
            census_cap=getattr(args, "cap", census.LEAST_PRIME_CAP),
            output=getattr(args, "format", "json"),
            seed=getattr(args, "seed", 0),
        )


def _load_json_arg(text: str):
    if not text.startswith("@"):
        raise SystemExit(f"expected @file.json, got {text!r}")
    with open(text[1:]) as fh:
        return json.load(fh)


def _resolve_class(g, text: str):
    classes = g.conjugacy_classes()
    if text.startswith("("):
        from .groups import _parse_cycles

        perm = _parse_cycles(text)
        elems = getattr(g._b, "elements", None)
        if elems is None:
            raise SystemExit("permutation class selectors need a permutation group")
        perm = perm + tuple(range(len(perm), len(elems[0])))
        try:
            elt = g._b.index[perm]
        except KeyError:
            raise SystemExit(f"{text} is not an element of the group") from None
        return classes[g.class_of(elt)]
    idx = int(text)
    if not 0 <= idx < len(classes):
        raise SystemExit(f"class index {idx} out of range (0..{len(classes)-1})")
    return classes[idx]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_group_info(args) -> int:
    g = build_group(args.spec, order_cap=args.order_cap)
    info = {
        "spec": args.spec,
        "order": g.order,
        "exponent": g.exponent,
        "flags": structure_flags(g),
        "classes": [
            {"index": c.index, "rep": c.representative, "size": c.size,
             "element_order": c.element_order}
            for c in g.conjugacy_classes()
        ],
    }
    if args.character_table:
        info["character_table"] = character_table(g).to_json()
    print(json_dumps(info))
    return 0


def _cmd_group_subgroups(args) -> int:
    g = build_group(args.spec, order_cap=args.order_cap)
    handles, mode = subgroups(g, args.subgroup_cap)
    print(json_dumps({
        "spec": args.spec,
        "mode": mode,
        "count": len(handles),
        "subgroups": [
            {"order": h.order, "members": sorted(h.members),
             "flags": structure_flags(h)}
            for h in handles
        ],
    }))
    return 0


def _cmd_ahc_optimize(args) -> int:
    cfg = RunConfig.from_args(args)
    g = build_group(args.group)
    cls = _resolve_class(g, args.cls)
    result = ahc.best_subgroup(g, cls, assume_ahc=args.assume_ahc,
                               order_cap=cfg.subgroup_cap,
                               monomial_cap=cfg.monomial_cap)
    out = result.to_json()
    out["class"] = {"index": cls.index, "size": cls.size,
                    "element_order": cls.element_order}
    out["orbit_stabilizer_bound"] = ahc.orbit_stabilizer_bound(
        g, cls, check_exhaustive=False)["bound"]
    print(json_dumps(out))
    return 0


def _cmd_bounds_report(args) -> int:
    cfg = RunConfig.from_args(args)
    g = build_group(args.group)
    table = character_table(g)
    data = _load_json_arg(args.conductors)
    cfactor = cfg.constants.get("c", 1.0)
    cond = bounds.ConductorData(int(data["D_F"]), int(data["n_F"]),
                                tuple(int(x) for x in data["norms"]))
    log_q, log_big_q = bounds.q_and_Q(cond, table)
    report = bounds.BoundReport(d=table.d_G, log_q=log_q, log_big_q=log_big_q)
    exceptional = data.get("exceptional")
    if exceptional:
        beta1 = float(exceptional["beta1"])
        log_u = log_big_q + 0.6931471805599453
        report.exceptional = {
            "beta1": beta1,
            "chi1C": exceptional.get("chi1C", 1),
            "nu_at_2Q": min(1.0, (1.0 - beta1) * log_u),
        }
    if data.get("subextensions") and args.cls is not None:
        cls = _resolve_class(g, args.cls)
        from .groups import SubgroupHandle

        certs, cond_map = [], {}
        for sub in data["subextensions"]:
            members = frozenset(int(x) for x in sub["members"])
            handle = SubgroupHandle(g, members, tuple(sorted(members)))
            cert = ahc.certify_ahc(g, handle, cfg.monomial_cap)
            if cert.certified and handle.contains_class(cls):
                certs.append(cert)
                cond_map[handle.key()] = bounds.ConductorData(
                    int(sub["D_F"]), int(sub["n_F"]),
                    tuple(int(x) for x in sub["norms"]))
        if certs:
            lin = bounds.linnik_exponent(g, cls, certs, cond_map, cfactor)
            report.linnik_log_bound = lin.linnik_log_bound
            report.argmin = lin.argmin
            report.extra["c_factor"] = cfactor
    print(json_dumps(report))
    return 0


def _cmd_bounds_section2(args) -> int:
    rows = bounds.section2_table(args.family)
    text = csv_text(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    if args.figures:
        from .plotting import section2_figure

        os.makedirs(args.figures, exist_ok=True)
        path = section2_figure(rows, args.family, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return 0


def _parse_exceptional(text: str | None):
    if not text:
        return None
    out = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        if key == "beta1":
            out["beta1"] = float(value)
        elif key == "chi1C":
            out["chi1"] = int(value)
        else:
            raise SystemExit(f"unknown exceptional field {key!r}")
    return out


def _cmd_census_run(args) -> int:
    spec = census.parse_field(args.field)
    x = int(float(args.x))
    report = census.census(spec, x, _parse_exceptional(args.exceptional))
    rows = []
    for key, data in report.per_class.items():
        row = {"class": key}
        row.update(data)
        rows.append(row)
    if args.format == "csv":
        sys.stdout.write(csv_text(rows))
    else:
        print(json_dumps(report))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv_text(rows))
    if args.figures:
        from .plotting import census_figure

        os.makedirs(args.figures, exist_ok=True)
        path = census_figure(report, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return 0


def _cmd_census_least_prime(args) -> int:
    cfg = RunConfig.from_args(args)
    spec = census.parse_field(args.field)
    key = int(args.cls)
    p = census.least_prime(spec, key, cap=cfg.census_cap)
    print(json_dumps({"field": args.field, "class": key, "least_prime": p,
                      "found": p is not None, "cap": cfg.census_cap}))
    return 0 if p is not None else 1


def _cmd_verify_coefficients(args) -> int:
    targets = []
    if args.group:
        targets.append((args.group, build_group(args.group)))
    else:
        corpus = corpus_by_name(args.corpus)
        targets = [(lbl, g) for lbl, g in corpus.groups(max_order=args.max_order)]
    failed = False
    for label, g in targets:
        if g.order > args.max_order:
            print(f"[skip] {label}: order {g.order} above --max-order")
            continue
        r = verify.coefficient_sweep(g, args.ell_max)
        status = "ok" if r["ok"] else "FAIL"
        print(f"[{status}] {label}: {r['checks']} checks, "
              f"{r['distinct_cosets']} cosets, {r['seconds']:.2f}s")
        failed |= not r["ok"]
    return 1 if failed else 0


def _verify_group_task(label, g):
    t0 = time.time()
    results = {
        "table": verify.verify_table(g),
        "tensor": verify.verify_tensor_parts(g),
    }
    if g.order <= 24:
        results["tau"] = verify.tau_sweep(g, 2)
        results["cauchy"] = verify.cauchy_scenario_sweep(g)
    ok = all(r["ok"] for r in results.values())
    return label, ok, results, time.time() - t0


def _cmd_verify_all(args) -> int:
    corpus = corpus_by_name(args.corpus)
    pairs = list(corpus.groups())
    threads = int(os.environ.get("CHEB_LAB_THREADS", "0")) or None
    t0 = time.time()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda kv: _verify_group_task(*kv), pairs))
    failed = False
    for label, ok, details, dt in results:  # merged in task order
        status = "ok" if ok else "FAIL"
        parts = " ".join(f"{k}={'ok' if v['ok'] else 'FAIL'}"
                         for k, v in details.items())
        print(f"[{status}] {label}: {parts} ({dt:.2f}s)")
        failed |= not ok
    sweep = None
    if args.sweep_order > 0:
        for label, g in pairs:
            if g.order > args.sweep_order:
                continue
            sweep = verify.coefficient_sweep(g, 6)
            status = "ok" if sweep["ok"] else "FAIL"
            print(f"[{status}] sweep {label}: {sweep['checks']} checks")
            failed |= not sweep["ok"]
    print(f"total: {time.time() - t0:.1f}s, corpus={corpus.name}")
    return 1 if failed else 0


def _cmd_smoothing_check(args) -> int:
    params = smoothing.WeightParams(float(args.x), int(args.ell), float(args.eps))
    weight = smoothing.build_weight(params)  # asserts (i) and (ii) exactly
    rng = random.Random(args.seed)
    grid = [(rng.uniform(0.05, 2.5), rng.uniform(-50.0, 50.0))
            for _ in range(args.grid)]
    report = smoothing.verify_weight_bounds(params, grid)
    worst = 0.0
    for _ in range(20):
        z = complex(rng.uniform(-3, 3), rng.uniform(-8, 8))
        dev = abs(smoothing.laplace_by_quadrature(weight, z)
                  - smoothing.F_closed(z, params))
        worst = max(worst, dev)
    pair = smoothing.phi_pair(m_max=args.m_max)
    out = {
        "params": {"x": params.x, "ell": params.ell, "eps": params.eps},
        "support": [float(b) for b in params.support],
        "F0": report["F0"],
        "F0_in_range": report["F0_in_range"],
        "bounds_ok": report["ok"],
        "checked": report["checked"],
        "laplace_max_deviation": worst,
        "laplace_ok": worst <= 1e-8,
        "asymptotic_slack": report["asymptotic_slack"],
        "phi_pair_ok": pair["ok"],
        "failures": report["failures"][:5],
    }
    print(json_dumps(out))
    if args.figures:
        from .plotting import smoothing_figure

        os.makedirs(args.figures, exist_ok=True)
        path = smoothing_figure(params, weight, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    ok = report["ok"] and report["F0_in_range"] and worst <= 1e-8 and pair["ok"]
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cheblab",
        description="character-theoretic bound quantities, AHC subgroup "
                    "optimization, coefficient identities, and prime-splitting "
                    "censuses for concrete Galois extensions")
    sub = top.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group", help="construct groups and inspect structure")
    gsub = grp.add_subparsers(dest="sub", required=True)
    ginfo = gsub.add_parser("info")
    ginfo.add_argument("--spec", required=True)
    ginfo.add_argument("--order-cap", type=int, default=20000)
    ginfo.add_argument("--character-table", action="store_true")
    ginfo.set_defaults(handler=_cmd_group_info)
    gsubs = gsub.add_parser("subgroups")
    gsubs.add_argument("--spec", required=True)
    gsubs.add_argument("--order-cap", type=int, default=20000)
    gsubs.add_argument("--subgroup-cap", type=int, default=512)
    gsubs.set_defaults(handler=_cmd_group_subgroups)

    ahc_p = sub.add_parser("ahc", help="AHC certification and optimization")
    asub = ahc_p.add_subparsers(dest="sub", required=True)
    aopt = asub.add_parser("optimize")
    aopt.add_argument("--group", required=True)
    aopt.add_argument("--class", dest="cls", required=True,
                      help="class index or a representative permutation")
    aopt.add_argument("--assume-ahc", action="store_true")
    aopt.add_argument("--subgroup-cap", type=int, default=512)
    aopt.add_argument("--monomial-cap", type=int, default=384)
    aopt.set_defaults(handler=_cmd_ahc_optimize)

    bnd = sub.add_parser("bounds", help="bound quantities and comparison tables")
    bsub = bnd.add_subparsers(dest="sub", required=True)
    brep = bsub.add_parser("report")
    brep.add_argument("--group", required=True)
    brep.add_argument("--class", dest="cls")
    brep.add_argument("--conductors", required=True, help="@file.json")
    brep.add_argument("--constants", help="@file.json with multipliers")
    brep.add_argument("--monomial-cap", type=int, default=384)
    brep.set_defaults(handler=_cmd_bounds_report)
    bsec = bsub.add_parser("section2")
    bsec.add_argument("--family", required=True,
                      help="dihedral:n | pq:p:q | sn:n:mu | sylow_s_p2:p | product:...")
    bsec.add_argument("--out", help="CSV output path (default stdout)")
    bsec.add_argument("--figures", help="directory for rendered figures")
    bsec.set_defaults(handler=_cmd_bounds_section2)

    cen = sub.add_parser("census", help="prime-splitting censuses")
    csub = cen.add_subparsers(dest="sub", required=True)
    crun = csub.add_parser("run")
    crun.add_argument("--field", required=True)
    crun.add_argument("--x", required=True)
    crun.add_argument("--exceptional", help="beta1=0.999,chi1C=-1")
    crun.add_argument("--format", choices=("json", "csv"), default="json")
    crun.add_argument("--csv", help="also write the per-class CSV here")
    crun.add_argument("--figures", help="directory for rendered figures")
    crun.set_defaults(handler=_cmd_census_run)
    cleast = csub.add_parser("least-prime")
    cleast.add_argument("--field", required=True)
    cleast.add_argument("--class", dest="cls", required=True)
    cleast.add_argument("--cap", type=int, default=census.LEAST_PRIME_CAP)
    cleast.set_defaults(handler=_cmd_census_least_prime)

    ver = sub.add_parser("verify", help="verification suites")
    vsub = ver.add_subparsers(dest="sub", required=True)
    vcoef = vsub.add_parser("coefficients")
    vcoef.add_argument("--group")
    vcoef.add_argument("--corpus", default="default")
    vcoef.add_argument("--max-order", type=int, default=48)
    vcoef.add_argument("--ell-max", type=int, default=6)
    vcoef.set_defaults(handler=_cmd_verify_coefficients)
    vall = vsub.add_parser("all")
    vall.add_argument("--corpus", default="default")
    vall.add_argument("--sweep-order", type=int, default=24,
                      help="run the coefficient sweep on groups up to this order")
    vall.set_defaults(handler=_cmd_verify_all)

    smo = sub.add_parser("smoothing", help="smoothing kernel checks")
    ssub = smo.add_subparsers(dest="sub", required=True)
    schk = ssub.add_parser("check")
    schk.add_argument("--x", required=True)
    schk.add_argument("--ell", required=True)
    schk.add_argument("--eps", required=True)
    schk.add_argument("--grid", type=int, default=200)
    schk.add_argument("--m-max", type=int, default=4)
    schk.add_argument("--seed", type=int, default=0)
    schk.add_argument("--figures", help="directory for rendered figures")
    schk.set_defaults(handler=_cmd_smoothing_check)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
