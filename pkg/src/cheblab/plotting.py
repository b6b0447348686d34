"""Matplotlib figure rendering for the report paths.

Figures are written next to the delimited output when a report command is
given a figures directory; everything uses the Agg backend so the CLI
stays headless.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["census_figure", "section2_figure", "smoothing_figure"]

_STYLE = {
    "figure.figsize": (7.0, 4.2),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
    "axes.titlesize": 11,
}


def _apply_style():
    plt.rcParams.update(_STYLE)


def census_figure(report, out_dir: str) -> str:
    """Bar chart of observed class frequencies against predicted densities."""
    _apply_style()
    labels = [str(k) for k in report.per_class]
    counts = [v["count"] for v in report.per_class.values()]
    densities = [float(v["density"]) for v in report.per_class.values()]
    total = max(1, sum(counts))
    freqs = [c / total for c in counts]
    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9.5, 4.0))
    xs = range(len(labels))
    ax0.bar(xs, freqs, width=0.6, label="observed", color="#4878a8")
    ax0.plot(xs, densities, "k_", markersize=18, label="density |C|/|G|")
    ax0.set_xticks(list(xs), labels, rotation=45)
    ax0.set_ylabel("fraction of resolved primes")
    ax0.set_title(f"{report.field}, x = {report.x}")
    ax0.legend()
    deltas = [v["delta"] if v["delta"] is not None else 0.0
              for v in report.per_class.values()]
    ax1.bar(xs, deltas, width=0.6, color="#a85848")
    ax1.set_xticks(list(xs), labels, rotation=45)
    ax1.axhline(0.0, color="k", linewidth=0.8)
    ax1.set_ylabel("relative error")
    ax1.set_title("per-class relative error")
    fig.tight_layout()
    path = os.path.join(out_dir, f"census_{_slug(report.field)}_{report.x}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def section2_figure(rows: list[dict], family: str, out_dir: str) -> str:
    """Comparison of d^2 Log d against the featured class size per row."""
    _apply_style()
    fig, ax = plt.subplots()
    labels = [r["label"] for r in rows]
    xs = range(len(rows))
    ax.bar([x - 0.18 for x in xs], [r["d2_log_d"] for r in rows], width=0.36,
           label="d^2 Log d", color="#4878a8")
    sizes = [r.get("class_size") or 1.0 / r.get("reference", 1.0) for r in rows]
    ax.bar([x + 0.18 for x in xs], sizes, width=0.36,
           label="|C| (reference)", color="#58a878")
    ax.set_xticks(list(xs), labels, rotation=20)
    ax.set_yscale("log")
    ax.set_title(f"comparison quantities: {family}")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, f"section2_{_slug(family)}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def smoothing_figure(params, weight, out_dir: str) -> str:
    """The weight profile with its plateau and support interval."""
    _apply_style()
    lo, hi = (float(b) for b in (weight.breakpoints[0], weight.breakpoints[-1]))
    pad = 0.55 * (hi - lo)
    from fractions import Fraction

    ts = [lo - pad + (hi - lo + 2 * pad) * k / 600 for k in range(601)]
    ys = [float(weight(Fraction(t))) for t in ts]
    fig, ax = plt.subplots()
    ax.plot(ts, ys, color="#4878a8")
    ax.axvspan(0.5, 1.0, color="#58a878", alpha=0.15, label="plateau [1/2, 1]")
    ax.axvline(lo, color="k", linestyle=":", linewidth=0.8)
    ax.axvline(hi, color="k", linestyle=":", linewidth=0.8, label="support ends")
    ax.set_ylim(-0.05, 1.1)
    ax.set_title(f"smoothing weight: x={params.x:g}, ell={params.ell}, eps={params.eps:g}")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, f"weight_x{params.x:g}_l{params.ell}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _slug(text: str) -> str:
    return "".join(c if c.isalnum() else "-" for c in text)
