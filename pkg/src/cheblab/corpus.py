"""Named group corpora used by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group, GroupSpec, build_group, quaternion_cayley_table, \
    symmetric_sylow_spec

__all__ = ["Corpus", "default_corpus", "corpus_by_name"]


@dataclass
class Corpus:
    name: str
    entries: list[tuple[str, GroupSpec]]

    def groups(self, max_order: int | None = None):
        """Yield (label, Group); skips entries above max_order when given."""
        for label, spec in self.entries:
            g = build_group(spec)
            if max_order is not None and g.order > max_order:
                continue
            yield label, g


def default_corpus() -> Corpus:
    entries: list[tuple[str, GroupSpec]] = []
    for n in range(1, 25):
        entries.append((f"cyclic:{n}", GroupSpec("cyclic", n=n)))
    for n in range(3, 13):
        entries.append((f"dihedral:{n}", GroupSpec("dihedral", n=n)))
    for p, q in ((7, 3), (19, 3), (11, 5)):
        entries.append((f"frobenius:{p}:{q}", GroupSpec("frobenius", p=p, q=q)))
    for n in range(3, 7):
        entries.append((f"symmetric:{n}", GroupSpec("symmetric", n=n)))
    entries.append(("quaternion:8", GroupSpec("cayley", table=quaternion_cayley_table())))
    entries.append(("sylow3-of-s9", symmetric_sylow_spec(9, 3)))
    return Corpus("default", entries)


def corpus_by_name(name: str) -> Corpus:
    if name == "default":
        return default_corpus()
    if name == "small":
        full = default_corpus()
        return Corpus("small", [(lbl, spec) for lbl, spec in full.entries
                                if lbl.startswith(("cyclic", "dihedral", "symmetric:3",
                                                   "symmetric:4", "frobenius:7",
                                                   "quaternion"))])
    if name == "smoke":
        full = dict(default_corpus().entries)
        picks = ["cyclic:4", "cyclic:6", "dihedral:3", "dihedral:4",
                 "symmetric:3", "quaternion:8"]
        return Corpus("smoke", [(lbl, full[lbl]) for lbl in picks])
    raise ValueError(f"unknown corpus {name!r}")
