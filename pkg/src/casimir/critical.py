"""Critical representations: dominant weights with Cas_l <= Cas_adjoint."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .ratlin import fmt
from .rootsys import (
    DominantWeight,
    InvalidAlgebra,
    LieAlgebra,
    adjoint_casimir,
    adjoint_weight,
    casimir,
    gram_data,
    relative_casimir,
)


@dataclass(frozen=True)
class CriticalEntry:
    weight: DominantWeight
    relative_casimir: Fraction
    label: str

    def __post_init__(self):
        if not 0 <= self.relative_casimir <= 1:
            raise ValueError(f"relative Casimir {self.relative_casimir} outside [0, 1]")

    def to_json(self) -> dict:
        alg = self.weight.algebra
        return {
            "family": alg.family,
            "rank": alg.rank,
            "lambda": list(self.weight.lam),
            "label": self.label,
            "relative_casimir": {
                "num": str(self.relative_casimir.numerator),
                "den": str(self.relative_casimir.denominator),
            },
        }


# Exceptional labels are keyed by Bourbaki node; the representations are named by dimension.
_EXCEPTIONAL_LABELS = {
    ("E", 6): {1: "[27]", 6: "[27]*"},
    ("E", 7): {7: "[56]"},
    ("E", 8): {},
    ("F", 4): {4: "Im 𝔸"},
    ("G", 2): {1: "Im 𝕆"},
}


def _fundamental_label(alg: LieAlgebra, r: int) -> str | None:
    n, f = alg.rank, alg.family
    if f == "A":
        rules = [(1, "V"), (n, "V*"), (2, "Λ²V"), (n - 1, "Λ²V*"), (3, "Λ³V"), (n - 2, "Λ³V*")]
    elif f == "B":
        rules = [(1, "V"), (n, "Σ"), (2, "Λ²V")]
    elif f == "C":
        rules = [(1, "V"), (2, "Λ²∘V"), (3, "Λ³∘V")]
    elif f == "D":
        rules = [(1, "V"), (n - 1, "Σ⁻"), (n, "Σ⁺"), (2, "Λ²V")]
    else:
        return _EXCEPTIONAL_LABELS[(f, n)].get(r)
    for idx, name in rules:
        if idx == r:
            return name
    return None


def label_for(w: DominantWeight) -> str:
    """Display name of a critical weight; ``"other"`` when outside the known rows."""
    alg = w.algebra
    if w.is_zero():
        return "trivial"
    if w == adjoint_weight(alg):
        return "adjoint"
    if sum(w.lam) == 1:
        name = _fundamental_label(alg, w.support()[0])
        if name is not None:
            return name
    return "other"


def candidate_weights(alg: LieAlgebra) -> Iterator[tuple[int, ...]]:
    """All l with sum_i l_i Cas(w_i) <= Cas_adjoint (the linear lower bound)."""
    n = alg.rank
    bound = adjoint_casimir(alg)
    fund = [casimir(alg, DominantWeight.fundamental(alg, r)) for r in range(1, n + 1)]
    if any(c <= 0 for c in fund):
        raise ArithmeticError(f"non-positive fundamental Casimir for {alg}")

    def rec(i: int, budget: Fraction, prefix: list[int]):
        if i == n:
            yield tuple(prefix)
            return
        k = 0
        while k * fund[i] <= budget:
            prefix.append(k)
            yield from rec(i + 1, budget - k * fund[i], prefix)
            prefix.pop()
            k += 1

    yield from rec(0, bound, [])


def enumerate_critical(alg: LieAlgebra) -> list[CriticalEntry]:
    """Critical weights sorted by (relative Casimir, lexicographic l)."""
    gram = gram_data(alg)
    adj = adjoint_casimir(alg, gram)
    out = []
    for lam in candidate_weights(alg):
        w = DominantWeight(alg, lam)
        cas = casimir(alg, w, gram)
        if cas <= adj:
            out.append(CriticalEntry(w, cas / adj, label_for(w)))
    out.sort(key=lambda e: (e.relative_casimir, e.weight.lam))
    return out


def strictly_subcritical(entries: Iterable[CriticalEntry]) -> list[CriticalEntry]:
    return [e for e in entries if e.relative_casimir < 1]


# -- rendering ---------------------------------------------------------------------

def _rank_list(family: str, rank_range) -> list[LieAlgebra]:
    if isinstance(rank_range, int):
        lo = hi = rank_range
    else:
        lo, hi = rank_range
    if lo > hi:
        raise InvalidAlgebra(f"empty rank range {lo}..{hi}")
    return [LieAlgebra(family.upper(), n) for n in range(lo, hi + 1)]


def table_rows(family: str, rank_range, strict: bool = False) -> list[CriticalEntry]:
    rows = []
    for alg in _rank_list(family, rank_range):
        entries = enumerate_critical(alg)
        rows.extend(strictly_subcritical(entries) if strict else entries)
    return rows


def render_table(family: str, rank_range, format: str = "text", strict: bool = False) -> str:
    """One row per critical entry: algebra, weight, label, relative Casimir.

    ``rank_range`` is an int or an inclusive ``(lo, hi)`` pair.  Invalid ranks
    raise :class:`InvalidAlgebra`.
    """
    rows = table_rows(family, rank_range, strict)
    if format == "json":
        return json.dumps([r.to_json() for r in rows], ensure_ascii=False, indent=2)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    cells = [("algebra", "weight", "lambda", "label", "Cas/Cas_g")]
    for r in rows:
        w = r.weight
        cells.append((str(w.algebra), w.pretty(), "(" + ",".join(map(str, w.lam)) + ")",
                      r.label, fmt(r.relative_casimir)))
    widths = [max(len(c[k]) for c in cells) for k in range(5)]
    lines = ["  ".join(c[k].ljust(widths[k]) for k in range(5)).rstrip() for c in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
