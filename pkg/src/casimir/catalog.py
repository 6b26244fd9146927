"""Stability status of irreducible compact symmetric spaces.

Most verdicts are imported facts (tagged with their source).  The records
flagged ``decided-here-*`` are the ones this package certifies by computation:
the Cayley plane through :mod:`casimir.cayley` and the quaternionic
Grassmannians through :mod:`casimir.grassmann`.
"""
from __future__ import annotations

from dataclasses import dataclass

VERDICTS = ("stable", "unstable", "deformations", "decided-here-stable", "decided-here-unstable")


@dataclass(frozen=True)
class SymmetricSpaceRecord:
    name: str
    family: str
    verdict: str
    source: str
    aliases: tuple[str, ...] = ()
    grassmann: tuple[int, int] | None = None  # representative (r, s) for live checks
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def decided_here(self) -> bool:
        return self.verdict.startswith("decided-here")

    @property
    def is_stable(self) -> bool:
        return self.verdict in ("stable", "decided-here-stable")


_KOISO = "Koiso 1980/1982"

CATALOG: tuple[SymmetricSpaceRecord, ...] = (
    SymmetricSpaceRecord("SU(n)", "SU(n)", "deformations", _KOISO, note="n >= 3"),
    SymmetricSpaceRecord("SU(n)/SO(n)", "SU(n)/SO(n)", "deformations", _KOISO, note="n >= 3"),
    SymmetricSpaceRecord("SU(2n)/Sp(n)", "SU(2n)/Sp(n)", "deformations", _KOISO, note="n >= 3"),
    SymmetricSpaceRecord("Gr_r(C^{r+s})", "GrC", "deformations", _KOISO, ("GrC",), note="r, s >= 2"),
    SymmetricSpaceRecord("E6/F4", "E6/F4", "deformations", _KOISO),
    SymmetricSpaceRecord("Sp(r)", "Sp(r)", "unstable", _KOISO, note="r >= 2"),
    SymmetricSpaceRecord("Sp(n)/U(n)", "Sp(n)/U(n)", "unstable", _KOISO, note="n >= 3"),
    SymmetricSpaceRecord("Gr2or(R^5)", "Gr2or(R5)", "unstable", "Gasqui-Goldschmidt 1996",
                         ("SO(5)/SO(3)xSO(2)", "Gr2or(R5)")),
    SymmetricSpaceRecord("OP2", "OP2", "decided-here-stable", "casimir.cayley",
                         ("F4/Spin(9)", "OP^2", "Cayley plane")),
    SymmetricSpaceRecord("HP2", "GrH", "decided-here-stable", "casimir.grassmann",
                         ("HP^2", "Gr_1(H^3)"), grassmann=(1, 2)),
    SymmetricSpaceRecord("S4", "GrH", "decided-here-stable", "casimir.grassmann",
                         ("HP1", "HP^1", "Gr_1(H^2)"), grassmann=(1, 1)),
    SymmetricSpaceRecord("Gr_r(H^{r+s})", "GrH", "decided-here-unstable", "casimir.grassmann",
                         ("GrH", "Sp(r+s)/Sp(r)xSp(s)"), grassmann=(2, 2), note="r, s >= 2"),
)


def _norm(s: str) -> str:
    return "".join(s.lower().split())


def known_names() -> list[str]:
    return [rec.name for rec in CATALOG]


def lookup(name: str) -> SymmetricSpaceRecord:
    key = _norm(name)
    for rec in CATALOG:
        if key in {_norm(n) for n in (rec.name, *rec.aliases)}:
            return rec
    raise KeyError(name)


def live_verdict(rec: SymmetricSpaceRecord) -> str | None:
    """Recompute the verdict of a record this package decides; ``None`` for imported ones."""
    if not rec.decided_here:
        return None
    if rec.grassmann is not None:
        from .grassmann import stability_verdict

        v = stability_verdict(*rec.grassmann)
    else:
        from .cayley import divergence_cayley
        from .ratlin import rank

        v = "stable" if rank(divergence_cayley()) == 16 else "unstable"
        return "decided-here-" + v
    return "decided-here-" + v.verdict


def grassmann_record(r: int, s: int) -> SymmetricSpaceRecord:
    """Catalog record covering ``Gr_r(H^{r+s})``."""
    if min(r, s) >= 2:
        return lookup("Gr_r(H^{r+s})")
    if (r, s) in ((1, 1),):
        return lookup("S4")
    if sorted((r, s)) == [1, 2]:
        return lookup("HP2")
    return SymmetricSpaceRecord(f"Gr_{r}(H^{r + s})", "GrH", "decided-here-stable", "casimir.grassmann",
                                grassmann=(r, s), note="quaternionic projective space")
