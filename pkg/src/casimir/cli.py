"""Command-line interface: ``casimir <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import catalog
from .critical import enumerate_critical, label_for, render_table
from .ratlin import fmt
from .rootsys import DominantWeight, InvalidAlgebra, LieAlgebra, adjoint_casimir, casimir, relative_casimir


class UsageError(Exception):
    pass


def _rank_range(text: str):
    m = re.fullmatch(r"(\d+)(?:(?:\.\.|-)(\d+))?", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"rank must be N or LO..HI, got {text!r}")
    lo = int(m.group(1))
    return lo if m.group(2) is None else (lo, int(m.group(2)))


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="casimir", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("critical", help="list critical representations")
    c.add_argument("family", type=str.upper)
    c.add_argument("rank", type=_rank_range, help="rank N or range LO..HI")
    c.add_argument("--json", action="store_true")
    c.add_argument("--strict", action="store_true", help="only entries with ratio < 1")

    k = sub.add_parser("casimir", help="Casimir eigenvalue of one highest weight")
    k.add_argument("family", type=str.upper)
    k.add_argument("rank", type=int)
    k.add_argument("--weight", type=_weight, required=True, metavar="L1,...,Ln")
    k.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=("cayley", "grassmann"))
    v.add_argument("--max", type=int, default=3, dest="max_n", help="grid bound for grassmann")
    v.add_argument("--seed", type=int, default=None, help="random-sample seed (else CASIMIR_SEED)")

    s = sub.add_parser("stability", help="stability status of a symmetric space")
    s.add_argument("name", nargs="?")
    s.add_argument("--grassmann", nargs=2, type=int, metavar=("R", "S"))
    s.add_argument("--json", action="store_true")
    return p


def _cmd_critical(args, out) -> int:
    out.write(render_table(args.family, args.rank, "json" if args.json else "text", args.strict) + "\n")
    return 0


def _cmd_casimir(args, out) -> int:
    alg = LieAlgebra(args.family, args.rank)
    try:
        w = DominantWeight(alg, args.weight)
    except ValueError as e:
        raise UsageError(str(e))
    rel = relative_casimir(alg, w)
    info = {
        "algebra": str(alg),
        "lambda": list(w.lam),
        "casimir": fmt(casimir(alg, w)),
        "adjoint_casimir": fmt(adjoint_casimir(alg)),
        "relative_casimir": fmt(rel),
        "critical": rel <= 1,
        "label": label_for(w) if rel <= 1 else None,
    }
    if args.json:
        out.write(json.dumps(info, ensure_ascii=False) + "\n")
    else:
        for key, val in info.items():
            out.write(f"{key}: {val}\n")
    return 0


def _cmd_verify(args, out) -> int:
    from .verify import cayley_report, grassmann_report

    if args.suite == "cayley":
        rep = cayley_report(args.seed)
    else:
        if args.max_n < 1:
            raise UsageError("--max must be positive")
        rep = grassmann_report(args.max_n, args.seed)
    out.write(rep.render() + "\n")
    return 0 if rep.passed else 1


def _cmd_stability(args, out) -> int:
    if (args.name is None) == (args.grassmann is None):
        raise UsageError("give either a space name or --grassmann R S")
    if args.grassmann is not None:
        from .grassmann import stability_verdict, verify_witness

        r, s = args.grassmann
        if r < 1 or s < 1:
            raise UsageError("r and s must be positive")
        v = stability_verdict(r, s)
        rec = catalog.grassmann_record(r, s)
        consistent = rec.is_stable == v.stable
        if args.json:
            out.write(json.dumps(v.to_json()) + "\n")
        else:
            out.write(f"Gr_{r}(H^{r + s}): {v.verdict}\n")
            out.write(f"coefficients: F^H {fmt(v.coeff_H)}, F^E {fmt(v.coeff_E)}\n")
            out.write(f"hom dimension {v.hom_dim}, rank {v.rank}\n")
            if v.kernel_witness is not None:
                wit = " + ".join(f"{fmt(c)} {g}" for c, g in zip(v.kernel_witness, v.generators))
                out.write(f"kernel witness: {wit} (re-verified: {verify_witness(v)})\n")
            out.write(f"catalog: {rec.name} {rec.verdict} ({'consistent' if consistent else 'INCONSISTENT'})\n")
        return 0 if consistent else 1
    try:
        rec = catalog.lookup(args.name)
    except KeyError:
        raise UsageError(f"unknown space {args.name!r}; known: {', '.join(catalog.known_names())}")
    live = catalog.live_verdict(rec)
    if args.json:
        out.write(json.dumps({"name": rec.name, "verdict": rec.verdict, "source": rec.source,
                              "note": rec.note, "live": live}) + "\n")
    else:
        note = f" [{rec.note}]" if rec.note else ""
        out.write(f"{rec.name}: {rec.verdict}{note}\nsource: {rec.source}\n")
        if live is not None:
            out.write(f"recomputed: {live}\n")
    return 0 if live in (None, rec.verdict) else 1


COMMANDS = {
    "critical": _cmd_critical,
    "casimir": _cmd_casimir,
    "verify": _cmd_verify,
    "stability": _cmd_stability,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidAlgebra) as e:
        err.write(f"casimir: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())
