"""Run the Albert algebra identity suite and dump the divergence matrix."""
import argparse
import sys
from dataclasses import dataclass

from casimir.cayley import divergence_cayley
from casimir.ratlin import fmt
from casimir.verify import cayley_report


@dataclass(frozen=True)
class ReportConfig:
    seed: int | None = None
    show_matrix: bool = False


def main(cfg: ReportConfig) -> int:
    rep = cayley_report(cfg.seed)
    print(rep.render())
    if cfg.show_matrix:
        D = divergence_cayley()
        print("\ndivergence matrix (rows: Sigma coordinates, columns: abar, A0, A1, alpha2, alpha3)")
        for i in range(D.rows):
            print(" ".join(fmt(x).rjust(2) for x in D.row(i)))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--show-matrix", action="store_true")
    sys.exit(main(ReportConfig(**vars(p.parse_args()))))
