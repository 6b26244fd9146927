"""Divergence coefficients and stability verdicts over a grid of (r, s).

Prints one JSON verdict per line and a timing summary on stderr.
"""
import argparse
import sys
import time
from dataclasses import dataclass

from casimir.grassmann import stability_verdict, verify_witness


@dataclass(frozen=True)
class GridConfig:
    max_r: int = 5
    max_s: int = 5
    check_complement: bool = False
    verify_witnesses: bool = True


def main(cfg: GridConfig) -> int:
    ok = True
    start = time.perf_counter()
    for r in range(1, cfg.max_r + 1):
        for s in range(1, cfg.max_s + 1):
            v = stability_verdict(r, s, check_complement=cfg.check_complement)
            print(v.dumps())
            if v.stable != (min(r, s) == 1):
                ok = False
            if cfg.verify_witnesses and v.kernel_witness is not None and not verify_witness(v):
                ok = False
    print(f"grid {cfg.max_r}x{cfg.max_s}: {'consistent' if ok else 'INCONSISTENT'} "
          f"in {time.perf_counter() - start:.1f} s", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-r", type=int, default=GridConfig.max_r)
    p.add_argument("--max-s", type=int, default=GridConfig.max_s)
    p.add_argument("--check-complement", action="store_true",
                   help="also assert the divergence vanishes off the H (x) E component")
    p.add_argument("--no-witness", action="store_false", dest="verify_witnesses")
    sys.exit(main(GridConfig(**vars(p.parse_args()))))
