"""Print the critical-representation tables for every family.

    python scripts/render_tables.py --max-rank 8 --json > tables.json
"""
import argparse
import json
from dataclasses import dataclass

from casimir.critical import render_table

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
EXCEPTIONAL = [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@dataclass(frozen=True)
class TableConfig:
    max_rank: int = 8
    strict: bool = False
    as_json: bool = False


def main(cfg: TableConfig) -> None:
    if cfg.as_json:
        out = {}
        for f, lo in MIN_RANK.items():
            out[f] = json.loads(render_table(f, (lo, cfg.max_rank), "json", cfg.strict))
        for f, n in EXCEPTIONAL:
            out[f"{f}{n}"] = json.loads(render_table(f, n, "json", cfg.strict))
        print(json.dumps(out, ensure_ascii=False, indent=1))
        return
    for f, lo in MIN_RANK.items():
        print(render_table(f, (lo, cfg.max_rank), strict=cfg.strict), end="\n\n")
    for f, n in EXCEPTIONAL:
        print(render_table(f, n, strict=cfg.strict), end="\n\n")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-rank", type=int, default=TableConfig.max_rank)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--json", action="store_true", dest="as_json")
    main(TableConfig(**vars(p.parse_args())))
