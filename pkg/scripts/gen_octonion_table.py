"""Freeze the octonion structure constants generated from the doubling formula.

Writes ``tests/data/octonion_table.json``; the tests compare the live table
against this file so that any change to the multiplication is caught.
"""
import json
from pathlib import Path

from casimir.octonion import multiplication_table

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "octonion_table.json"


def main() -> None:
    table = [[{"sign": s, "index": k} for s, k in row] for row in multiplication_table()]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"basis": "(q, 0) then (0, q) for q in 1, i, j, k", "table": table}, indent=1) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
