import itertools
import json
from collections import Counter
from fractions import Fraction

import pytest

from casimir.critical import candidate_weights, enumerate_critical, render_table, strictly_subcritical
from casimir.rootsys import DominantWeight, InvalidAlgebra, LieAlgebra, casimir, relative_casimir
from oracles import CLASSICAL_MIN_RANK, predicted_critical, predicted_exceptional


def as_dict(entries):
    return {e.weight.lam: e.relative_casimir for e in entries}


@pytest.mark.parametrize("family", "ABCD")
def test_classical_table(family):
    for n in range(CLASSICAL_MIN_RANK[family], 13):
        assert as_dict(enumerate_critical(LieAlgebra(family, n))) == predicted_critical(family, n), (family, n)


@pytest.mark.parametrize("family,rank", [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
def test_exceptional_table(family, rank):
    assert as_dict(enumerate_critical(LieAlgebra(family, rank))) == predicted_exceptional(family, rank)


@pytest.mark.parametrize("family", "ABCD")
def test_brute_force_agrees(family):
    for n in range(CLASSICAL_MIN_RANK[family], 5):
        alg = LieAlgebra(family, n)
        brute = {}
        for lam in itertools.product(range(4), repeat=n):
            r = relative_casimir(alg, DominantWeight(alg, lam))
            if r <= 1:
                brute[lam] = r
        assert as_dict(enumerate_critical(alg)) == brute


def test_pruning_bound_tight_exactly_on_zero_and_fundamentals():
    for f in "ABCD":
        for n in range(CLASSICAL_MIN_RANK[f], 6):
            alg = LieAlgebra(f, n)
            fund = [casimir(alg, DominantWeight.fundamental(alg, r)) for r in range(1, n + 1)]
            for lam in itertools.product(range(3), repeat=n):
                bound = sum(l * c for l, c in zip(lam, fund))
                assert (casimir(alg, DominantWeight(alg, lam)) == bound) == (sum(lam) <= 1)


def test_candidates_contain_all_critical():
    alg = LieAlgebra("A", 6)
    cands = set(candidate_weights(alg))
    assert set(as_dict(enumerate_critical(alg))) <= cands


def test_labels():
    labels = {e.weight.lam: e.label for e in enumerate_critical(LieAlgebra("A", 6))}
    assert labels[(0, 0, 1, 0, 0, 0)] == "Λ³V"
    assert labels[(0, 0, 0, 1, 0, 0)] == "Λ³V*"
    assert labels[(1, 0, 0, 0, 0, 1)] == "adjoint"
    d3 = {e.weight.lam: e.label for e in enumerate_critical(LieAlgebra("D", 3))}
    assert d3 == {(0, 0, 0): "trivial", (1, 0, 0): "V", (0, 1, 0): "Σ⁻", (0, 0, 1): "Σ⁺",
                  (0, 1, 1): "adjoint"}
    b2 = {e.weight.lam: e.label for e in enumerate_critical(LieAlgebra("B", 2))}
    assert b2[(0, 1)] == "Σ" and b2[(0, 2)] == "adjoint"
    e6 = {e.weight.lam: e.label for e in enumerate_critical(LieAlgebra("E", 6))}
    assert e6[(1, 0, 0, 0, 0, 0)] == "[27]" and e6[(0, 0, 0, 0, 0, 1)] == "[27]*"


def test_sorted_and_bounded():
    for f in "ABCD":
        entries = enumerate_critical(LieAlgebra(f, 5))
        keys = [(e.relative_casimir, e.weight.lam) for e in entries]
        assert keys == sorted(keys)
        assert entries[0].relative_casimir == 0 and entries[-1].relative_casimir == 1


def test_d3_a3_ratio_multisets():
    a3 = Counter(e.relative_casimir for e in enumerate_critical(LieAlgebra("A", 3)))
    d3 = Counter(e.relative_casimir for e in enumerate_critical(LieAlgebra("D", 3)))
    assert a3 == d3


def test_strict_filter():
    entries = enumerate_critical(LieAlgebra("C", 3))
    strict = strictly_subcritical(entries)
    assert len(entries) == 5 and len(strict) == 4
    assert all(e.relative_casimir < 1 for e in strict)


def test_render_json_schema():
    rows = json.loads(render_table("C", 3, format="json"))
    assert len(rows) == 5
    assert {"num": "15", "den": "16"} in [r["relative_casimir"] for r in rows]
    assert set(rows[0]) == {"family", "rank", "lambda", "label", "relative_casimir"}


def test_render_text_has_no_decimals():
    text = render_table("B", (2, 7))
    assert "." not in text.replace("..", "")
    assert "21/40" in text


def test_render_errors():
    with pytest.raises(InvalidAlgebra):
        render_table("E", 5)
    with pytest.raises(InvalidAlgebra):
        render_table("A", (4, 2))
    with pytest.raises(ValueError):
        render_table("A", 2, format="xml")
