import json
import random
from fractions import Fraction

import pytest

from casimir import grassmann as gr
from casimir.ratlin import RatMatrix


def rand_antisym(rng, n):
    x = RatMatrix(n, n, [rng.randint(-3, 3) for _ in range(n * n)])
    return x - x.T


def rand_lambda2o(rng, cfg):
    n, m = 2 * cfg.r, 2 * cfg.s
    N = n + m
    W = rand_antisym(rng, N)
    # remove the sigma-trace with a multiple of the H-symplectic bivector
    c = sum(W.entries[k] * cfg.sigma_V.entries[k] for k in range(N * N)) / 2
    omega = RatMatrix(N, N, [cfg.H.symplectic_bivector[i, j] if i < n and j < n else 0
                             for i in range(N) for j in range(N)])
    return gr.from_bivector(cfg, W - omega.scale(c / n))


def endomorphism(M, N):
    out = [[Fraction(0)] * N for _ in range(N)]
    for i, k, x in M:
        out[i][k] += x
    return RatMatrix.from_rows(out)


# -- symplectic bookkeeping ---------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_musical_isomorphisms(n):
    sp = gr.SympSpace(n)
    for v in sp.basis():
        assert sp.sharp(sp.flat(v)) == v
    assert sp.flat(sp.basis()[0])[n] == 1
    assert sp.omega.T == -sp.omega


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_pairing_antisymmetry(n):
    sp = gr.SympSpace(n)
    d = sp.dim
    left = [[sum(sp.sharp_duals[a][i] * sp.basis()[a][j] for a in range(d)) for j in range(d)] for i in range(d)]
    right = [[sum(sp.basis()[a][i] * sp.sharp_duals[a][j] for a in range(d)) for j in range(d)] for i in range(d)]
    assert left == [[-x for x in row] for row in right]
    assert sp.contraction(sp.symplectic_bivector) == d


def test_invalid_configs():
    with pytest.raises(ValueError):
        gr.GrassmannConfig(0, 2)
    with pytest.raises(ValueError):
        gr.SympSpace(0)


# -- Lambda^2_0 V and the action ----------------------------------------------------------

@pytest.mark.parametrize("rs", [(1, 1), (2, 1), (2, 3)])
def test_bivector_roundtrip(rs):
    cfg = gr.GrassmannConfig(*rs)
    rng = random.Random(sum(rs))
    for _ in range(5):
        w = rand_lambda2o(rng, cfg).validate(cfg)
        assert gr.from_bivector(cfg, gr.to_bivector(cfg, w)) == w
    basis = gr.lambda2o_basis(cfg)
    N = cfg.dim_V
    assert sum(len(v) for v in basis.values()) == N * (N - 1) // 2 - 1


def test_from_bivector_rejects_trace():
    cfg = gr.GrassmannConfig(1, 1)
    W = gr.wedge([1, 0, 0, 0], [0, 1, 0, 0])
    with pytest.raises(ValueError):
        gr.from_bivector(cfg, W)


def test_mixed_action_example():
    cfg = gr.GrassmannConfig(2, 2)
    rng = random.Random(7)
    for _ in range(10):
        h, a = ([rng.randint(-2, 2) for _ in range(4)] for _ in range(2))
        e, f = ([rng.randint(-2, 2) for _ in range(4)] for _ in range(2))
        w = gr.from_bivector(cfg, gr.wedge(cfg.embed_H(a), cfg.embed_E(f)))
        moved = gr.to_bivector(cfg, gr.sp_action(cfg, (cfg.embed_H(h), cfg.embed_E(e)), w))
        expected = gr.wedge(cfg.embed_E(e), cfg.embed_E(f)).scale(cfg.H.sigma(h, a)) + \
            gr.wedge(cfg.embed_H(a), cfg.embed_H(h)).scale(cfg.E.sigma(e, f))
        assert moved == expected


def test_action_on_zero_and_symplectic_bivector():
    cfg = gr.GrassmannConfig(2, 1)
    rng = random.Random(1)
    N = cfg.dim_V
    omega_V = RatMatrix.zeros(N, N)
    duals = gr.dual_basis(cfg.sigma_V)
    for k in range(N):
        omega_V = omega_V + gr.wedge(duals.row(k), [int(i == k) for i in range(N)])
    for _ in range(10):
        u = [rng.randint(-2, 2) for _ in range(N)]
        v = [rng.randint(-2, 2) for _ in range(N)]
        assert gr.sp_action(cfg, (u, v), gr.Lambda2oElement.zero(cfg)).is_zero()
        M = gr.action_endomorphism(cfg.sigma_V, u, v)
        assert gr.act_on_bivector(M, omega_V).is_zero()


def test_trace_projection_idempotent_and_equivariant():
    sp = gr.SympSpace(3)
    rng = random.Random(4)
    for _ in range(5):
        W = rand_antisym(rng, 6)
        P = gr.trace_free_part(sp, W)
        assert gr.trace_free_part(sp, P) == P and sp.contraction(P) == 0
        u, v = [rng.randint(-2, 2) for _ in range(6)], [rng.randint(-2, 2) for _ in range(6)]
        M = gr.action_endomorphism(sp.omega, u, v)
        assert gr.trace_free_part(sp, gr.act_on_bivector(M, W)) == gr.act_on_bivector(M, P)


# -- F^H and F^E ---------------------------------------------------------------------------

@pytest.mark.parametrize("rs", [(2, 2), (3, 2), (2, 1)])
def test_F_basic_properties(rs):
    cfg = gr.GrassmannConfig(*rs)
    rng = random.Random(11)
    assert gr.F_bivector(cfg, "H", cfg.H.symplectic_bivector).matrix.is_zero()
    assert gr.F_bivector(cfg, "E", cfg.E.symplectic_bivector).matrix.is_zero()
    for _ in range(3):
        w = rand_lambda2o(rng, cfg)
        for F in (gr.FH, gr.FE):
            form = F(cfg, w)
            assert form.matrix.is_symmetric()
            assert gr.metric_trace(cfg, form) == 0
    w = rand_lambda2o(rng, cfg)
    no_h = gr.Lambda2oElement(w.scalar, RatMatrix.zeros(2 * cfg.r, 2 * cfg.r), w.t, w.bE)
    assert gr.FH(cfg, no_h).matrix.is_zero()


def test_F_vanishes_for_rank_one_factor():
    cfg = gr.GrassmannConfig(1, 3)
    for w in (x for ws in gr.lambda2o_basis(cfg).values() for x in ws):
        assert gr.FH(cfg, w).matrix.is_zero()


@pytest.mark.parametrize("rs", [(2, 2), (2, 3), (3, 1)])
def test_contraction_closed_form(rs):
    # z -| F^H(W) = J W J z J_E + c(W)/r J z J_E for z in H (x) E written as a matrix
    cfg = gr.GrassmannConfig(*rs)
    rng = random.Random(9)
    n, m = 2 * cfg.r, 2 * cfg.s
    JH, JE = cfg.H.omega, cfg.E.omega
    for _ in range(3):
        W = rand_antisym(rng, n)
        z = RatMatrix(n, m, [rng.randint(-2, 2) for _ in range(n * m)])
        got = RatMatrix(n, m, gr.F_bivector(cfg, "H", W).contract(z.entries))
        assert got == JH @ W @ JH @ z @ JE + (JH @ z @ JE).scale(cfg.H.contraction(W) / cfg.r)


def _induced_form_action(A: RatMatrix, F: RatMatrix) -> RatMatrix:
    return -(A.T @ F + F @ A)


def _kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return RatMatrix(a.rows * b.rows, a.cols * b.cols,
                     [a[i, k] * b[j, l] for i in range(a.rows) for j in range(b.rows)
                      for k in range(a.cols) for l in range(b.cols)])


@pytest.mark.parametrize("which", ["H", "E"])
def test_equivariance_under_sp_r_times_sp_s(which):
    cfg = gr.GrassmannConfig(2, 2)
    rng = random.Random(21)
    n = 4
    I = RatMatrix.identity(n)
    for factor in ("H", "E"):
        for _ in range(3):
            u, v = [rng.randint(-2, 2) for _ in range(n)], [rng.randint(-2, 2) for _ in range(n)]
            sp = cfg.H if factor == "H" else cfg.E
            M = endomorphism(gr.action_endomorphism(sp.omega, u, v), n)
            A = _kron(M, I) if factor == "H" else _kron(I, M)
            X = (cfg.embed_H(u), cfg.embed_H(v)) if factor == "H" else (cfg.embed_E(u), cfg.embed_E(v))
            w = rand_lambda2o(rng, cfg)
            F = gr.FH if which == "H" else gr.FE
            assert F(cfg, gr.sp_action(cfg, X, w)).matrix == _induced_form_action(A, F(cfg, w).matrix)


# -- divergence ------------------------------------------------------------------------------

@pytest.mark.parametrize("rs", [(1, 2), (2, 2), (2, 1)])
def test_fast_assembly_matches_reference_path(rs):
    cfg = gr.GrassmannConfig(*rs)
    for ws in gr.lambda2o_basis(cfg).values():
        for w in ws:
            for which in "HE":
                assert gr.divergence_covector(cfg, which, w) == gr.divergence_covector_slow(cfg, which, w)


@pytest.mark.parametrize("r,s,which,expected", [
    (2, 2, "H", Fraction(-5, 2)),
    (1, 2, "H", Fraction(0)),
    (2, 3, "E", Fraction(14, 3)),
    (3, 2, "H", Fraction(-14, 3)),
])
def test_divergence_coefficient_examples(r, s, which, expected):
    assert gr.divergence_coefficient(gr.GrassmannConfig(r, s), which) == expected


def test_divergence_coefficients_match_closed_form_on_grid():
    for r in range(1, 4):
        for s in range(1, 4):
            cfg = gr.GrassmannConfig(r, s)
            for which in "HE":
                assert gr.divergence_coefficient(cfg, which) == gr.closed_form_coefficient(cfg, which)


@pytest.mark.parametrize("rs", [(1, 1), (2, 2), (2, 3)])
def test_replacement_sum_is_inverse_metric(rs):
    from casimir.verify import replacement_identity

    assert replacement_identity(gr.GrassmannConfig(*rs))


def test_verdict_examples():
    assert gr.stability_verdict(1, 2).verdict == "stable"
    assert gr.stability_verdict(1, 1).verdict == "stable"
    v = gr.stability_verdict(2, 2)
    assert v.verdict == "unstable" and v.kernel_witness == (1, 1)
    assert gr.verify_witness(v)


def test_witness_for_unequal_parameters():
    # x F^H + y F^E with x = r(s-1)(2s+1), y = s(r-1)(2r+1) up to scale
    for r, s in [(2, 3), (3, 2), (2, 4)]:
        v = gr.stability_verdict(r, s)
        x, y = r * (s - 1) * (2 * s + 1), s * (r - 1) * (2 * r + 1)
        assert v.kernel_witness[0] * y == v.kernel_witness[1] * x
        assert gr.verify_witness(v)


def test_non_witness_does_not_vanish():
    v = gr.stability_verdict(2, 3)
    bad = gr.StabilityVerdict(2, 3, v.coeff_H, v.coeff_E, 2, 1, "unstable", (1, 1), v.generators)
    assert not gr.verify_witness(bad)


def test_verdict_boundary_grid_to_five():
    for r in range(1, 6):
        for s in range(1, 6):
            v = gr.stability_verdict(r, s, check_complement=False)
            assert v.stable == (min(r, s) == 1), (r, s)
            assert v.rank == min(1, v.hom_dim)


def test_verdict_json_schema():
    data = json.loads(gr.stability_verdict(2, 3).dumps())
    assert set(data) == {"r", "s", "coeff_H", "coeff_E", "hom_dim", "rank", "verdict", "kernel_witness"}
    assert data["coeff_E"] == "14/3" and data["kernel_witness"] == ["28", "15"]
    assert json.loads(gr.stability_verdict(1, 3).dumps())["kernel_witness"] is None
