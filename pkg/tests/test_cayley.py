import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from casimir import cayley as cy
from casimir.octonion import ONE
from casimir.ratlin import rank

frac = st.fractions(min_value=-3, max_value=3, max_denominator=3)
albert = st.lists(frac, min_size=27, max_size=27).map(cy.AlbertElement.from_coords)
spinor = st.lists(frac, min_size=16, max_size=16).map(cy.Spinor.from_coords)
vector = st.lists(frac, min_size=9, max_size=9).map(cy.VVector.from_coords)

S = cy.spinor_basis()
V = cy.vector_basis()
A = cy.albert_basis()


def test_matrix_roundtrip_and_hermitian_check():
    x = cy.random_albert(random.Random(0))
    assert cy.from_matrix(cy.to_matrix(x)) == x
    m = cy.to_matrix(x)
    m[0][1] = m[0][1] + ONE
    with pytest.raises(ValueError):
        cy.from_matrix(m)


def test_gamma_square_and_unit():
    # Gamma = diag(2, -1, -1), Gamma^2 = diag(4, 1, 1) = 2 + Gamma
    assert cy.albert_mul_split(cy.GAMMA, cy.GAMMA) == cy.AlbertElement(2, 1, cy.VVector.zero(), cy.Spinor.zero())
    for x in A:
        assert cy.albert_mul_split(cy.UNIT, x) == x


def test_split_product_equals_matrix_product_on_basis():
    for x, y in itertools.product(A, A):
        assert cy.albert_mul_split(x, y) == cy.albert_mul_matrix(x, y)


@settings(max_examples=50)
@given(albert, albert)
def test_split_product_equals_matrix_product(x, y):
    assert cy.albert_mul_split(x, y) == cy.albert_mul_matrix(x, y)


def test_matrix_square_mixed_entry():
    # the (2,1) entry of X^2 is (a1 + a2) A3 + conj(A1) conj(A2)
    rng = random.Random(5)
    x = cy.random_albert(rng)
    X = cy.to_matrix(x)
    sq = cy.matmul3(X, X)
    a1, a2 = X[0][0].re(), X[1][1].re()
    A1, A2, A3 = x.v.A1, x.sigma.alpha2, x.sigma.alpha3
    assert sq[1][0] == (a1 + a2) * A3 + A1.conj() * A2.conj()


@settings(max_examples=30)
@given(albert, albert)
def test_jordan_identity(x, y):
    m = cy.albert_mul_split
    xx = m(x, x)
    assert m(m(x, y), xx) == m(x, m(y, xx))


def test_clifford_relation_on_basis():
    for a, s in itertools.product(V, S):
        assert cy.clifford(a, cy.clifford(a, s)) == s.scale(cy.g_V(a, a))


@given(vector, spinor)
def test_clifford_relation(a, s):
    assert cy.clifford(a, cy.clifford(a, s)) == s.scale(cy.g_V(a, a))


@given(spinor)
def test_cubic_spinor_identity(s):
    assert cy.clifford(cy.diamond(s, s), s) == s.scale(cy.g_Sigma(s, s))


def test_diamond_symmetric():
    for s, t in itertools.product(S, S):
        assert cy.diamond(s, t) == cy.diamond(t, s)


@given(vector, spinor, spinor)
def test_diamond_dual_to_clifford(a, s, t):
    lhs = cy.g_V(a, cy.diamond(s, t))
    assert lhs == cy.g_Sigma(cy.clifford(a, s), t) == cy.g_Sigma(s, cy.clifford(a, t))


def test_zdia_and_dual_basis_trace():
    assert cy.zdia_sum().is_zero()
    duals = cy._sharp_duals(S)
    assert sum(cy.g_Sigma(d, s) for d, s in zip(duals, S)) == 16


def test_combs_is_eighteen():
    assert cy.combs_check() == 18
    assert cy.combs_check([cy.random_spinor(random.Random(2))]) == 18
    assert cy.combs(cy.Spinor.zero()).is_zero()


def test_scalar_factor_rejects_non_scalar():
    with pytest.raises(cy.NotScalar):
        cy.scalar_factor(S[1], S[0])


def test_derivation_on_unit_and_gamma():
    for xi in S:
        assert cy.derivation(xi, cy.UNIT) == cy.AlbertElement.zero()
        assert cy.derivation(xi, cy.GAMMA) == cy.AlbertElement(0, 0, cy.VVector.zero(), xi.scale(3))


@pytest.mark.parametrize("k", range(16))
def test_leibniz_on_basis(k):
    xi = S[k]
    m = cy.albert_mul_split
    for x, y in itertools.combinations(A, 2):
        assert cy.derivation(xi, m(x, y)) == m(cy.derivation(xi, x), y) + m(x, cy.derivation(xi, y))


def test_skew_weights_and_skewness():
    w = cy.skew_weights()
    assert w == (3, 1, 1)
    R = cy.imalbert_basis()
    for xi in S[::5]:
        for r, s in itertools.product(R, R):
            assert cy.g_R(cy.derivation_im(xi, r), s, w) + cy.g_R(r, cy.derivation_im(xi, s), w) == 0


def test_f_tensor_properties():
    R = cy.imalbert_basis()
    for r in R:
        F = cy.f_tensor(r)
        assert F.is_symmetric() and F.trace() == 0
        if r.v.is_zero():
            assert F.is_zero()


@settings(max_examples=20)
@given(st.lists(frac, min_size=26, max_size=26), spinor, spinor)
def test_f_tensor_matches_clifford_path(c, b, g):
    r = cy.ImAlbert.from_coords(c)
    F = cy.f_tensor(r)
    bc, gc = b.coords(), g.coords()
    val = sum(bc[i] * F[i, j] * gc[j] for i in range(16) for j in range(16))
    assert val == cy.g_Sigma(cy.clifford(r.v, b), g)


def test_divergence_is_nine_times_projection():
    D = cy.divergence_cayley()
    assert D.shape == (16, 26)
    # sign pinned: +9
    assert D == cy.sigma_projection().scale(9)
    assert rank(D) == 16
    assert all(D[i, j] == 0 for i in range(16) for j in range(10))


def test_divergence_basis_independent():
    # a non-orthonormal basis of Sigma gives the same map once routed through dual bases
    basis = list(S)
    basis[0] = S[0] + S[1].scale(2)
    basis[5] = S[5].scale(Fraction(1, 3)) - S[9]
    r = cy.ImAlbert.from_coords([0] * 10 + [1, 2, 0, -1] + [0] * 12)
    assert cy.divergence_image(r, basis) == cy.divergence_image(r) == r.sigma.scale(9)
