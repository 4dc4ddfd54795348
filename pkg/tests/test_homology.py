import pytest
from hypothesis import given, strategies as st

from nervekit import (
    F2, Q, Chain, ComplexError, DimensionError, Field, Fp, NotACycleError, PreconditionError,
    SimplicialComplex, boundary, boundary_matrix, fill, fundamental_class, reduced_betti,
)
from nervekit.complex import from_facets
from nervekit.generators import (
    circle, full_simplex, grid_torus, octahedron, random_complex, rp2_6, simplex_boundary, torus7,
)
from nervekit.homology import is_boundary, is_cycle, orient

from oracle import oracle_betti
from strategies import FIELD_NAMES, complexes

FIELDS = [F2, Fp(3), Fp(5), Q]


def _p(F):
    return None if F == Q else F.p


def test_boundary_of_triangle():
    d = boundary(Chain.simplex((0, 1, 2), Q))
    assert d.items() == [((0, 1), 1), ((0, 2), -1), ((1, 2), 1)]
    assert boundary(d) == Chain.zero(0, Q)


def test_boundary_of_square_cancels_diagonal():
    c = Chain.simplex((0, 1, 2), F2) + Chain.simplex((0, 2, 3), F2)
    assert boundary(c).support == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_augmented_boundary_of_points():
    c = Chain.simplex((0,), Q) + Chain.simplex((1,), Q).scale(2)
    assert boundary(c) == Chain(-1, {(): 3}, Q)
    assert boundary(c, augmented=False).is_zero()
    with pytest.raises(DimensionError):
        boundary(Chain(-1, {(): 1}, Q))


def test_orientation():
    assert orient((2, 0, 1)) == ((0, 1, 2), 1)
    assert orient((1, 0)) == ((0, 1), -1)
    assert orient((1, 1)) == (None, 0)
    assert Chain.simplex((1, 0), Q) == Chain.simplex((0, 1), Q).scale(-1)
    with pytest.raises(ComplexError):
        Chain.simplex((3, 3), Q)


def test_push_forward_kills_degenerate():
    c = Chain.simplex((0, 1, 2), Q)
    assert c.push_forward({0: 5, 1: 5, 2: 6}).is_zero()
    assert c.push_forward({0: 2, 1: 1, 2: 0}) == Chain.simplex((0, 1, 2), Q).scale(-1)


def test_boundary_matrix_examples():
    M = boundary_matrix(circle(3), 1, F2)
    assert (M.rows, M.cols) == (3, 3)
    assert all(sum(1 for (r, c) in M.entries if c == j) == 2 for j in range(3))
    pts = from_facets([(0,), (1,), (2,), (3,)])
    A = boundary_matrix(pts, 0, Q, augmented=True)
    assert A.to_dense() == [[1, 1, 1, 1]]
    assert boundary_matrix(pts, 0, Q).rows == 0
    T = boundary_matrix(full_simplex(2), 2, Q)
    assert (T.rows, T.cols) == (3, 1)
    with pytest.raises(DimensionError):
        boundary_matrix(circle(3), 2, Q)


def test_betti_examples():
    b = reduced_betti(circle(3), Q)
    assert (b[0], b[1]) == (0, 1)
    r_f2, r_q = reduced_betti(rp2_6(), F2), reduced_betti(rp2_6(), Q)
    assert (r_f2[1], r_f2[2]) == (1, 1)
    assert (r_q[1], r_q[2]) == (0, 0)
    t = reduced_betti(torus7(), F2)
    assert (t[1], t[2]) == (2, 1)


def test_empty_complex_convention():
    assert reduced_betti(SimplicialComplex.empty(), Q)[-1] == 1
    assert reduced_betti(from_facets([(0,)]), Q)[-1] == 0


@pytest.mark.parametrize("make", [circle, lambda: simplex_boundary(3), torus7, rp2_6, octahedron,
                                  lambda: grid_torus(3, 4), lambda: full_simplex(3)])
@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_fixtures_match_snf_oracle(make, F):
    X = make()
    want = oracle_betti(X.facets, _p(F))
    got = reduced_betti(X, F)
    assert [got[d] for d in range(-1, X.dim + 1)] == want


@pytest.mark.parametrize("seed", range(200))
def test_random_complexes_match_snf_oracle(seed):
    n = 4 + seed % 5
    X = random_complex(n, 1 + seed % 2, 0.3 + 0.1 * (seed % 4), seed)
    F = FIELDS[seed % 4]
    got = reduced_betti(X, F)
    assert [got[d] for d in range(-1, X.dim + 1)] == oracle_betti(X.facets, _p(F))


def test_betti_vector_equality_ignores_trailing_zeros():
    from nervekit.homology import BettiVector

    assert BettiVector((0, 1)) == BettiVector((0, 1, 0, 0))
    assert hash(BettiVector((0, 1))) == hash(BettiVector((0, 1, 0)))
    assert BettiVector((0, 1)) != BettiVector((0, 0, 1))


def test_fill_examples():
    T = full_simplex(2)
    z = boundary(Chain.simplex((0, 1, 2), Q))
    assert fill(T, z) == Chain.simplex((0, 1, 2), Q)
    C = circle(3)
    cyc = Chain.simplex((0, 1), Q) + Chain.simplex((1, 2), Q) - Chain.simplex((0, 2), Q)
    assert is_cycle(cyc)
    assert fill(C, cyc) is None
    assert fill(C, Chain.zero(1, Q)) == Chain.zero(2, Q)
    with pytest.raises(NotACycleError):
        fill(C, Chain.simplex((0, 1), Q))


def test_fill_in_degree_minus_one():
    # an augmentation-one (-1)-chain bounds a single vertex
    c = fill(from_facets([(3, 4)]), Chain(-1, {(): 1}, Q))
    assert c is not None and boundary(c) == Chain(-1, {(): 1}, Q)
    assert fill(SimplicialComplex.empty(), Chain(-1, {(): 1}, Q)) is None


def test_fundamental_class_examples():
    z = fundamental_class(simplex_boundary(3), Q)
    assert len(z) == 4 and boundary(z).is_zero()
    assert sorted({abs(v) for v in z.terms.values()}) == [1]
    zt = fundamental_class(torus7(), F2)
    assert len(zt) == 14 and set(zt.terms.values()) == {1} and boundary(zt).is_zero()
    assert fundamental_class(rp2_6(), Q) is None
    assert fundamental_class(rp2_6(), F2) is not None
    with pytest.raises(PreconditionError):
        fundamental_class(from_facets([(0, 1), (1, 2)]), Q)


@given(complexes(max_vertices=6), st.sampled_from(FIELD_NAMES), st.data())
def test_boundary_squared_is_zero(X, fname, data):
    F = Field.parse(fname)
    dim = data.draw(st.integers(0, X.dim))
    simps = X.simplices_of_dim(dim)
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(simps), max_size=len(simps)))
    c = Chain(dim, dict(zip(simps, coeffs)), F)
    if dim >= 1:
        assert boundary(boundary(c)).is_zero()


@given(complexes(max_vertices=7), st.sampled_from(FIELD_NAMES))
def test_reduced_euler_poincare(X, fname):
    b = reduced_betti(X, Field.parse(fname))
    assert b.euler() == X.euler_characteristic() - 1


@given(complexes(max_vertices=6), st.sampled_from(FIELD_NAMES), st.data())
def test_fill_of_boundary(X, fname, data):
    F = Field.parse(fname)
    dim = data.draw(st.integers(0, X.dim))
    simps = X.simplices_of_dim(dim)
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=len(simps), max_size=len(simps)))
    c = Chain(dim, dict(zip(simps, coeffs)), F)
    z = boundary(c)
    out = fill(X, z)
    assert out is not None and boundary(out) == z
    assert is_boundary(X, z)


@given(complexes(max_vertices=6), st.sampled_from(FIELD_NAMES))
def test_cones_are_acyclic(X, fname):
    assert reduced_betti(X.cone(99), Field.parse(fname)).is_acyclic()
