from math import factorial

import pytest
from hypothesis import given, strategies as st

from nervekit import (
    F2, Q, CarrierAssignment, CarrierError, Chain, ColouredComplex, Cover, Fp, PreconditionError,
    barycentric_subdivision, boundary, build_Ai, build_chain_map, kill_homology, nerve_chain_map,
    reduced_betti, sd_chain_map, union_nerve_witness,
)
from nervekit.complex import from_facets
from nervekit.generators import (
    circle, circle_arc_cover, coloured_octahedron, full_simplex, random_colouring, simplex_boundary,
)
from nervekit.search import random_host
from nervekit.sperner import sub_by_colours

from strategies import complexes

E = from_facets


def test_kill_examples():
    two = E([(0,), (1,)])
    out = kill_homology(two, 1, F2)
    assert out == E([(0, 1)])
    assert reduced_betti(two, F2)[0] == 1 and reduced_betti(out, F2)[0] == 0

    C = circle(3)
    assert kill_homology(C, 1, Q) == C

    circles = E([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    out = kill_homology(circles, 2, F2)
    b = reduced_betti(out, F2)
    assert (b[0], b[1], b[2]) == (0, 0, 0)


def test_kill_preconditions():
    with pytest.raises(PreconditionError):
        kill_homology(E([]), 1, F2)
    with pytest.raises(PreconditionError):
        kill_homology(circle(3), 0, F2)


@given(st.integers(0, 10**6), st.sampled_from([F2, Fp(3), Q]), st.sampled_from([1, 2]))
def test_kill_postconditions_and_idempotence(seed, F, d):
    K = random_host(seed, 8)
    out = kill_homology(K, d, F)
    before, after = reduced_betti(K, F), reduced_betti(out, F)
    assert all(after[i] == 0 for i in range(-1, d))
    assert all(after[i] == before[i] for i in range(d, max(K.dim, out.dim) + 1))
    assert K <= out and out.skeleton(d - 1).f_vector()[0] == len(K.vertices)
    assert kill_homology(out, d, F) == out


def test_chain_map_on_two_points():
    K = coloured_octahedron()
    dom = simplex_boundary(1)
    carrier = CarrierAssignment(dom, K.complex, lambda s: K.complex.induced(K.vertices_of(s)))
    f = build_chain_map(carrier, F2, 0)
    assert f.image((0,)) == Chain.simplex((0,), F2)
    assert f.image((1,)) == Chain.simplex((2,), F2)


def test_chain_map_edges_are_paths():
    K = ColouredComplex.from_classes(E([(0, 1), (1, 2), (2, 0)]), [(0,), (1,), (2,)])
    dom = simplex_boundary(2)
    carrier = CarrierAssignment(dom, K.complex, lambda s: K.complex.induced(K.vertices_of(s)))
    f = build_chain_map(carrier, Q, 1)
    assert f.commutes()
    for e in dom.simplices_of_dim(1):
        a, b = e
        assert boundary(f.image(e)) == Chain.simplex((b,), Q) - Chain.simplex((a,), Q)


def test_chain_map_needs_acyclic_carrier():
    K = E([(0,), (1,)])
    dom = E([(0, 1)])
    carrier = CarrierAssignment(dom, K, lambda s: K.induced(s))
    with pytest.raises(CarrierError) as info:
        build_chain_map(carrier, F2, 1)
    assert info.value.simplex == (0, 1)


def test_carrier_leaving_target_rejected():
    dom = E([(0,)])
    carrier = CarrierAssignment(dom, E([(1,)]), lambda s: E([(0,)]))
    with pytest.raises(CarrierError):
        build_chain_map(carrier, F2, 0)


@pytest.mark.parametrize("F", [F2, Fp(3), Q], ids=str)
def test_sd_chain_map_examples(F):
    f, sd = sd_chain_map(full_simplex(2), F)
    assert len(f.image((0, 1, 2))) == 6
    assert len(f.image((0, 1))) == 2
    assert f.image((1,)) == Chain.simplex((sd.id_of[(1,)],), F)
    assert f.commutes()


@given(complexes(max_vertices=5, max_dim=3), st.sampled_from([F2, Fp(5), Q]))
def test_sd_chain_map_term_counts(X, F):
    f, _ = sd_chain_map(X, F)
    assert f.commutes()
    for s in X.simplices:
        assert len(f.image(s)) == factorial(len(s))


def test_build_ai_examples():
    K = ColouredComplex.from_classes(E([(0, 1)]), [(0,), (1,)])
    sd = barycentric_subdivision(K.complex)
    A0 = build_Ai(K, 0, sd)
    assert A0.f_vector() == [2, 1]
    assert {sd.source[v] for v in A0.vertices} == {(0,), (0, 1)}

    T = ColouredComplex.from_classes(full_simplex(2), [(0,), (1,), (2,)])
    sd = barycentric_subdivision(T.complex)
    common = build_Ai(T, 0, sd) & build_Ai(T, 1, sd) & build_Ai(T, 2, sd)
    assert [sd.source[v] for v in common.vertices] == [(0, 1, 2)] and len(common) == 1


def test_build_ai_rejects_empty_class():
    K = ColouredComplex(E([(0, 1)]), {0: 0, 1: 0}, 1)
    with pytest.raises(PreconditionError):
        build_Ai(K, 1)


@given(st.integers(0, 10**6), st.sampled_from([F2, Q]))
def test_ai_union_has_homology_of_ks(seed, F):
    K0 = random_host(seed, 7)
    m = 1 + seed % min(3, len(K0.vertices) - 1)
    K = random_colouring(K0, m, seed)
    sd = barycentric_subdivision(K.complex)
    A = [build_Ai(K, i, sd) for i in K.colours]
    for S in K.nonempty_colour_sets():
        U = A[S[0]]
        for i in S[1:]:
            U = U | A[i]
        assert reduced_betti(U, F) == reduced_betti(sub_by_colours(K, S), F)


def test_nerve_chain_map_and_witness():
    cov = circle_arc_cover()
    f, sd = nerve_chain_map(cov, 1, Q)
    assert f.commutes() and f.is_augmentation_preserving()
    for s in f.images:
        assert f.image(s).supporting_complex() <= sd.restrict(cov.union(s))
    w = union_nerve_witness(cov, 1, Q)
    assert w.beta_nerve == 1 and w.image_rank == 1 and w.kernel_in_boundaries


def test_nerve_chain_map_needs_union_conditions():
    from nervekit.generators import cut_arc_cover

    with pytest.raises(CarrierError):
        nerve_chain_map(cut_arc_cover(), 1, F2)


@given(st.integers(0, 10**6), st.sampled_from([F2, Q]))
def test_witness_on_random_covers(seed, F):
    from nervekit import union_nerve_check
    from nervekit.generators import random_cover

    X = random_host(seed, 7)
    cov = random_cover(X, 2 + seed % 3, seed, overlap=0.6)
    for l in range(len(cov)):
        if union_nerve_check(cov, l, F).hypotheses_pass:
            w = union_nerve_witness(cov, l, F)
            assert w.kernel_in_boundaries
            # Ker φ ⊆ B_l(N) gives rank φ ≥ dim Z_l / B_l
            assert w.beta_nerve <= w.image_rank <= reduced_betti(X, F)[l]
