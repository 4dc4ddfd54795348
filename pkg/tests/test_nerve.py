import pytest
from hypothesis import given, strategies as st

from nervekit import (
    F2, Q, ComplexError, Cover, Fp, PreconditionError, TheoremViolation, aux_union_check,
    check_mixed_hypotheses, helly_check, helly_embedded, mixed_nerve_check, nerve,
    union_nerve_check, verify_mixed_conclusion,
)
from nervekit.complex import from_facets
from nervekit.generators import circle, circle_arc_cover, cut_arc_cover, full_simplex, path, random_cover
from nervekit.homology import reduced_betti
from nervekit.search import random_host

from strategies import complexes

E = from_facets


def test_nerve_examples():
    assert nerve(Cover.of([E([(0, 1)]), E([(1, 2)])])) == E([(0, 1)])
    assert nerve(circle_arc_cover()) == circle(3)
    A = E([(0, 1)])
    assert nerve(Cover.of([A, A])) == E([(0, 1)])


def test_nerve_rejects_empty_member():
    cov = Cover(E([(0, 1)]), (E([(0, 1)]), E([])))
    with pytest.raises(ComplexError):
        nerve(cov)


def test_cover_member_must_be_subcomplex():
    with pytest.raises(ComplexError):
        Cover(E([(0, 1)]), (E([(1, 2)]),))


def test_cover_size_cap():
    members = tuple(E([(0,)]) for _ in range(13))
    with pytest.raises(PreconditionError):
        nerve(Cover.of(members))
    assert nerve(Cover.of(members), max_members=13).dim == 12


def test_subcollections_binary_counter_order():
    cov = Cover.of([E([(0,)]), E([(1,)]), E([(2,)])])
    assert list(cov.subcollections()) == [(0,), (1,), (0, 1), (2,), (0, 2), (1, 2), (0, 1, 2)]


def test_mixed_hypotheses_on_arc_cover():
    cov = circle_arc_cover()
    inter, uni = check_mixed_hypotheses(cov, 1, 1, F2)
    assert inter.passed and uni.passed and len(uni) == 0
    inter, uni = check_mixed_hypotheses(cov, -1, 1, Q)
    assert inter.passed and uni.passed
    assert sorted(len(c.subset) for c in uni.checks) == [1, 1, 1, 2, 2, 2]


def test_disjoint_edges_l0_singletons_pass():
    host = E([(0, 1), (2, 3)])
    cov = Cover.of([E([(0, 1)]), E([(2, 3)])])
    inter, uni = check_mixed_hypotheses(cov, -1, 0, F2)
    assert uni.passed and [c.degree for c in uni.checks] == [-1, -1]
    assert verify_mixed_conclusion(cov, 0, F2).beta_nerve == 1
    assert verify_mixed_conclusion(cov, 0, F2).beta_host == 1
    assert host == cov.host


def test_mixed_parameter_and_cover_errors():
    cov = circle_arc_cover()
    with pytest.raises(PreconditionError):
        check_mixed_hypotheses(cov, 2, 1, F2)
    with pytest.raises(PreconditionError):
        check_mixed_hypotheses(cov, -2, 1, F2)
    with pytest.raises(PreconditionError):
        check_mixed_hypotheses(cov, -1, 3, F2)
    partial = Cover(circle(6), (E([(0, 1)]),))
    with pytest.raises(PreconditionError):
        check_mixed_hypotheses(partial, -1, 0, F2)
    with pytest.raises(PreconditionError):
        verify_mixed_conclusion(partial, 0, F2)


def test_conclusion_examples():
    c = verify_mixed_conclusion(circle_arc_cover(), 1, Q)
    assert (c.beta_nerve, c.beta_host, c.holds) == (1, 1, True)
    T = full_simplex(2)
    c = verify_mixed_conclusion(Cover(T, (T,)), 0, F2)
    assert (c.beta_nerve, c.beta_host, c.holds) == (0, 0, True)


def test_adversarial_cover_reports_without_raising():
    res = mixed_nerve_check(cut_arc_cover(), -1, 1, F2, strict=False)
    assert not res.hypotheses_pass and not res.holds
    assert sorted({len(c.subset) for c in res.union.failures}) == [2]
    # strict mode only raises when hypotheses pass
    mixed_nerve_check(cut_arc_cover(), -1, 1, F2)


def test_union_nerve_is_k_minus_one():
    cov = circle_arc_cover()
    a, b = union_nerve_check(cov, 1, Q), mixed_nerve_check(cov, -1, 1, Q)
    assert a.union.to_dict() == b.union.to_dict()


def test_helly_examples():
    host = path(6)
    trees = [E([(0, 1), (1, 2), (2, 3)]), E([(2, 3), (3, 4)]), E([(1, 2), (2, 3), (3, 4), (4, 5)])]
    cov = Cover(host, tuple(trees))
    res = helly_check(cov, 0, F2)
    assert res.hypotheses_pass and res.intersection_nonempty

    edges = Cover.of([E([(0, 1)]), E([(1, 2)]), E([(0, 2)])])
    res = helly_check(edges, -1, F2)
    assert not res.hypotheses_pass and not res.intersection_nonempty
    assert [len(c.subset) for c in res.union.failures] == [3]

    pts = Cover.of([E([(0,)]), E([(1,)])])
    res = helly_check(pts, -1, Q)
    assert [c.subset for c in res.union.failures] == [(0, 1)]
    assert not res.intersection_nonempty


def test_helly_parameter_range():
    single = Cover.of([E([(0,)])])
    with pytest.raises(PreconditionError):
        helly_check(single, 0, F2)
    helly_check(single, -1, F2)
    with pytest.raises(PreconditionError):
        helly_check(circle_arc_cover(), 2, F2)


def test_helly_embedded_presets():
    edges = Cover.of([E([(0, 1)]), E([(1, 2)]), E([(0, 2)])])
    res = helly_embedded(edges, 1, F2, mode="union", strict=False)
    assert res.stated.passed and not res.implied.passed
    assert not res.hypotheses_pass
    pts = [E([(i,)]) for i in range(3)]
    with pytest.raises(PreconditionError):
        helly_embedded(Cover.of(pts), 2, F2, mode="inter")
    with pytest.raises(PreconditionError):
        helly_embedded(Cover.of(pts), 1, F2, mode="sideways")


def test_aux_union_examples():
    # two edges meeting in a vertex: the union is connected
    res = aux_union_check([E([(0, 1)]), E([(1, 2)])], Q)
    assert res.hypotheses.passed and res.holds
    # three arcs of a circle: the triple intersection is empty, so the
    # β̃_{-1} condition fails and nothing is claimed
    res = aux_union_check(list(circle_arc_cover().members), Q)
    assert not res.hypotheses.passed and not res.holds


def test_nerve_vertex_count_and_closure():
    cov = random_cover(circle(7), 4, seed=3)
    N = nerve(cov)
    assert len(N.vertices) == 4 and N.is_downward_closed()


@given(st.integers(0, 10**6), st.sampled_from([F2, Fp(3), Q]))
def test_mixed_nerve_property(seed, F):
    X = random_host(seed, 8)
    cov = random_cover(X, 2 + seed % 3, seed, overlap=0.5)
    for l in range(len(cov)):
        for k in range(-1, l + 1):
            mixed_nerve_check(cov, k, l, F)


@given(st.integers(0, 10**6), st.sampled_from([F2, Q]))
def test_helly_property(seed, F):
    X = random_host(seed, 8)
    cov = random_cover(X, 2 + seed % 3, seed, overlap=0.6)
    for k in range(-1, len(cov) - 1):
        helly_check(cov, k, F)


@given(st.lists(complexes(max_vertices=5, max_dim=2), min_size=1, max_size=4), st.sampled_from([F2, Q]))
def test_aux_union_property(members, F):
    aux_union_check(members, F)
