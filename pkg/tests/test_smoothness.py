import pytest
from hypothesis import assume, given

from conftest import brute, random_lattices
from oracle import face_filter, sympy_smooth
from hibitoric.cone import face_generators
from hibitoric.errors import BadParameters, NotEmbedded, SizeLimitExceeded
from hibitoric.grassmann import counterexample_lattice, idn, singular_window, window_indices
from hibitoric.harness import conjecture_harness, h_isomorphic
from hibitoric.cone import h_poset
from hibitoric.lattice import chain, diamond
from hibitoric.smoothness import (
    Status,
    gl_criterion,
    is_smooth_face,
    shortest_cycle,
    singular_locus_idn,
    windows_containing,
)


def test_torus_point_is_smooth():
    L = idn(2, 4)
    v = is_smooth_face(L, L.elements)
    assert v.smooth and v.replay()


def test_window_face_dependency():
    L = idn(2, 4)
    v = is_smooth_face(L, [(1, 2), (3, 4)])
    assert v.status is Status.SINGULAR
    dep = {g.label(): c for c, g in v.dependency}
    # (e_mu - e_A) - (e_mu - e_B) + (e_A - e_C) - (e_B - e_C) = 0 with mu=13, A=23, B=14, C=34
    assert dep == {"e_13 - e_23": -1, "e_13 - e_14": 1, "e_23 - e_34": -1, "e_14 - e_34": 1}
    assert v.replay() and not v.pruning_fired


def test_counterexample_face():
    C = counterexample_lattice()
    v = is_smooth_face(C, [(1, 5, 6)])
    assert v.status is Status.SINGULAR
    assert len(v.generators) == 6 and v.rank == 5
    assert gl_criterion(C, [(1, 5, 6)])


def test_gl_criterion_on_window():
    L = idn(2, 4)
    assert not gl_criterion(L, [(1, 2), (3, 4)])
    assert gl_criterion(L, L.elements)
    with pytest.raises(NotEmbedded):
        gl_criterion(L, [(1, 4), (2, 3)])


def test_not_embedded():
    with pytest.raises(NotEmbedded):
        is_smooth_face(idn(2, 4), [(2, 3), (1, 4)])


@pytest.mark.parametrize("d,n,count", [(2, 4, 1), (2, 5, 2), (3, 7, 6), (3, 6, 4)])
def test_window_records(d, n, count):
    rep = singular_locus_idn(d, n)
    assert len(rep.windows) == count
    for w in rep.windows:
        assert w.matches_diamond
        assert w.geometry.face_dim == 3
        assert w.geometry.ambient_dim - w.geometry.orbit_dim == 3
        assert w.verdict.status is Status.SINGULAR
        assert w.multiplicity == 2
    assert rep.purity and rep.ok


def test_singular_locus_guards():
    with pytest.raises(BadParameters):
        singular_locus_idn(4, 3)
    with pytest.raises(BadParameters):
        singular_locus_idn(5, 20)
    with pytest.raises(SizeLimitExceeded):
        singular_locus_idn(3, 7, exhaustive=True)


def test_exhaustive_scan_small():
    ex = singular_locus_idn(2, 5, exhaustive=True).exhaustive
    assert ex.faces == 208 and ex.singular == 28
    assert ex.disagreements == 0 and ex.maximal_are_windows


def test_windows_containing():
    L = idn(2, 5)
    assert windows_containing(L, [(1, 2)]) == [(1, 1), (2, 1)]
    assert windows_containing(L, [(1, 2), (3, 4), (3, 5), (4, 5)]) == [(1, 1)]
    assert windows_containing(L, L.elements) == []
    with pytest.raises(BadParameters):
        windows_containing(diamond(), [])


def test_shortest_cycle_none_for_independent():
    L = chain(3)
    assert shortest_cycle(face_generators(L, [])) is None


@given(random_lattices(5))
def test_verdict_matches_sympy_basis_test(L):
    assume(len(L) <= 12)
    B = brute(L)
    for D in L.enumerate_embedded_sublattices():
        v = is_smooth_face(L, D)
        W = [g[2] for g in face_filter(B, D, L.J)]
        assert v.smooth == sympy_smooth(W)
        assert not v.pruning_fired
        assert v.replay()


@pytest.mark.parametrize("d,n", [(2, 5), (3, 5), (2, 6)])
def test_singular_dependencies_contain_a_window_diamond(d, n):
    L = idn(d, n)
    diamonds = [singular_window(d, n, i, j).diamond_edges for i, j in window_indices(d, n)]
    for D in L.enumerate_embedded_sublattices():
        v = is_smooth_face(L, D)
        if not v.smooth:
            edges = {(g.upper, g.lower) for _, g in v.dependency}
            assert any(dia <= edges for dia in diamonds)


def test_harness_shapes():
    rep = conjecture_harness(idn(2, 4))
    assert rep.criterion_matches and rep.faces == 40
    rep = conjecture_harness(counterexample_lattice())
    assert (True, False) in rep.agreement
    assert frozenset({(1, 5, 6)}) in rep.disagreements
    rep = conjecture_harness(chain(4))
    assert set(rep.agreement) == {(True, True)}
    with pytest.raises(SizeLimitExceeded):
        conjecture_harness(idn(3, 6))


def test_h_isomorphism():
    L = idn(3, 6)
    w1, w2 = (singular_window(3, 6, i, j) for i, j in window_indices(3, 6)[:2])
    assert h_isomorphic(h_poset(L, w1.Lij), h_poset(L, w2.Lij))
    assert not h_isomorphic(h_poset(L, w1.Lij), h_poset(L, []))
