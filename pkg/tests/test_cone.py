import pytest
from hypothesis import assume, given

from conftest import brute, random_lattices
from oracle import face_filter, hibi_generators, sympy_rank
from hibitoric.cone import (
    cone_generators,
    distinguished_point,
    face,
    face_generators,
    face_geometry,
    face_support,
    functional_eval,
    h_poset,
)
from hibitoric.errors import BadParameters, NotEmbedded, NotGenerators
from hibitoric.grassmann import counterexample_lattice, idn, jblock_union_face, singular_window
from hibitoric.lattice import chain, diamond


def labels(gens):
    return {g.label() for g in gens}


def test_chain_generators_are_a_basis():
    gens = cone_generators(chain(4))
    assert len(gens) == 4
    assert sympy_rank([g.vector for g in gens]) == 4


def test_idn_2_4_generators():
    L = idn(2, 4)
    gens = cone_generators(L)
    assert len(gens) == 6 and len(gens[0].vector) == 5
    assert labels(gens) == {
        "e_12 - e_13", "e_13 - e_14", "e_13 - e_23", "e_14 - e_34", "e_23 - e_34", "e_34",
    }


def test_diamond_generators():
    gens = cone_generators(diamond())
    assert labels(gens) == {"e_a", "e_b", "e_0 - e_a", "e_0 - e_b"}
    assert sympy_rank([g.vector for g in gens]) == 3


def test_functional_eval():
    L = idn(2, 4)
    v = next(g for g in cone_generators(L) if g.label() == "e_13 - e_23")
    assert functional_eval(L, (1, 2), v) == 0
    assert functional_eval(L, (1, 3), v) == 1
    top = L.poset.top
    for k in range(len(L.J)):
        e = [0] * len(L.J)
        e[k] = 1
        assert functional_eval(L, top, e) == 1
    with pytest.raises(BadParameters):
        functional_eval(L, top, [1, 0])


def test_window_face():
    L = idn(2, 4)
    D = [(1, 2), (3, 4)]
    assert labels(face_generators(L, D)) == {"e_13 - e_23", "e_13 - e_14", "e_23 - e_34", "e_14 - e_34"}
    assert face_support(L, face_generators(L, D)) == frozenset(D)
    g = face_geometry(L, D)
    assert (g.face_dim, g.orbit_dim, g.ambient_dim) == (3, 2, 5) and g.consistent
    assert distinguished_point(L, D) == tuple(int(x in D) for x in L.elements)


def test_extremes():
    L = idn(2, 4)
    assert face_generators(L, L.elements) == ()
    assert face_generators(L, []) == cone_generators(L)
    assert face_support(L, []) == frozenset(L.elements)
    assert face_support(L, cone_generators(L)) == frozenset()
    assert distinguished_point(L, []) == (0,) * 6
    assert distinguished_point(L, L.elements) == (1,) * 6
    g = face_geometry(L, L.elements)
    assert (g.face_dim, g.orbit_dim, g.ambient_dim) == (0, 5, 5)


def test_errors():
    L = idn(2, 4)
    with pytest.raises(NotEmbedded):
        face_generators(L, [(1, 4), (2, 3)])
    with pytest.raises(NotGenerators):
        face_support(L, [(1, 1, 1, 1, 1)])


def test_counterexample_face_has_six_generators():
    C = counterexample_lattice()
    W = face_generators(C, [(1, 5, 6)])
    printed = {"e_145 - e_156", "e_136 - e_156", "e_135 - e_145", "e_135 - e_136", "e_134 - e_135"}
    assert labels(W) == printed | {"e_234"}
    g = face_geometry(C, [(1, 5, 6)])
    assert (g.face_dim, g.orbit_dim, g.ambient_dim) == (5, 1, 6)


def test_h_poset_shapes():
    L = idn(3, 6)
    w = singular_window(3, 6, 1, 1)
    H = h_poset(L, w.Lij)
    assert len(H.components) == 1 and set(H.edges) == w.diamond_edges
    assert h_poset(L, L.elements).vertices == ()
    U = h_poset(idn(2, 8), jblock_union_face(8, [(1, 0), (4, 0)]))
    assert len(U.components) == 2


def test_face_json_keys():
    doc = face(idn(2, 4), [(1, 2), (3, 4)]).to_json()
    assert {"D", "W", "face_dim", "orbit_dim", "H_components"} <= set(doc)


@given(random_lattices(5))
def test_generators_match_definition(L):
    J, want = hibi_generators(brute(L), L.J)
    assert {(g.upper, g.lower, g.vector) for g in cone_generators(L)} == want
    for g in cone_generators(L):
        nz = sorted(x for x in g.vector if x)
        assert nz == ([1] if g.lower is None else [-1, 1])


@given(random_lattices(4))
def test_faces_round_trip_and_dimensions(L):
    assume(len(L) <= 12)
    B = brute(L)
    for D in L.enumerate_embedded_sublattices():
        W = face_generators(L, D)
        assert {(g.upper, g.lower, g.vector) for g in W} == face_filter(B, D, L.J)
        assert face_support(L, W) == D
        g = face_geometry(L, D)
        assert g.face_dim == sympy_rank([w.vector for w in W])
        assert g.consistent
        assert L.binomial_violations(distinguished_point(L, D)) == []
