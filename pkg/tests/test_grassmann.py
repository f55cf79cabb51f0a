import pytest

from oracle import BruteLattice, increasing_tuples
from hibitoric.errors import BadParameters, BlocksOverlapOrTouch, IndexOutOfRange
from hibitoric.grassmann import (
    Irreducibility,
    JBlockSpec,
    classify_element,
    counterexample_lattice,
    idn,
    jblock_face,
    jblock_union_face,
    mu_lambda,
    segments,
    singular_window,
    tilde_i2,
    window_count,
    window_indices,
)
from hibitoric.smoothness import gl_pairs


def test_idn_sizes():
    L = idn(3, 6)
    assert len(L) == 20
    assert len(L.J) == 10
    assert len(idn(3, 7).J) == 13


def test_idn_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        idn(3, 3)
    with pytest.raises(BadParameters):
        idn(0, 4)


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_idn_order_is_componentwise(d, n):
    B = BruteLattice(*increasing_tuples(d, n))
    L = idn(d, n)
    for a in L.elements:
        for b in L.elements:
            assert L.leq(a, b) == B.leq(a, b)
            assert L.join(a, b) == tuple(map(max, a, b))
            assert L.meet(a, b) == tuple(map(min, a, b))


def test_segments():
    assert segments((1, 2, 4, 5, 7)) == ((1, 2), (4, 5), (7,))


def test_classify_examples():
    assert classify_element(2, 4, (1, 4)).kind is Irreducibility.BOTH
    assert classify_element(2, 4, (1, 3)).kind is Irreducibility.JOIN
    assert classify_element(2, 4, (2, 4)).kind is Irreducibility.MEET
    assert classify_element(3, 7, (2, 4, 6)).kind is Irreducibility.NEITHER
    with pytest.raises(BadParameters):
        classify_element(2, 4, (3, 2))


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)])
def test_classification_matches_oracle(d, n):
    B = BruteLattice(*increasing_tuples(d, n))
    J, M = set(B.join_irreducibles()), set(B.meet_irreducibles())
    for x in B.elements:
        c = classify_element(d, n, x)
        assert (c.join_irreducible, c.meet_irreducible) == (x in J, x in M)


def test_window_counts():
    assert window_count(2, 4) == 1
    assert window_count(2, 5) == 2
    assert window_count(3, 7) == 6
    assert window_indices(2, 5) == [(1, 1), (2, 1)]


def test_window_2_4():
    w = singular_window(2, 4, 1, 1)
    assert (w.mu, w.lam) == ((1, 3), (2, 4))
    assert (w.A, w.B, w.C) == ((2, 3), (1, 4), (3, 4))
    assert w.Lij == frozenset({(1, 2), (3, 4)})


def test_window_c_is_the_join_inside_j():
    # the componentwise max of A and B is not join-irreducible here
    w = singular_window(3, 7, 1, 2)
    assert (w.mu, w.A, w.B, w.C) == ((1, 2, 4), (1, 3, 4), (1, 2, 5), (1, 4, 5))


@pytest.mark.parametrize("d,n", [(2, 5), (3, 6), (3, 7), (4, 8)])
def test_windows_match_brute_j_poset(d, n):
    B = BruteLattice(*increasing_tuples(d, n))
    J = B.join_irreducibles()

    def ups(x):
        above = [y for y in J if y != x and B.leq(x, y)]
        return {y for y in above if not any(z != y and B.leq(z, y) for z in above)}

    for i, j in window_indices(d, n):
        w = singular_window(d, n, i, j)
        assert ups(w.mu) == {w.A, w.B}
        assert ups(w.A) & ups(w.B) == {w.C}
        mu, lam = mu_lambda(d, n, i, j)
        assert w.Lij == frozenset(x for x in B.elements if not (B.leq(mu, x) and B.leq(x, lam)))
        assert idn(d, n).is_embedded_sublattice(w.Lij)


def test_window_index_errors():
    with pytest.raises(IndexOutOfRange):
        singular_window(2, 4, 2, 1)
    with pytest.raises(IndexOutOfRange):
        singular_window(3, 6, 1, 3)


def test_jblock_faces():
    assert jblock_face(5, 2, 0) == frozenset({(1, 2), (1, 3), (2, 3), (4, 5)})
    assert jblock_face(6, 1, 0) == frozenset({(1, 2), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)})
    # maximal k leaves only the top above the block
    assert (5, 6) in jblock_face(6, 1, 2) and len(jblock_face(6, 1, 2)) == 2
    for n in range(4, 9):
        for i in range(1, n - 2):
            for k in range(0, n - i - 2):
                assert idn(2, n).is_embedded_sublattice(jblock_face(n, i, k))


def test_jblock_range():
    with pytest.raises(IndexOutOfRange):
        JBlockSpec(6, 1, 3)
    assert JBlockSpec(7, 2, 1).windows == [(2, 1), (3, 1)]


def test_jblock_unions():
    face = jblock_union_face(8, [(1, 0), (4, 0)])
    assert face == frozenset({(1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)})
    assert idn(2, 8).is_embedded_sublattice(face)
    assert jblock_union_face(7, [(2, 1)]) == jblock_face(7, 2, 1)
    with pytest.raises(BlocksOverlapOrTouch):
        jblock_union_face(6, [(1, 0), (2, 0)])


def test_counterexample_lattice():
    C = counterexample_lattice()
    assert len(C) == 12
    assert C.J == ((1, 3, 4), (1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 5, 6), (2, 3, 4))
    pairs = gl_pairs(C)
    assert [(t, d) for t, d, _ in pairs] == [((1, 5, 6), (2, 3, 4))]
    assert pairs[0][2] == (1 << len(C)) - 1


def test_tilde():
    T = tilde_i2(5)
    assert len(T) == 8
    assert (1, 2) not in T and (4, 5) not in T
    with pytest.raises(BadParameters):
        tilde_i2(3)
