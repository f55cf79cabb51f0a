from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given

from conftest import brute, random_lattices
from hibitoric.errors import BadParameters, NotACover, NotDistributive, SizeLimitExceeded
from hibitoric.grassmann import idn
from hibitoric.lattice import (
    DistributiveLattice,
    birkhoff,
    boolean_lattice,
    chain,
    cover_delta,
    diamond,
    enumerate_embedded_sublattices,
    irreducibles,
    is_embedded_sublattice,
)
from hibitoric.poset import Poset


def test_diamond_irreducibles():
    irr = irreducibles(diamond())
    assert irr.J == ("0", "a", "b")
    assert irr.JM == ("a", "b")


def test_pentagon_is_not_distributive():
    P = Poset(["0", "a", "b", "c", "1"], [("a", "0"), ("b", "a"), ("1", "b"), ("c", "0"), ("1", "c")])
    with pytest.raises(NotDistributive) as info:
        DistributiveLattice(P)
    assert len(info.value.witness) == 3


def test_diamond_three_is_not_distributive():
    P = Poset(["0", "a", "b", "c", "1"], [(x, "0") for x in "abc"] + [("1", x) for x in "abc"])
    with pytest.raises(NotDistributive):
        DistributiveLattice(P)


def test_birkhoff_round_trip_on_idn():
    L = idn(2, 5)
    fwd, inv = birkhoff(L)
    for a in L.elements:
        assert inv[fwd[a]] == a
        assert L.birkhoff_inverse(fwd[a]) == a


def test_cover_delta():
    L = idn(2, 4)
    assert cover_delta(L, ((2, 3), (1, 3))) == (2, 3)
    with pytest.raises(NotACover):
        cover_delta(L, ((2, 4), (1, 3)))


def test_birkhoff_inverse_rejects_non_ideal():
    L = idn(2, 4)
    with pytest.raises(BadParameters):
        L.birkhoff_inverse([(2, 3)])


@pytest.mark.parametrize(
    "L, count",
    [(chain(1), 2), (chain(3), 8), (diamond(), 10), (boolean_lattice(3), 28), (idn(2, 4), 40), (idn(2, 5), 208), (idn(3, 5), 208)],
)
def test_embedded_counts_match_brute_force(L, count):
    # counts frozen from the subset-scan oracle
    got = set(enumerate_embedded_sublattices(L))
    assert len(got) == count
    if len(L) <= 8:
        assert got == set(brute(L).embedded_subsets())


def test_embedded_count_grows_on_bigger_grassmannians():
    assert sum(1 for _ in idn(2, 6).embedded_masks()) == 1088
    assert sum(1 for _ in idn(3, 6).embedded_masks()) == 2896


def test_embedded_scan_guard():
    with pytest.raises(SizeLimitExceeded):
        next(idn(2, 8).embedded_masks())


def test_binomial_violations():
    L = diamond()
    assert L.binomial_violations({"0": 1, "a": 1, "b": 1, "1": 1}) == []
    bad = L.binomial_violations({"a": 1, "b": 1})
    assert len(bad) == 1 and {bad[0].tau, bad[0].phi} == {"a", "b"}
    # positional order follows L.elements: 0, 1, a, b
    assert L.binomial_violations([Fraction(1, 2), 2, 1, 1]) == []


def test_is_embedded_sublattice_function():
    L = idn(2, 4)
    assert is_embedded_sublattice(L, [(1, 2), (3, 4)])
    assert not is_embedded_sublattice(L, [(1, 4), (2, 3)])


@given(random_lattices(5))
def test_joins_meets_and_irreducibles_match_oracle(L):
    B = brute(L)
    for a, b in product(L.elements, repeat=2):
        assert L.join(a, b) == B.join(a, b)
        assert L.meet(a, b) == B.meet(a, b)
    assert set(L.J) == set(B.join_irreducibles())
    assert set(L.irreducibles.M) == set(B.meet_irreducibles())


@given(random_lattices(4))
def test_embedded_sublattices_match_oracle(L):
    if len(L) <= 10:
        assert set(enumerate_embedded_sublattices(L)) == set(brute(L).embedded_subsets())


@given(random_lattices(6))
def test_j_size_is_maximal_chain_length(L):
    assert len(L.J) == L.poset.grading().rank + 1


@given(random_lattices(5))
def test_characteristic_vectors_of_embedded_sets_satisfy_binomials(L):
    assume(len(L) <= 16)
    for S in L.enumerate_embedded_sublattices():
        point = {x: 1 for x in S}
        assert L.binomial_violations(point) == []
