import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hibitoric import Poset, ideal_lattice
from oracle import BruteLattice

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def random_posets(draw, max_size: int = 5):
    n = draw(st.integers(1, max_size))
    rel = {(a, b) for a in range(n) for b in range(a + 1, n) if draw(st.booleans())}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    covers = [
        (b, a) for a, b in rel if not any((a, c) in rel and (c, b) in rel for c in range(n))
    ]
    return Poset(range(n), covers)


@st.composite
def random_lattices(draw, max_size: int = 5):
    return ideal_lattice(draw(random_posets(max_size)))


def brute(L) -> BruteLattice:
    return BruteLattice(L.elements, L.poset.covers())


@pytest.fixture
def brute_of():
    return brute
