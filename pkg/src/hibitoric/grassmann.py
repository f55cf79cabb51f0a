"""The lattice I_{d,n} of increasing d-tuples and its distinguished pieces.

Covers of I_{d,n} raise one entry by one; join and meet turn out to be the
componentwise max and min.  This module also builds the singular windows
(mu_ij, lambda_ij and the diamond A, B, C above mu_ij in J), the J-block
faces of I_{2,n}, and the interval [(1,3,4), (2,5,6)] of I_{3,6}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import BadParameters, BlocksOverlapOrTouch, IndexOutOfRange
from .lattice import DistributiveLattice
from .poset import Poset, iter_bits


class Irreducibility(enum.Enum):
    JOIN = "join"
    MEET = "meet"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class Classification:
    kind: Irreducibility
    segments: tuple[tuple[int, ...], ...]

    @property
    def join_irreducible(self) -> bool:
        return self.kind in (Irreducibility.JOIN, Irreducibility.BOTH)

    @property
    def meet_irreducible(self) -> bool:
        return self.kind in (Irreducibility.MEET, Irreducibility.BOTH)


@dataclass(frozen=True)
class SingularWindow:
    d: int
    n: int
    i: int
    j: int
    mu: tuple
    lam: tuple
    A: tuple
    B: tuple
    C: tuple
    Lij: frozenset

    @property
    def diamond_edges(self) -> frozenset:
        """The four J-covers ``(upper, lower)`` whose generators span the face."""
        return frozenset({(self.A, self.mu), (self.B, self.mu), (self.C, self.A), (self.C, self.B)})


@dataclass(frozen=True)
class JBlockSpec:
    """The face sigma_{i,1} u ... u sigma_{i+k,1} of X_{2,n}."""

    n: int
    i: int
    k: int

    def __post_init__(self):
        if self.n < 4 or not (1 <= self.i <= self.n - 3) or not (0 <= self.k <= self.n - self.i - 3):
            raise IndexOutOfRange(f"J-block (n={self.n}, i={self.i}, k={self.k}) out of range")

    @property
    def windows(self) -> list[tuple[int, int]]:
        return [(self.i + t, 1) for t in range(self.k + 1)]

    @property
    def generator_interval(self) -> tuple[tuple, tuple]:
        """Endpoints of the interval of J_{2,n} whose covers generate the face."""
        i, k = self.i, self.k
        return (1, i + 2), (i + k + 2, i + k + 3)


def _check_dn(d: int, n: int) -> None:
    if not (isinstance(d, int) and isinstance(n, int)) or not (1 <= d < n):
        raise BadParameters(f"need 1 <= d < n, got d={d}, n={n}")


@lru_cache(maxsize=64)
def idn(d: int, n: int) -> DistributiveLattice:
    _check_dn(d, n)
    elems = list(combinations(range(1, n + 1), d))
    covers = []
    for x in elems:
        for k in range(d):
            v = x[k] + 1
            if v <= n and (k == d - 1 or v < x[k + 1]):
                covers.append((x[:k] + (v,) + x[k + 1:], x))
    return DistributiveLattice(Poset(elems, covers), family=("idn", d, n))


def segments(x: tuple) -> tuple[tuple[int, ...], ...]:
    """Split a strictly increasing tuple into maximal runs of consecutive integers."""
    runs: list[list[int]] = []
    for v in x:
        if runs and v == runs[-1][-1] + 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return tuple(tuple(r) for r in runs)


def classify_element(d: int, n: int, x: tuple) -> Classification:
    _check_dn(d, n)
    x = tuple(x)
    if len(x) != d or any(a >= b for a, b in zip(x, x[1:])) or x[0] < 1 or x[-1] > n:
        raise BadParameters(f"{x!r} is not an increasing {d}-tuple in [1, {n}]")
    segs = segments(x)
    join = len(segs) == 1 or (len(segs) == 2 and segs[0][0] == 1)
    meet = len(segs) == 1 or (len(segs) == 2 and segs[1][-1] == n)
    if join and meet:
        kind = Irreducibility.BOTH
    elif join:
        kind = Irreducibility.JOIN
    elif meet:
        kind = Irreducibility.MEET
    else:
        kind = Irreducibility.NEITHER
    return Classification(kind, segs)


def window_count(d: int, n: int) -> int:
    return max(n - d - 1, 0) * max(d - 1, 0)


def window_indices(d: int, n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n - d) for j in range(1, d)]


def mu_lambda(d: int, n: int, i: int, j: int) -> tuple[tuple, tuple]:
    mu = tuple(range(1, j + 1)) + tuple(range(i + j + 1, i + d + 1))
    lam = tuple(range(i + 1, i + j + 1)) + tuple(range(n + 1 + j - d, n + 1))
    return mu, lam


def singular_window(d: int, n: int, i: int, j: int) -> SingularWindow:
    _check_dn(d, n)
    if not (1 <= i <= n - d - 1 and 1 <= j <= d - 1):
        raise IndexOutOfRange(f"window (i={i}, j={j}) outside 1<=i<={n - d - 1}, 1<=j<={d - 1}")
    L = idn(d, n)
    mu, lam = mu_lambda(d, n, i, j)
    JP = L.j_poset
    ups = [JP.elements[u] for u in JP.upper_covers[JP.idx(mu)]]
    if len(ups) != 2:
        raise AssertionError(f"mu_{i}{j} = {mu} has {len(ups)} covers in J")
    # A changes the initial segment 1..j, B shifts the tail.
    A = next(c for c in ups if c[:j] != mu[:j])
    B = next(c for c in ups if c is not A)
    common = JP.up[JP.idx(A)] & JP.up[JP.idx(B)]
    C = next(JP.elements[c] for c in iter_bits(common) if JP.up[c] == common)
    box = L.poset.up[L.idx(mu)] & L.poset.down[L.idx(lam)]
    Lij = L.poset.from_mask(((1 << len(L)) - 1) & ~box)
    return SingularWindow(d, n, i, j, mu, lam, A, B, C, Lij)


def _interval_2(lo: tuple, hi: tuple) -> set:
    return {
        (a, b)
        for a in range(lo[0], hi[0] + 1)
        for b in range(max(lo[1], a + 1), hi[1] + 1)
    }


def jblock_face(n: int, i: int, k: int) -> frozenset:
    spec = JBlockSpec(n, i, k)
    return jblock_union_face(spec.n, [(spec.i, spec.k)])


def jblock_union_face(n: int, blocks) -> frozenset:
    """Embedded sublattice of I_{2,n} for pairwise separated J-blocks.

    ``blocks`` is a list of ``(i, k)``; consecutive blocks need
    ``i_prev + k_prev + 1 < i_next``.
    """
    specs = [JBlockSpec(n, i, k) for i, k in blocks]
    if not specs:
        raise BadParameters("at least one block is required")
    for a, b in zip(specs, specs[1:]):
        if not a.i + a.k + 1 < b.i:
            raise BlocksOverlapOrTouch(f"blocks ({a.i},{a.k}) and ({b.i},{b.k}) intersect or are consecutive")
    pieces = []
    lo = (1, 2)
    for s in specs:
        pieces.append((lo, (s.i, s.i + 1)))
        lo = (s.i + s.k + 2, s.i + s.k + 3)
    pieces.append((lo, (n - 1, n)))
    out = set()
    for a, b in pieces:
        out |= _interval_2(a, b)
    return frozenset(out)


def counterexample_lattice() -> DistributiveLattice:
    L = idn(3, 6)
    sub = L.poset.interval((1, 3, 4), (2, 5, 6))
    return DistributiveLattice(sub, family=("counterexample",))


def tilde_i2(r: int) -> DistributiveLattice:
    """I_{2,r} with its bottom (1,2) and top (r-1,r) removed."""
    if r < 4:
        raise BadParameters("need r >= 4")
    L = idn(2, r)
    keep = [x for x in L.elements if x not in ((1, 2), (r - 1, r))]
    return L.sublattice(keep, family=("tilde", 2, r))
