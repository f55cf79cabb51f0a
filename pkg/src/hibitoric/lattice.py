"""Finite distributive lattices.

Meet and join tables are computed once from the order relation, the lattice
axioms and distributivity are checked on construction, and the Birkhoff
correspondence is stored as one bitmask per element over the
join-irreducibles.

The bottom element counts as join-irreducible here, so the Birkhoff ideals
``I_a = {z in J : z <= a}`` are exactly the nonempty order ideals of ``J``
and ``#J`` equals the number of elements in a maximal chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    BadParameters,
    NotACover,
    NotALattice,
    NotDistributive,
    SizeLimitExceeded,
)
from .poset import Poset, iter_bits, normalize_element

FULL_DISTRIBUTIVITY_CHECK = 200
SAMPLED_TRIPLES = 20000
EMBEDDED_SCAN_LIMIT = 24


@dataclass(frozen=True)
class IrreducibleSets:
    J: tuple
    M: tuple
    JM: tuple


@dataclass(frozen=True)
class Diamond:
    tau: object
    phi: object
    join: object
    meet: object


class DistributiveLattice:
    """A finite distributive lattice built on a validated :class:`Poset`.

    ``family`` is an optional label such as ``("idn", 2, 5)`` that lets
    reports and the conjecture harness recognise built-in lattices.
    """

    def __init__(self, poset: Poset, family: tuple | None = None):
        if len(poset) == 0:
            raise BadParameters("empty poset")
        self.poset = poset
        self.family = family
        self.elements = poset.elements
        self.index = poset.index
        n = len(poset)
        # Bitmasks in linear-extension position space: the least upper bound
        # is the lowest set bit of the common upper-bound mask.
        order = poset.order
        pos = [0] * n
        for p, x in enumerate(order):
            pos[x] = p
        up_p = [0] * n
        down_p = [0] * n
        for x in range(n):
            up_p[x] = sum(1 << pos[y] for y in iter_bits(poset.up[x]))
            down_p[x] = sum(1 << pos[y] for y in iter_bits(poset.down[x]))
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                u = up_p[x] & up_p[y]
                if not u:
                    raise NotALattice(f"no upper bound for {self.elements[x]!r}, {self.elements[y]!r}")
                j = order[(u & -u).bit_length() - 1]
                if up_p[j] != u:
                    raise NotALattice(f"no least upper bound for {self.elements[x]!r}, {self.elements[y]!r}")
                d = down_p[x] & down_p[y]
                if not d:
                    raise NotALattice(f"no lower bound for {self.elements[x]!r}, {self.elements[y]!r}")
                m = order[d.bit_length() - 1]
                if down_p[m] != d:
                    raise NotALattice(f"no greatest lower bound for {self.elements[x]!r}, {self.elements[y]!r}")
                join[x][y] = join[y][x] = j
                meet[x][y] = meet[y][x] = m
        self.join_table = np.array(join, dtype=np.int64)
        self.meet_table = np.array(meet, dtype=np.int64)
        self._join = join
        self._meet = meet
        self._check_distributive()

    def _check_distributive(self) -> None:
        J, M = self.join_table, self.meet_table
        n = len(self)
        if n <= FULL_DISTRIBUTIVITY_CHECK:
            bad = []
            for x in range(n):
                lhs = M[x][J]
                rhs = J[M[x][:, None], M[x][None, :]]
                hits = np.argwhere(lhs != rhs)
                if len(hits):
                    bad = [(x, *hits[0])]
                    break
        else:
            rng = np.random.default_rng(0)
            t = rng.integers(0, n, size=(SAMPLED_TRIPLES, 3))
            lhs = M[t[:, 0], J[t[:, 1], t[:, 2]]]
            rhs = J[M[t[:, 0], t[:, 1]], M[t[:, 0], t[:, 2]]]
            bad = t[lhs != rhs]
        if len(bad):
            x, y, z = (self.elements[int(i)] for i in bad[0])
            err = NotDistributive(f"x meet (y join z) != (x meet y) join (x meet z) at {x!r}, {y!r}, {z!r}")
            err.witness = (x, y, z)
            raise err

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.poset

    def __repr__(self) -> str:
        label = f" {self.family}" if self.family else ""
        return f"DistributiveLattice({len(self)} elements{label})"

    def idx(self, x) -> int:
        return self.poset.idx(x)

    def leq(self, a, b) -> bool:
        return self.poset.leq(a, b)

    def join(self, a, b):
        return self.elements[self._join[self.idx(a)][self.idx(b)]]

    def meet(self, a, b):
        return self.elements[self._meet[self.idx(a)][self.idx(b)]]

    @property
    def bottom(self):
        return self.poset.bottom

    @property
    def top(self):
        return self.poset.top

    def mask(self, subset: Iterable) -> int:
        try:
            return self.poset.mask(subset)
        except KeyError as exc:
            raise BadParameters(f"{exc.args[0]!r} is not an element of the lattice") from None

    # -- irreducibles and Birkhoff ---------------------------------------
    @cached_property
    def irreducibles(self) -> IrreducibleSets:
        ext = self.poset.order
        lc, uc = self.poset.lower_covers, self.poset.upper_covers
        J = tuple(self.elements[i] for i in ext if len(lc[i]) <= 1)
        M = tuple(self.elements[i] for i in ext if len(uc[i]) <= 1)
        mset = set(M)
        return IrreducibleSets(J, M, tuple(x for x in J if x in mset))

    @property
    def J(self) -> tuple:
        return self.irreducibles.J

    @cached_property
    def j_index(self) -> dict:
        return {z: k for k, z in enumerate(self.J)}

    @cached_property
    def j_poset(self) -> Poset:
        return self.poset.induced(self.J)

    @cached_property
    def ideal_masks(self) -> tuple[int, ...]:
        """``ideal_masks[i]`` is I_a for a = elements[i], as bits over J positions."""
        jpos = [(self.idx(z), k) for k, z in enumerate(self.J)]
        return tuple(
            sum(1 << k for zi, k in jpos if (self.poset.down[i] >> zi) & 1)
            for i in range(len(self))
        )

    def birkhoff(self, a) -> frozenset:
        m = self.ideal_masks[self.idx(a)]
        return frozenset(self.J[k] for k in iter_bits(m))

    def birkhoff_inverse(self, ideal: Iterable):
        members = [normalize_element(z) for z in ideal]
        if not members:
            raise BadParameters("the empty ideal has no preimage (bottom is in J)")
        acc = members[0]
        for z in members[1:]:
            acc = self.join(acc, z)
        if self.birkhoff(acc) != frozenset(members):
            raise BadParameters("not an order ideal of J")
        return acc

    def cover_delta(self, upper, lower):
        if not self.poset.is_cover(upper, lower):
            raise NotACover(f"({upper!r}, {lower!r}) is not a cover")
        diff = self.ideal_masks[self.idx(upper)] & ~self.ideal_masks[self.idx(lower)]
        (k,) = iter_bits(diff)
        return self.J[k]

    # -- diamonds and embedded sublattices -------------------------------
    @cached_property
    def diamond_indices(self) -> tuple[tuple[int, int, int, int], ...]:
        out = []
        down = self.poset.down
        n = len(self)
        for t in range(n):
            for p in range(t + 1, n):
                if (down[p] >> t) & 1 or (down[t] >> p) & 1:
                    continue
                out.append((t, p, self._join[t][p], self._meet[t][p]))
        return tuple(out)

    def diamonds(self) -> list[Diamond]:
        e = self.elements
        return [Diamond(e[t], e[p], e[j], e[m]) for t, p, j, m in self.diamond_indices]

    def is_embedded_mask(self, s: int) -> bool:
        for t, p, j, m in self.diamond_indices:
            pair = (s >> t) & (s >> p) & 1
            diag = (s >> j) & (s >> m) & 1
            if pair != diag:
                return False
        return True

    def is_embedded_sublattice(self, subset: Iterable) -> bool:
        return self.is_embedded_mask(self.mask(subset))

    def embedded_masks(self, chunk_bits: int = 20) -> Iterator[int]:
        n = len(self)
        if n > EMBEDDED_SCAN_LIMIT:
            raise SizeLimitExceeded(f"embedded-sublattice scan needs <= {EMBEDDED_SCAN_LIMIT} elements, got {n}")
        tests = [
            ((1 << t) | (1 << p), (1 << j) | (1 << m)) for t, p, j, m in self.diamond_indices
        ]
        low = min(n, chunk_bits)
        base = np.arange(1 << low, dtype=np.int64)
        for hi in range(1 << (n - low)):
            cand = base | (hi << low)
            for pair, diag in tests:
                ok = ((cand & pair) == pair) == ((cand & diag) == diag)
                cand = cand[ok]
                if not len(cand):
                    break
            for s in cand.tolist():
                yield s

    def enumerate_embedded_sublattices(self) -> Iterator[frozenset]:
        for s in self.embedded_masks():
            yield self.poset.from_mask(s)

    def binomial_violations(self, point: Mapping | Sequence) -> list[Diamond]:
        if isinstance(point, Mapping):
            vals = [Fraction(point.get(e, 0)) for e in self.elements]
        else:
            if len(point) != len(self):
                raise BadParameters(f"point has {len(point)} coordinates, lattice has {len(self)}")
            vals = [Fraction(v) for v in point]
        e = self.elements
        return [
            Diamond(e[t], e[p], e[j], e[m])
            for t, p, j, m in self.diamond_indices
            if vals[t] * vals[p] != vals[j] * vals[m]
        ]

    def sublattice(self, subset: Iterable, family: tuple | None = None) -> "DistributiveLattice":
        """The lattice on ``subset`` with the induced order."""
        return DistributiveLattice(self.poset.induced(subset), family=family)

    def to_json(self) -> dict:
        out = self.poset.to_json()
        if self.family and self.family[0] == "idn":
            out.update({"type": "idn", "d": self.family[1], "n": self.family[2]})
        return out


def lattice_from_poset(poset: Poset, family: tuple | None = None) -> DistributiveLattice:
    return DistributiveLattice(poset, family=family)


def irreducibles(L: DistributiveLattice) -> IrreducibleSets:
    return L.irreducibles


def birkhoff(L: DistributiveLattice) -> tuple[dict, dict]:
    """The map a -> I_a and its inverse, as dictionaries."""
    fwd = {a: L.birkhoff(a) for a in L.elements}
    return fwd, {v: k for k, v in fwd.items()}


def cover_delta(L: DistributiveLattice, cover: tuple):
    return L.cover_delta(*cover)


def is_embedded_sublattice(L: DistributiveLattice, subset: Iterable) -> bool:
    return L.is_embedded_sublattice(subset)


def enumerate_embedded_sublattices(L: DistributiveLattice) -> Iterator[frozenset]:
    return L.enumerate_embedded_sublattices()


def binomial_violations(L: DistributiveLattice, point) -> list[Diamond]:
    return L.binomial_violations(point)


# -- small constructors ------------------------------------------------
def chain(k: int) -> DistributiveLattice:
    if k < 1:
        raise BadParameters("a chain needs at least one element")
    elems = [(i,) for i in range(1, k + 1)]
    covers = [((i + 1,), (i,)) for i in range(1, k)]
    return DistributiveLattice(Poset(elems, covers), family=("chain", k))


def diamond() -> DistributiveLattice:
    poset = Poset(["0", "a", "b", "1"], [("a", "0"), ("b", "0"), ("1", "a"), ("1", "b")])
    return DistributiveLattice(poset, family=("diamond",))


def boolean_lattice(k: int) -> DistributiveLattice:
    elems = [tuple(i for i in range(k) if s >> i & 1) for s in range(1 << k)]
    covers = [
        (tuple(sorted(e + (i,))), e) for e in elems for i in range(k) if i not in e
    ]
    return DistributiveLattice(Poset(elems, covers), family=("boolean", k))


def ideal_lattice(poset: Poset) -> DistributiveLattice:
    """The lattice of order ideals of ``poset`` (the Birkhoff direction).

    Elements are sorted tuples of poset indices, the empty ideal being ``()``.
    """
    masks = poset.ideal_masks()
    elems = {m: tuple(iter_bits(m)) for m in masks}
    present = set(masks)
    covers = []
    for m in masks:
        for x in range(len(poset)):
            if not (m >> x) & 1 and (m | (1 << x)) in present:
                covers.append((elems[m | (1 << x)], elems[m]))
    return DistributiveLattice(Poset(elems.values(), covers), family=("ideals",))
