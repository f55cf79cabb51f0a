"""Finite posets stored as Hasse diagrams with bitmask order relations.

Elements are opaque hashable tokens (strings or tuples of ints).  Internally
every element gets an index in a canonical order and the reflexive order
relation is kept as two lists of Python-int bitmasks, ``down[i]`` (all
``j <= i``) and ``up[i]`` (all ``j >= i``).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .errors import (
    BadParameters,
    CycleDetected,
    NotComparable,
    RedundantCover,
    SizeLimitExceeded,
    Unbounded,
)

Element = Hashable

IDEAL_LIMIT = 2**24


def element_key(x):
    """Sort key giving a total order on mixed string / int-tuple elements."""
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, int):
        return (0, (x,))
    return (0, tuple(x))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Grading:
    graded: bool
    rank: int | None = None
    reason: str | None = None


class Poset:
    """A validated finite poset.

    ``cover_pairs`` are ``(upper, lower)`` pairs.  Pairs implied by
    transitivity are rejected with :class:`RedundantCover` rather than pruned.
    """

    def __init__(self, elements: Iterable[Element], cover_pairs: Iterable[tuple]):
        elems = [normalize_element(e) for e in elements]
        if len(set(elems)) != len(elems):
            raise BadParameters("duplicate elements")
        elems.sort(key=element_key)
        self.elements: tuple = tuple(elems)
        self.index: dict = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)

        lower: list[set[int]] = [set() for _ in range(n)]
        for pair in cover_pairs:
            u, l = (normalize_element(p) for p in pair)
            if u not in self.index or l not in self.index:
                raise BadParameters(f"cover {pair!r} references an undeclared element")
            if u == l:
                raise CycleDetected(f"self-cover on {u!r}")
            lower[self.index[u]].add(self.index[l])
        self.lower_covers: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in lower)
        upper: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            for l in self.lower_covers[u]:
                upper[l].append(u)
        self.upper_covers: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in upper)

        self.order = self._topological_order()
        down = [0] * n
        for x in self.order:
            m = 1 << x
            for l in self.lower_covers[x]:
                m |= down[l]
            down[x] = m
        up = [0] * n
        for x in reversed(self.order):
            m = 1 << x
            for u in self.upper_covers[x]:
                m |= up[u]
            up[x] = m
        self.down: tuple[int, ...] = tuple(down)
        self.up: tuple[int, ...] = tuple(up)

        for a in range(n):
            covs = self.lower_covers[a]
            for c in covs:
                for b in covs:
                    if b != c and (down[b] >> c) & 1:
                        raise RedundantCover(
                            f"({self.elements[a]!r}, {self.elements[c]!r}) is implied via "
                            f"{self.elements[b]!r}"
                        )

    def _topological_order(self) -> tuple[int, ...]:
        n = len(self.elements)
        pending = [len(self.lower_covers[i]) for i in range(n)]
        heap = [i for i in range(n) if pending[i] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            x = heapq.heappop(heap)
            out.append(x)
            for u in self.upper_covers[x]:
                pending[u] -= 1
                if pending[u] == 0:
                    heapq.heappush(heap, u)
        if len(out) != n:
            raise CycleDetected("cover relation contains a directed cycle")
        return tuple(out)

    # -- basic protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return normalize_element(x) in self.index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {sum(map(len, self.lower_covers))} covers)"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.lower_covers == other.lower_covers

    def __hash__(self) -> int:
        return hash((self.elements, self.lower_covers))

    def idx(self, x) -> int:
        return self.index[normalize_element(x)]

    # -- order relation -------------------------------------------------
    def leq(self, a, b) -> bool:
        return bool((self.down[self.idx(b)] >> self.idx(a)) & 1)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def covers(self) -> list[tuple]:
        """All cover pairs ``(upper, lower)`` in canonical order."""
        return [
            (self.elements[u], self.elements[l])
            for u in range(len(self))
            for l in self.lower_covers[u]
        ]

    def is_cover(self, upper, lower) -> bool:
        return self.idx(lower) in self.lower_covers[self.idx(upper)]

    def minimal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self.lower_covers[i]]

    def maximal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self.upper_covers[i]]

    def is_bounded(self) -> bool:
        return len(self.minimal()) == 1 and len(self.maximal()) == 1

    @property
    def bottom(self):
        mins = self.minimal()
        if len(mins) != 1:
            raise Unbounded(f"{len(mins)} minimal elements")
        return mins[0]

    @property
    def top(self):
        maxs = self.maximal()
        if len(maxs) != 1:
            raise Unbounded(f"{len(maxs)} maximal elements")
        return maxs[0]

    def linear_extension(self) -> tuple:
        return tuple(self.elements[i] for i in self.order)

    def mask(self, subset: Iterable) -> int:
        m = 0
        for x in subset:
            m |= 1 << self.idx(x)
        return m

    def from_mask(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in iter_bits(mask))

    # -- chains ---------------------------------------------------------
    def grading(self) -> Grading:
        if len(self) == 0:
            return Grading(False, reason="empty poset")
        if not self.is_bounded():
            return Grading(
                False,
                reason=f"not bounded ({len(self.minimal())} minimal, {len(self.maximal())} maximal)",
            )
        longest = [0] * len(self)
        shortest = [0] * len(self)
        for x in self.order:
            lows = self.lower_covers[x]
            if lows:
                longest[x] = 1 + max(longest[l] for l in lows)
                shortest[x] = 1 + min(shortest[l] for l in lows)
        t = self.idx(self.top)
        if longest[t] != shortest[t]:
            return Grading(
                False,
                reason=f"maximal chains of lengths {shortest[t]} and {longest[t]}",
            )
        return Grading(True, rank=longest[t])

    def maximal_chain_count(self) -> int:
        """Number of maximal chains, by a path-counting DP over the Hasse diagram."""
        if not self.is_bounded():
            raise Unbounded("maximal chain count needs a unique bottom and top")
        count = [0] * len(self)
        for x in self.order:
            lows = self.lower_covers[x]
            count[x] = sum(count[l] for l in lows) if lows else 1
        return count[self.idx(self.top)]

    # -- subposets ------------------------------------------------------
    def interval(self, mu, lam) -> "Poset":
        if not self.leq(mu, lam):
            raise NotComparable(f"{mu!r} is not <= {lam!r}")
        m = self.up[self.idx(mu)] & self.down[self.idx(lam)]
        return self.induced(self.from_mask(m))

    def induced(self, subset: Iterable) -> "Poset":
        """Induced subposet on ``subset`` with its own Hasse diagram."""
        smask = self.mask(subset)
        pairs = []
        strict = {x: self.down[x] & smask & ~(1 << x) for x in iter_bits(smask)}
        for x, below in strict.items():
            shadow = 0
            for z in iter_bits(below):
                shadow |= strict[z]
            for y in iter_bits(below & ~shadow):
                pairs.append((self.elements[x], self.elements[y]))
        return Poset(self.from_mask(smask), pairs)

    def order_ideals(self, limit: int = IDEAL_LIMIT) -> list[frozenset]:
        """All down-closed subsets (empty set included), in lexicographic order."""
        masks = self.ideal_masks(limit)
        masks.sort(key=lambda m: tuple(iter_bits(m)))
        return [self.from_mask(m) for m in masks]

    def ideal_masks(self, limit: int = IDEAL_LIMIT) -> list[int]:
        order = self.order
        need = [0] * len(self)
        for x in range(len(self)):
            for l in self.lower_covers[x]:
                need[x] |= 1 << l
        out: list[int] = []

        def extend(k: int, mask: int) -> None:
            if k == len(order):
                out.append(mask)
                if len(out) > limit:
                    raise SizeLimitExceeded(f"more than {limit} order ideals")
                return
            x = order[k]
            extend(k + 1, mask)
            if need[x] & mask == need[x]:
                extend(k + 1, mask | (1 << x))

        extend(0, 0)
        return out

    def to_json(self) -> dict:
        return {
            "elements": [element_to_json(e) for e in self.elements],
            "covers": [[element_to_json(u), element_to_json(l)] for u, l in self.covers()],
        }


def normalize_element(x):
    """JSON arrays arrive as lists; elements are stored as tuples."""
    if isinstance(x, list):
        return tuple(x)
    return x


def element_to_json(x):
    if isinstance(x, tuple):
        return list(x)
    return x


def build_poset(elements: Iterable[Element], cover_pairs: Iterable[tuple]) -> Poset:
    return Poset(elements, cover_pairs)


def grading(poset: Poset) -> Grading:
    return poset.grading()


def maximal_chain_count(poset: Poset) -> int:
    return poset.maximal_chain_count()


def interval(poset: Poset, mu, lam) -> Poset:
    return poset.interval(mu, lam)


def order_ideals(poset: Poset, limit: int = IDEAL_LIMIT) -> list[frozenset]:
    return poset.order_ideals(limit)
