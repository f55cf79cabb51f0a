"""Hilbert functions of square-free monomial quotients and of K[X(L)].

For R = K[x_1..x_k]/I with I square-free, the degree-m part has a basis
indexed by the faces S of the associated simplicial complex (sets containing
no generator), each face contributing C(m-1, |S|-1) monomials with support
exactly S.  For a distributive lattice the Stanley-Reisner ideal has the
incomparable pairs as generators, so its faces are the chains of L.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import BadParameters, SizeLimitExceeded
from .lattice import DistributiveLattice

MAX_VARS = 24
CROSSCHECK_MAX_ELEMENTS = 12
CROSSCHECK_MAX_DEGREE = 4


@dataclass(frozen=True)
class SqFreeIdeal:
    n_vars: int
    generators: tuple[frozenset, ...]

    def __init__(self, n_vars: int, generators: Iterable[Iterable[int]]):
        if n_vars < 0:
            raise BadParameters(f"n_vars must be nonnegative, got {n_vars}")
        gens = {frozenset(int(v) for v in g) for g in generators}
        for g in gens:
            if not g:
                raise BadParameters("the unit ideal is not allowed")
            if min(g) < 0 or max(g) >= n_vars:
                raise BadParameters(f"generator {sorted(g)} uses a variable outside 0..{n_vars - 1}")
        minimal = [g for g in gens if not any(h < g for h in gens)]
        minimal.sort(key=lambda g: (len(g), sorted(g)))
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "generators", tuple(minimal))

    def to_json(self) -> dict:
        return {"n_vars": self.n_vars, "generators": [sorted(g) for g in self.generators]}


@dataclass(frozen=True)
class HilbertData:
    f_vector: tuple[int, ...]  # f_vector[s] = number of faces with s vertices, s >= 0
    krull_dim: int
    degree: int
    numerator: tuple[int, ...]  # H(t) = sum numerator[i] t^i / (1 - t)^krull_dim

    def phi(self, m: int) -> int:
        if m < 0:
            return 0
        if m == 0:
            return 1
        return sum(f * comb(m - 1, s - 1) for s, f in enumerate(self.f_vector) if s)

    def series_coefficients(self, upto: int) -> list[int]:
        """Coefficients of t^0..t^upto obtained by expanding the rational form."""
        D = self.krull_dim
        out = []
        for m in range(upto + 1):
            out.append(
                sum(c * comb(m - i + D - 1, D - 1) for i, c in enumerate(self.numerator) if i <= m)
                if D
                else (self.numerator[m] if m < len(self.numerator) else 0)
            )
        return out

    def to_json(self) -> dict:
        return {
            "f_vector": list(self.f_vector),
            "krull_dim": self.krull_dim,
            "degree": self.degree,
            "numerator": list(self.numerator),
            "phi": [self.phi(m) for m in range(6)],
        }


def _faces_by_size(ideal: SqFreeIdeal) -> list[int]:
    k = ideal.n_vars
    gmasks = [sum(1 << v for v in g) for g in ideal.generators]
    # generators indexed by their largest variable: adding v can only complete those
    by_top: list[list[int]] = [[] for _ in range(k)]
    for g, gm in zip(ideal.generators, gmasks):
        by_top[max(g)].append(gm)
    counts = [0] * (k + 1)

    def grow(start: int, face: int, size: int) -> None:
        counts[size] += 1
        for v in range(start, k):
            new = face | (1 << v)
            if all(gm & ~new for gm in by_top[v]):
                grow(v + 1, new, size + 1)

    grow(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def sqfree_hilbert(ideal: SqFreeIdeal) -> HilbertData:
    if ideal.n_vars > MAX_VARS:
        raise SizeLimitExceeded(f"subset scan limited to {MAX_VARS} variables, got {ideal.n_vars}")
    f = _faces_by_size(ideal)
    D = len(f) - 1
    num = [0] * (D + 1)
    for s, fs in enumerate(f):
        # t^s (1-t)^(D-s)
        term = [0] * s + [comb(D - s, i) * (-1) ** i for i in range(D - s + 1)]
        for i, c in enumerate(term):
            num[i] += fs * c
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertData(tuple(f), D, f[D], tuple(num))


def stanley_reisner_ideal(L: DistributiveLattice) -> SqFreeIdeal:
    """Generators x_a x_b for every incomparable pair; variables follow ``L.elements``."""
    P = L.poset
    n = len(P)
    gens = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if not ((P.down[a] >> b) & 1 or (P.down[b] >> a) & 1)
    ]
    return SqFreeIdeal(n, gens)


def multichain_counts(L: DistributiveLattice, m_max: int) -> list[int]:
    """Number of multichains a_1 >= ... >= a_m for m = 0..m_max."""
    P = L.poset
    n = len(P)
    below = [[b for b in range(n) if (P.down[a] >> b) & 1] for a in range(n)]
    c = [1] * n
    out = [1]
    for _ in range(m_max):
        out.append(sum(c))
        c = [sum(c[b] for b in below[a]) for a in range(n)]
    return out[: m_max + 1]


def semigroup_degree_counts(L: DistributiveLattice, m_max: int) -> list[int]:
    """Distinct sums of m indicator vectors of Birkhoff ideals, m = 0..m_max."""
    ideals = sorted(set(L.ideal_masks))
    width = len(L.J)
    # pack each coordinate into a base-(m_max+1) digit so sums never carry
    base = m_max + 1
    packed = [sum(base**k for k in range(width) if (I >> k) & 1) for I in ideals]
    level = {0}
    out = [1]
    for _ in range(m_max):
        level = {s + v for s in level for v in packed}
        out.append(len(level))
    return out


@dataclass(frozen=True)
class CrosscheckRow:
    m: int
    multichains: int
    stanley_reisner: int
    semigroup: int

    @property
    def agree(self) -> bool:
        return self.multichains == self.stanley_reisner == self.semigroup


@dataclass(frozen=True)
class CrosscheckReport:
    rows: tuple[CrosscheckRow, ...]
    hilbert: HilbertData

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.rows)

    def to_json(self) -> dict:
        return {
            "rows": [
                {
                    "m": r.m,
                    "multichains": r.multichains,
                    "stanley_reisner": r.stanley_reisner,
                    "semigroup": r.semigroup,
                    "agree": r.agree,
                }
                for r in self.rows
            ],
            "hilbert": self.hilbert.to_json(),
            "ok": self.ok,
        }


def lattice_hilbert_crosscheck(L: DistributiveLattice, m_max: int = 3) -> CrosscheckReport:
    if len(L) > CROSSCHECK_MAX_ELEMENTS:
        raise SizeLimitExceeded(f"crosscheck needs #L <= {CROSSCHECK_MAX_ELEMENTS}, got {len(L)}")
    if not 1 <= m_max <= CROSSCHECK_MAX_DEGREE:
        raise SizeLimitExceeded(f"crosscheck needs 1 <= m_max <= {CROSSCHECK_MAX_DEGREE}, got {m_max}")
    H = sqfree_hilbert(stanley_reisner_ideal(L))
    a = multichain_counts(L, m_max)
    c = semigroup_degree_counts(L, m_max)
    rows = tuple(CrosscheckRow(m, a[m], H.phi(m), c[m]) for m in range(1, m_max + 1))
    return CrosscheckReport(rows, H)
