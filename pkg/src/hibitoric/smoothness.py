"""Smooth versus singular faces, and the singular locus of X_{d,n}.

A face is smooth when its irredundant generators are linearly independent
and have all Smith invariant factors equal to 1, i.e. they extend to a basis
of N.  Singular verdicts carry a +-1 dependency read off the shortest cycle
in the graph whose edges are the generators.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .cone import (
    FaceGeometry,
    Generator,
    _embedded_mask,
    _generators_for_mask,
    face_generators,
    orbit_dimension,
)
from .errors import BadParameters, SizeLimitExceeded
from .grassmann import SingularWindow, idn, singular_window, window_indices
from .lattice import DistributiveLattice
from .linalg import irredundant_indices, rank, smith_normal_form
from .poset import element_to_json, iter_bits

WINDOW_CHECK_LIMIT = 30


class Status(enum.Enum):
    SMOOTH = "smooth"
    SINGULAR = "singular"


_GROUND = object()


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: Status
    generators: tuple[Generator, ...]
    kept: tuple[Generator, ...]
    rank: int
    invariant_factors: tuple[int, ...] = ()
    dependency: tuple[tuple[int, Generator], ...] | None = None

    @property
    def smooth(self) -> bool:
        return self.status is Status.SMOOTH

    @property
    def pruned(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g not in self.kept)

    @property
    def pruning_fired(self) -> bool:
        return len(self.kept) != len(self.generators)

    @property
    def nonunimodular(self) -> bool:
        return any(f != 1 for f in self.invariant_factors)

    def replay(self) -> bool:
        """Re-derive the evidence from scratch and compare."""
        vecs = [g.vector for g in self.kept]
        if rank(vecs) != self.rank:
            return False
        if self.dependency is not None:
            dim = len(self.generators[0].vector)
            total = [0] * dim
            for c, g in self.dependency:
                for k, x in enumerate(g.vector):
                    total[k] += c * x
            if any(total) or not any(c for c, _ in self.dependency):
                return False
            return self.status is Status.SINGULAR
        if self.rank != len(vecs):
            return False
        if tuple(smith_normal_form(vecs)) != self.invariant_factors:
            return False
        return self.smooth == (not self.nonunimodular)

    def evidence(self) -> dict:
        if self.dependency is not None:
            return {
                "dependency": [[c, g.label()] for c, g in self.dependency],
            }
        if self.nonunimodular:
            return {"nonunimodular": list(self.invariant_factors)}
        return {"independent": True, "invariant_factors": list(self.invariant_factors)}


def shortest_cycle(gens: Iterable[Generator]) -> tuple[tuple[int, Generator], ...] | None:
    """A shortest +-1 dependency among Hibi generators.

    Every generator is the signed incidence vector of an edge: v_{y,y'} joins
    y to y', e_z joins z to an extra ground vertex.  Minimal dependencies are
    exactly the cycles of this graph.
    """
    gens = list(gens)
    ends = [(g.upper, g.lower if g.lower is not None else _GROUND) for g in gens]
    adj: dict = {}
    for k, (a, b) in enumerate(ends):
        adj.setdefault(a, []).append((b, k))
        adj.setdefault(b, []).append((a, k))
    best = None
    for k, (a, b) in enumerate(ends):
        # shortest a -> b path avoiding edge k
        prev = {a: None}
        queue = deque([a])
        while queue and b not in prev:
            u = queue.popleft()
            for w, e in adj[u]:
                if e != k and w not in prev:
                    prev[w] = (u, e)
                    queue.append(w)
        if b not in prev:
            continue
        path = []
        w = b
        while prev[w] is not None:
            u, e = prev[w]
            path.append((u, w, e))
            w = u
        cycle = [(b, a, k)] + path[::-1]
        if best is None or len(cycle) < len(best):
            best = cycle
    if best is None:
        return None
    terms = []
    for frm, to, e in best:
        g = gens[e]
        # vector = e_head - e_tail with head = lower (or z), tail = upper (or ground)
        head, tail = (g.lower, g.upper) if g.lower is not None else (g.upper, _GROUND)
        terms.append((1 if (frm, to) == (tail, head) else -1, e))
    terms.sort(key=lambda t: t[1])
    if terms[0][0] < 0:
        terms = [(-c, e) for c, e in terms]
    return tuple((c, gens[e]) for c, e in terms)


def verdict_for_generators(gens: tuple[Generator, ...]) -> SmoothnessVerdict:
    vecs = [g.vector for g in gens]
    kept = tuple(gens[i] for i in irredundant_indices(vecs)) if gens else ()
    kvecs = [g.vector for g in kept]
    r = rank(kvecs)
    if r < len(kept):
        return SmoothnessVerdict(Status.SINGULAR, gens, kept, r, dependency=shortest_cycle(kept))
    factors = tuple(smith_normal_form(kvecs)) if kept else ()
    status = Status.SMOOTH if all(f == 1 for f in factors) else Status.SINGULAR
    return SmoothnessVerdict(status, gens, kept, r, factors)


def is_smooth_face(L: DistributiveLattice, D: Iterable) -> SmoothnessVerdict:
    return verdict_for_generators(face_generators(L, D))


def gl_pairs(L: DistributiveLattice) -> list[tuple]:
    """Incomparable pairs (theta, delta) of join-and-meet irreducibles with
    the bitmask of [theta meet delta, theta join delta]."""
    jm = L.irreducibles.JM
    out = []
    for a in range(len(jm)):
        for b in range(a + 1, len(jm)):
            t, d = jm[a], jm[b]
            if L.poset.comparable(t, d):
                continue
            lo, hi = L.idx(L.meet(t, d)), L.idx(L.join(t, d))
            out.append((t, d, L.poset.up[lo] & L.poset.down[hi]))
    return out


def gl_criterion_mask(L: DistributiveLattice, dmask: int) -> bool:
    return all(dmask & box for _, _, box in gl_pairs_cached(L))


_GL_CACHE: dict = {}


def gl_pairs_cached(L: DistributiveLattice) -> list[tuple]:
    key = id(L)
    hit = _GL_CACHE.get(key)
    if hit is None or hit[0] is not L:
        hit = (L, gl_pairs(L))
        _GL_CACHE[key] = hit
    return hit[1]


def gl_criterion(L: DistributiveLattice, D: Iterable) -> bool:
    """Every incomparable JM pair's interval meets D."""
    return gl_criterion_mask(L, _embedded_mask(L, D))


# -- the singular locus of X_{d,n} ---------------------------------------
@dataclass(frozen=True)
class WindowRecord:
    window: SingularWindow
    generators: tuple[Generator, ...]
    matches_diamond: bool
    geometry: FaceGeometry
    verdict: SmoothnessVerdict
    multiplicity: int

    def to_json(self) -> dict:
        w = self.window
        js = element_to_json
        return {
            "i": w.i,
            "j": w.j,
            "mu": js(w.mu),
            "lambda": js(w.lam),
            "A": js(w.A),
            "B": js(w.B),
            "C": js(w.C),
            "W": [g.label() for g in self.generators],
            "matches_diamond": self.matches_diamond,
            "face_dim": self.geometry.face_dim,
            "orbit_codim": self.geometry.ambient_dim - self.geometry.orbit_dim,
            "verdict": self.verdict.status.value,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class ExhaustiveRecord:
    faces: int
    singular: int
    agreement: dict  # (smooth, no_window_contains, gl) -> count
    maximal_singular: tuple[frozenset, ...]
    maximal_are_windows: bool

    @property
    def disagreements(self) -> int:
        return sum(c for key, c in self.agreement.items() if len(set(key)) > 1)

    def to_json(self) -> dict:
        return {
            "faces": self.faces,
            "singular": self.singular,
            "agreement": [
                {"smooth": k[0], "no_window_contains": k[1], "gl_criterion": k[2], "count": v}
                for k, v in sorted(self.agreement.items())
            ],
            "disagreements": self.disagreements,
            "maximal_singular_count": len(self.maximal_singular),
            "maximal_singular_are_windows": self.maximal_are_windows,
        }


@dataclass(frozen=True)
class SingularLocusReport:
    d: int
    n: int
    windows: tuple[WindowRecord, ...]
    exhaustive: ExhaustiveRecord | None = None
    purity: bool = field(init=False)

    def __post_init__(self):
        pure = all(
            w.geometry.face_dim == 3 and w.geometry.ambient_dim - w.geometry.orbit_dim == 3
            for w in self.windows
        )
        if self.exhaustive is not None:
            pure = pure and self.exhaustive.maximal_are_windows
        object.__setattr__(self, "purity", pure)

    @property
    def ok(self) -> bool:
        good = self.purity and all(
            w.matches_diamond and not w.verdict.smooth and w.multiplicity == 2 for w in self.windows
        )
        if self.exhaustive is not None:
            good = good and self.exhaustive.disagreements == 0
        return good

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "n": self.n,
            "window_count": len(self.windows),
            "windows": [w.to_json() for w in self.windows],
            "purity": self.purity,
            "ok": self.ok,
        }
        if self.exhaustive is not None:
            out["exhaustive"] = self.exhaustive.to_json()
        return out


def window_generators_expected(L: DistributiveLattice, w: SingularWindow) -> frozenset:
    return frozenset(
        g for g in face_generators(L, ()) if (g.upper, g.lower) in w.diamond_edges
    )


def window_record(w: SingularWindow, multiplicity: int = 2) -> WindowRecord:
    L = idn(w.d, w.n)
    gens = face_generators(L, w.Lij)
    geom = FaceGeometry(rank([g.vector for g in gens]), orbit_dimension(L, w.Lij), len(L.J))
    return WindowRecord(
        w,
        gens,
        frozenset(gens) == window_generators_expected(L, w) and len(gens) == 4,
        geom,
        verdict_for_generators(gens),
        multiplicity,
    )


def exhaustive_scan(L: DistributiveLattice, windows: list[SingularWindow]) -> ExhaustiveRecord:
    wmasks = [L.mask(w.Lij) for w in windows]
    agreement: dict = {}
    singular_masks = []
    total = 0
    for dmask in L.embedded_masks():
        total += 1
        smooth = verdict_for_generators(_generators_for_mask(L, dmask)).smooth
        no_window = not any(dmask & ~wm == 0 for wm in wmasks)
        gl = gl_criterion_mask(L, dmask)
        key = (smooth, no_window, gl)
        agreement[key] = agreement.get(key, 0) + 1
        if not smooth:
            singular_masks.append(dmask)
    maximal = [
        s for s in singular_masks if not any(t != s and s & ~t == 0 for t in singular_masks)
    ]
    return ExhaustiveRecord(
        total,
        len(singular_masks),
        agreement,
        tuple(L.poset.from_mask(s) for s in sorted(maximal)),
        sorted(maximal) == sorted(set(wmasks)),
    )


def singular_locus_idn(d: int, n: int, exhaustive: bool = False) -> SingularLocusReport:
    if not (1 <= d < n):
        raise BadParameters(f"need 1 <= d < n, got d={d}, n={n}")
    if d * (n - d) > WINDOW_CHECK_LIMIT:
        raise BadParameters(f"d(n-d) = {d * (n - d)} exceeds the face-check guard {WINDOW_CHECK_LIMIT}")
    from .multiplicity import Window, face_mult

    L = idn(d, n)
    windows = [singular_window(d, n, i, j) for i, j in window_indices(d, n)]
    records = tuple(window_record(w, face_mult(Window(d, n, w.i, w.j))) for w in windows)
    ex = None
    if exhaustive:
        if len(L) > 24:
            raise SizeLimitExceeded(f"exhaustive scan needs #I_(d,n) <= 24, got {len(L)}")
        ex = exhaustive_scan(L, windows)
    return SingularLocusReport(d, n, records, ex)


def windows_containing(L: DistributiveLattice, D: Iterable) -> list[tuple[int, int]]:
    """Windows (i, j) with D inside L_ij, i.e. faces containing sigma_ij."""
    if not L.family or L.family[0] != "idn":
        raise BadParameters("windows are defined for I_{d,n} only")
    _, d, n = L.family
    dmask = L.mask(D)
    return [
        (i, j)
        for i, j in window_indices(d, n)
        if dmask & ~L.mask(singular_window(d, n, i, j).Lij) == 0
    ]


def _bits(mask: int) -> list[int]:
    return list(iter_bits(mask))
