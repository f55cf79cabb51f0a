"""The cone of X(L) and its faces, indexed by embedded sublattices.

Vectors live in N = Z^J with the basis e_y, y in J(L), ordered as
``L.J``.  The cone is generated by e_z for z maximal in J and by
e_{y'} - e_y for every cover (y, y') of J.  A functional f_{I_a} is the
0/1 covector of the Birkhoff ideal I_a.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import BadParameters, GradingMismatch, NotEmbedded, NotGenerators
from .lattice import DistributiveLattice
from .linalg import rank
from .poset import Poset, element_to_json, iter_bits, normalize_element, popcount


class Generator(NamedTuple):
    """e_z when ``lower`` is None, otherwise v_{y,y'} = e_{y'} - e_y for the
    J-cover ``(upper, lower) = (y, y')``."""

    upper: object
    lower: object | None
    vector: tuple[int, ...]

    @property
    def is_ray_of_maximal(self) -> bool:
        return self.lower is None

    def label(self) -> str:
        if self.lower is None:
            return f"e_{_name(self.upper)}"
        return f"e_{_name(self.lower)} - e_{_name(self.upper)}"


def _name(x) -> str:
    if isinstance(x, tuple):
        return "".join(map(str, x)) if all(0 <= v < 10 for v in x) else ",".join(map(str, x))
    return str(x)


@lru_cache(maxsize=256)
def cone_generators(L: DistributiveLattice) -> tuple[Generator, ...]:
    JP = L.j_poset
    pos = L.j_index
    dim = len(L.J)
    gens = []
    cover_list = sorted(JP.covers(), key=lambda c: (pos[c[0]], pos[c[1]]))
    for y, yp in cover_list:
        v = [0] * dim
        v[pos[yp]] += 1
        v[pos[y]] -= 1
        gens.append(Generator(y, yp, tuple(v)))
    for z in sorted(JP.maximal(), key=pos.get):
        v = [0] * dim
        v[pos[z]] = 1
        gens.append(Generator(z, None, tuple(v)))
    return tuple(gens)


@lru_cache(maxsize=256)
def _sign_masks(L: DistributiveLattice) -> tuple[tuple[int, int], ...]:
    out = []
    for g in cone_generators(L):
        pos = sum(1 << k for k, c in enumerate(g.vector) if c > 0)
        neg = sum(1 << k for k, c in enumerate(g.vector) if c < 0)
        out.append((pos, neg))
    return tuple(out)


def functional_eval(L: DistributiveLattice, alpha, v: Sequence[int]) -> int:
    """f_{I_alpha}(v) = sum of v over the Birkhoff ideal of alpha."""
    if isinstance(v, Generator):
        v = v.vector
    if len(v) != len(L.J):
        raise BadParameters(f"vector has {len(v)} coordinates, J has {len(L.J)}")
    ideal = L.ideal_masks[L.idx(alpha)]
    return sum(v[k] for k in iter_bits(ideal))


def _embedded_mask(L: DistributiveLattice, D: Iterable) -> int:
    mask = L.mask(normalize_element(x) for x in D)
    if not L.is_embedded_mask(mask):
        raise NotEmbedded(f"{sorted(L.poset.from_mask(mask), key=L.idx)!r} is not an embedded sublattice")
    return mask


def _generators_for_mask(L: DistributiveLattice, dmask: int) -> tuple[Generator, ...]:
    ideals = [L.ideal_masks[a] for a in iter_bits(dmask)]
    out = []
    for g, (pos, neg) in zip(cone_generators(L), _sign_masks(L)):
        if all(popcount(I & pos) == popcount(I & neg) for I in ideals):
            out.append(g)
    return tuple(out)


def face_generators(L: DistributiveLattice, D: Iterable) -> tuple[Generator, ...]:
    """W(tau) for the face whose embedded sublattice is ``D``."""
    return _generators_for_mask(L, _embedded_mask(L, D))


def face_support(L: DistributiveLattice, vectors: Iterable) -> frozenset:
    """The embedded sublattice D of the smallest face containing ``vectors``."""
    by_vector = {g.vector: k for k, g in enumerate(cone_generators(L))}
    masks = _sign_masks(L)
    chosen = []
    for v in vectors:
        key = v.vector if isinstance(v, Generator) else tuple(int(c) for c in v)
        if key not in by_vector:
            raise NotGenerators(f"{key!r} is not a generator of the cone")
        chosen.append(masks[by_vector[key]])
    D = 0
    for a in range(len(L)):
        I = L.ideal_masks[a]
        if all(popcount(I & pos) == popcount(I & neg) for pos, neg in chosen):
            D |= 1 << a
    return L.poset.from_mask(D)


def distinguished_point(L: DistributiveLattice, D: Iterable) -> tuple[int, ...]:
    mask = _embedded_mask(L, D)
    return tuple((mask >> a) & 1 for a in range(len(L)))


@dataclass(frozen=True)
class HComponent:
    vertices: tuple
    edges: tuple
    marked: tuple


@dataclass(frozen=True)
class HPoset:
    """Subposet of J(L) traced out by the generators of a face.

    Hasse edges are the covers ``(y, y')`` with e_{y'} - e_y in W(tau);
    ``marked`` lists the maximal z with e_z in W(tau).
    """

    vertices: tuple
    edges: tuple
    marked: tuple
    components: tuple[HComponent, ...]

    def as_poset(self) -> Poset:
        return Poset(self.vertices, self.edges)

    def component_posets(self) -> list[Poset]:
        return [Poset(c.vertices, c.edges) for c in self.components]


def h_poset_from_generators(L: DistributiveLattice, gens: Iterable[Generator]) -> HPoset:
    pos = L.j_index
    gens = list(gens)
    edges = tuple((g.upper, g.lower) for g in gens if g.lower is not None)
    marked = tuple(sorted((g.upper for g in gens if g.lower is None), key=pos.get))
    verts = set(marked)
    for u, l in edges:
        verts.update((u, l))
    vertices = tuple(sorted(verts, key=pos.get))

    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, l in edges:
        ru, rl = find(u), find(l)
        if ru != rl:
            parent[max(ru, rl, key=pos.get)] = min(ru, rl, key=pos.get)
    groups: dict = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for root in sorted(groups, key=pos.get):
        vs = set(groups[root])
        comps.append(
            HComponent(
                tuple(groups[root]),
                tuple(e for e in edges if e[0] in vs),
                tuple(z for z in marked if z in vs),
            )
        )
    return HPoset(vertices, edges, marked, tuple(comps))


def h_poset(L: DistributiveLattice, D: Iterable) -> HPoset:
    return h_poset_from_generators(L, face_generators(L, D))


@dataclass(frozen=True)
class FaceGeometry:
    face_dim: int
    orbit_dim: int
    ambient_dim: int

    @property
    def consistent(self) -> bool:
        return self.face_dim + self.orbit_dim == self.ambient_dim


def orbit_dimension(L: DistributiveLattice, D: Iterable) -> int:
    """Number of elements in a maximal chain of D (0 for the empty set)."""
    D = list(D)
    if not D:
        return 0
    sub = L.poset.induced(D)
    g = sub.grading()
    if not g.graded:
        raise GradingMismatch(f"embedded sublattice is not graded: {g.reason}")
    return g.rank + 1


def face_geometry(L: DistributiveLattice, D: Iterable) -> FaceGeometry:
    D = list(D)
    W = face_generators(L, D)
    return FaceGeometry(rank([g.vector for g in W]), orbit_dimension(L, D), len(L.J))


@dataclass(frozen=True)
class Face:
    lattice: DistributiveLattice
    D: tuple
    W: tuple[Generator, ...]
    H: HPoset
    geometry: FaceGeometry

    @property
    def dim(self) -> int:
        return self.geometry.face_dim

    def to_json(self) -> dict:
        js = element_to_json
        return {
            "D": [js(x) for x in self.D],
            "W": [list(g.vector) for g in self.W],
            "W_labels": [g.label() for g in self.W],
            "face_dim": self.geometry.face_dim,
            "orbit_dim": self.geometry.orbit_dim,
            "ambient_dim": self.geometry.ambient_dim,
            "H_components": [
                {
                    "vertices": [js(v) for v in c.vertices],
                    "edges": [[js(u), js(l)] for u, l in c.edges],
                    "marked": [js(z) for z in c.marked],
                }
                for c in self.H.components
            ],
        }


def face(L: DistributiveLattice, D: Iterable) -> Face:
    D = sorted({normalize_element(x) for x in D}, key=L.idx)
    W = face_generators(L, D)
    geom = FaceGeometry(rank([g.vector for g in W]), orbit_dimension(L, D), len(L.J))
    return Face(L, tuple(D), W, h_poset_from_generators(L, W), geom)
