"""Exploratory scan of all faces of a small lattice.

Faces are grouped by the isomorphism class of their H-poset, the join/meet
criterion is compared with the exact smoothness verdict, and multiplicities
are attached wherever a closed form is known.  Nothing here asserts that the
open conjectures hold; the report just collects evidence.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .cone import HPoset, _generators_for_mask, h_poset_from_generators
from .errors import SizeLimitExceeded
from .grassmann import jblock_union_face, singular_window, window_indices
from .lattice import DistributiveLattice
from .multiplicity import face_mult, fixed_point_mult, JBlockUnion
from .poset import element_to_json
from .smoothness import gl_criterion_mask, verdict_for_generators

HARNESS_MAX_ELEMENTS = 16
ISO_MAX_VERTICES = 24


def _digraph(H: HPoset) -> nx.DiGraph:
    G = nx.DiGraph()
    marked = set(H.marked)
    for v in H.vertices:
        G.add_node(v, marked=v in marked)
    G.add_edges_from(H.edges)
    return G


def h_isomorphic(H1: HPoset, H2: HPoset) -> bool:
    """Exact isomorphism of H-posets, respecting the e_z marks."""
    for H in (H1, H2):
        if len(H.vertices) > ISO_MAX_VERTICES:
            raise SizeLimitExceeded(f"isomorphism test capped at {ISO_MAX_VERTICES} vertices")
    if (len(H1.vertices), len(H1.edges), len(H1.marked)) != (len(H2.vertices), len(H2.edges), len(H2.marked)):
        return False
    return nx.is_isomorphic(
        _digraph(H1), _digraph(H2), node_match=lambda a, b: a["marked"] == b["marked"]
    )


def known_multiplicities(L: DistributiveLattice) -> dict[int, int]:
    """Face mask -> multiplicity for the faces with a closed form."""
    known = {0: fixed_point_mult(L)}
    if L.family and L.family[0] == "idn":
        _, d, n = L.family
        for i, j in window_indices(d, n):
            known[L.mask(singular_window(d, n, i, j).Lij)] = 2
        if d == 2:
            for blocks in _separated_blocks(n):
                spec = JBlockUnion(n, blocks)
                known[L.mask(jblock_union_face(n, list(blocks)))] = face_mult(spec)
    return known


def _separated_blocks(n: int, max_blocks: int = 3):
    def extend(start: int, acc: tuple):
        for i in range(start, n - 2):
            for k in range(0, n - i - 2):
                block = acc + ((i, k),)
                yield block
                if len(block) < max_blocks:
                    yield from extend(i + k + 2, block)

    yield from extend(1, ())


@dataclass
class HClass:
    representative: HPoset
    faces: list
    smooth: int = 0
    singular: int = 0
    multiplicities: dict | None = None

    @property
    def consistent(self) -> bool:
        return len(set(self.multiplicities.values())) <= 1

    def to_json(self) -> dict:
        H = self.representative
        js = element_to_json
        return {
            "vertices": len(H.vertices),
            "edges": len(H.edges),
            "marked": len(H.marked),
            "components": len(H.components),
            "example_edges": [[js(u), js(l)] for u, l in H.edges],
            "faces": len(self.faces),
            "smooth": self.smooth,
            "singular": self.singular,
            "known_multiplicities": sorted(set(self.multiplicities.values())),
            "consistent": self.consistent,
        }


@dataclass(frozen=True)
class HarnessReport:
    faces: int
    agreement: dict  # (gl_criterion, smooth) -> count
    disagreements: tuple[frozenset, ...]
    classes: tuple[HClass, ...]

    @property
    def criterion_matches(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        js = element_to_json
        return {
            "faces": self.faces,
            "agreement": [
                {"gl_criterion": k[0], "smooth": k[1], "count": v} for k, v in sorted(self.agreement.items())
            ],
            "disagreements": [sorted(js(x) for x in D) for D in self.disagreements],
            "h_classes": [c.to_json() for c in self.classes],
        }


def conjecture_harness(L: DistributiveLattice) -> HarnessReport:
    if len(L) > HARNESS_MAX_ELEMENTS:
        raise SizeLimitExceeded(f"harness needs #L <= {HARNESS_MAX_ELEMENTS}, got {len(L)}")
    known = known_multiplicities(L)
    agreement: dict = {}
    bad = []
    buckets: dict = {}
    total = 0
    for dmask in L.embedded_masks():
        total += 1
        gens = _generators_for_mask(L, dmask)
        verdict = verdict_for_generators(gens)
        gl = gl_criterion_mask(L, dmask)
        key = (gl, verdict.smooth)
        agreement[key] = agreement.get(key, 0) + 1
        if gl != verdict.smooth:
            bad.append(L.poset.from_mask(dmask))
        H = h_poset_from_generators(L, gens)
        sig = (len(H.vertices), len(H.edges), len(H.marked), len(H.components))
        bucket = buckets.setdefault(sig, [])
        cls = next((c for c in bucket if h_isomorphic(c.representative, H)), None)
        if cls is None:
            cls = HClass(H, [], multiplicities={})
            bucket.append(cls)
        cls.faces.append(dmask)
        if verdict.smooth:
            cls.smooth += 1
            cls.multiplicities[dmask] = 1
        else:
            cls.singular += 1
        if dmask in known:
            cls.multiplicities[dmask] = known[dmask]
    classes = [c for sig in sorted(buckets) for c in buckets[sig]]
    return HarnessReport(total, agreement, tuple(bad), tuple(classes))
