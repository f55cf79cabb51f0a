"""Executable invariant suites, one per module, run by ``hibi verify``.

Each suite returns a list of ``Check`` records; ``max_size`` bounds the
number of lattice elements used by the exhaustive scans.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .cone import (
    _generators_for_mask,
    cone_generators,
    distinguished_point,
    face_support,
    orbit_dimension,
)
from .errors import HibiError
from .grassmann import (
    JBlockSpec,
    classify_element,
    counterexample_lattice,
    idn,
    jblock_face,
    mu_lambda,
    singular_window,
    tilde_i2,
    window_indices,
)
from .hilbert import lattice_hilbert_crosscheck, sqfree_hilbert, stanley_reisner_ideal
from .lattice import DistributiveLattice, boolean_lattice, chain, diamond, ideal_lattice
from .linalg import rank, smith_normal_form
from .multiplicity import JBlock, catalan, face_mult, fixed_point_mult, hook_mult
from .poset import Poset
from .smoothness import exhaustive_scan, shortest_cycle, verdict_for_generators

HOOK_LIMIT = 24


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        res = fn()
    except HibiError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(res, tuple):
        return Check(name, bool(res[0]), res[1])
    return Check(name, bool(res))


def random_poset(n: int, rng: random.Random, p: float = 0.3) -> Poset:
    """A random poset on 0..n-1 (relations only go from smaller to larger labels)."""
    rel = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            rel[a][b] = rng.random() < p
    for k in range(n):
        for a in range(n):
            if rel[a][k]:
                for b in range(n):
                    if rel[k][b]:
                        rel[a][b] = True
    covers = [
        (b, a)
        for a in range(n)
        for b in range(a + 1, n)
        if rel[a][b] and not any(rel[a][c] and rel[c][b] for c in range(n))
    ]
    return Poset(range(n), covers)


def corpus(max_size: int = 16) -> list[tuple[str, DistributiveLattice]]:
    items: list[tuple[str, DistributiveLattice]] = [(f"chain{k}", chain(k)) for k in range(1, 6)]
    items += [
        ("diamond", diamond()),
        ("boolean2", boolean_lattice(2)),
        ("boolean3", boolean_lattice(3)),
        ("boolean4", boolean_lattice(4)),
        ("I(2,4)", idn(2, 4)),
        ("I(2,5)", idn(2, 5)),
        ("I(3,5)", idn(3, 5)),
        ("I(2,6)", idn(2, 6)),
        ("I(3,6)", idn(3, 6)),
        ("counterexample", counterexample_lattice()),
        ("tilde(5)", tilde_i2(5)),
        ("tilde(6)", tilde_i2(6)),
    ]
    rng = random.Random(7)
    for k in range(4):
        items.append((f"ideals(random{k})", ideal_lattice(random_poset(5, rng))))
    return [(name, L) for name, L in items if len(L) <= max_size]


def counterexample_intervals(max_size: int = 12) -> list[DistributiveLattice]:
    C = counterexample_lattice()
    seen: list[Poset] = []
    out = []
    for a in C.elements:
        for b in C.elements:
            if a != b and C.leq(a, b):
                P = C.poset.interval(a, b)
                if len(P) <= max_size and P not in seen:
                    seen.append(P)
                    out.append(DistributiveLattice(P))
    return out


def _idn_small(max_size: int, limit: int = 24):
    for n in range(3, 10):
        for d in range(2, n - 1):
            L = idn(d, n)
            if len(L) <= min(max_size, limit):
                yield d, n, L


# -- suites --------------------------------------------------------------
def poset_suite(max_size: int) -> list[Check]:
    checks = []
    rng = random.Random(11)

    def ideals_form_lattice():
        for _ in range(30):
            P = random_poset(rng.randint(1, 6), rng)
            L = ideal_lattice(P)
            if len(L.J) != len(P) + 1:
                return False, f"#J = {len(L.J)} for a {len(P)}-element poset"
        return True, "30 random posets"

    def chain_count_brute():
        for name, L in corpus(min(max_size, 12)):
            P = L.poset
            bottom = P.idx(P.bottom)

            def walk(x):
                ups = P.upper_covers[x]
                return 1 if not ups else sum(walk(u) for u in ups)

            if walk(bottom) != P.maximal_chain_count():
                return False, name
        return True, ""

    def idn_graded():
        for d, n, L in _idn_small(max_size, 10**9):
            g = L.poset.grading()
            if not g.graded or g.rank != d * (n - d):
                return False, f"I({d},{n})"
        return True, ""

    checks.append(_check("ideal lattices have #J = #P + 1", ideals_form_lattice))
    checks.append(_check("chain-count DP matches path enumeration", chain_count_brute))
    checks.append(_check("I(d,n) graded of rank d(n-d)", idn_graded))
    return checks


def grassmann_suite(max_size: int) -> list[Check]:
    def j_count():
        for n in range(3, 10):
            for d in range(1, n):
                L = idn(d, n)
                if len(L.J) != d * (n - d) + 1 or L.poset.grading().rank + 1 != len(L.J):
                    return False, f"I({d},{n})"
        return True, ""

    def segment_rule():
        for n in range(3, 10):
            for d in range(1, min(n, 5)):
                L = idn(d, n)
                irr = L.irreducibles
                J, M = set(irr.J), set(irr.M)
                for x in L.elements:
                    c = classify_element(d, n, x)
                    if (c.join_irreducible, c.meet_irreducible) != (x in J, x in M):
                        return False, f"{x} in I({d},{n})"
        return True, ""

    def diamonds_at_mu():
        for n in range(4, 10):
            for d in range(2, min(n - 1, 5)):
                L = idn(d, n)
                JP = L.j_poset
                mus = {mu_lambda(d, n, i, j)[0] for i, j in window_indices(d, n)}
                for y in range(len(JP)):
                    ups = JP.upper_covers[y]
                    for a, b in combinations(ups, 2):
                        if set(JP.upper_covers[a]) & set(JP.upper_covers[b]) and JP.elements[y] not in mus:
                            return False, f"diamond at {JP.elements[y]} in I({d},{n})"
        return True, ""

    def windows_embedded():
        for n in range(4, 10):
            for d in range(2, min(n - 1, 5)):
                L = idn(d, n)
                for i, j in window_indices(d, n):
                    if not L.is_embedded_sublattice(singular_window(d, n, i, j).Lij):
                        return False, f"L_{i}{j} of I({d},{n})"
        return True, ""

    return [
        _check("#J(I(d,n)) = d(n-d)+1 = maximal chain length", j_count),
        _check("segment rule matches cover counts (d<=4, n<=9)", segment_rule),
        _check("every J-diamond sits on some mu_ij (d<=4, n<=9)", diamonds_at_mu),
        _check("every L_ij is an embedded sublattice (d<=4, n<=9)", windows_embedded),
    ]


def cone_suite(max_size: int) -> list[Check]:
    lattices = corpus(min(max_size, 16))

    def round_trip():
        n = 0
        for name, L in lattices:
            for dmask in L.embedded_masks():
                D = L.poset.from_mask(dmask)
                if face_support(L, _generators_for_mask(L, dmask)) != D:
                    return False, f"{name}: {sorted(D, key=L.idx)}"
                n += 1
        return True, f"{n} faces"

    def dims_add_up():
        for name, L in lattices:
            for dmask in L.embedded_masks():
                D = L.poset.from_mask(dmask)
                fd = rank([g.vector for g in _generators_for_mask(L, dmask)])
                if fd + orbit_dimension(L, D) != len(L.J):
                    return False, f"{name}: {sorted(D, key=L.idx)}"
        return True, ""

    def entries():
        for name, L in lattices:
            for g in cone_generators(L):
                ones = sorted(x for x in g.vector if x)
                want = [1] if g.lower is None else [-1, 1]
                if ones != want:
                    return False, f"{name}: {g.label()}"
        return True, ""

    def binomials():
        for name, L in lattices:
            for dmask in L.embedded_masks():
                if L.binomial_violations(distinguished_point(L, L.poset.from_mask(dmask))):
                    return False, name
        return True, ""

    return [
        _check("face_support inverts face_generators", round_trip),
        _check("face_dim + orbit_dim = #J", dims_add_up),
        _check("generator entries are a single 1 or a +1/-1 pair", entries),
        _check("distinguished points satisfy every binomial", binomials),
    ]


def smoothness_suite(max_size: int) -> list[Check]:
    checks = []
    for d, n, L in _idn_small(max_size):
        windows = [singular_window(d, n, i, j) for i, j in window_indices(d, n)]

        def equivalence(L=L, windows=windows):
            ex = exhaustive_scan(L, windows)
            return ex.disagreements == 0 and ex.maximal_are_windows, f"{ex.faces} faces, {ex.singular} singular"

        def loops(L=L, windows=windows):
            diamonds = [w.diamond_edges for w in windows]
            for dmask in L.embedded_masks():
                v = verdict_for_generators(_generators_for_mask(L, dmask))
                if v.smooth:
                    continue
                if v.dependency is None:
                    return False, "singular without a dependency"
                edges = {(g.upper, g.lower) for _, g in v.dependency}
                if not any(dia <= edges for dia in diamonds) or not v.replay():
                    return False, str(sorted(L.poset.from_mask(dmask)))
            return True, ""

        checks.append(_check(f"I({d},{n}): smooth <=> no window <=> criterion", equivalence))
        checks.append(_check(f"I({d},{n}): singular dependencies contain a window diamond", loops))

    def w_sigma():
        count = 0
        for n in range(4, 10):
            for d in range(2, min(n - 1, 5)):
                L = idn(d, n)
                for i, j in window_indices(d, n):
                    w = singular_window(d, n, i, j)
                    gens = _generators_for_mask(L, L.mask(w.Lij))
                    if {(g.upper, g.lower) for g in gens} != w.diamond_edges:
                        return False, f"sigma_{i}{j} of I({d},{n})"
                    if rank([g.vector for g in gens]) != 3:
                        return False, f"rank of sigma_{i}{j} of I({d},{n})"
                    count += 1
        return True, f"{count} windows"

    def snf_permutation():
        rng = random.Random(3)
        for _ in range(50):
            m, n = rng.randint(1, 6), rng.randint(1, 6)
            M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
            rows = M[:]
            rng.shuffle(rows)
            cols = list(range(n))
            rng.shuffle(cols)
            P = [[r[c] for c in cols] for r in rows]
            if smith_normal_form(M) != smith_normal_form(P):
                return False, str(M)
        return True, "50 random matrices"

    def counterexample_disagrees():
        C = counterexample_lattice()
        gens = _generators_for_mask(C, C.mask([(1, 5, 6)]))
        v = verdict_for_generators(gens)
        return not v.smooth and shortest_cycle(gens) is not None, f"{len(gens)} generators"

    checks.append(_check("W(sigma_ij) is the window diamond, rank 3 (d<=4, n<=9)", w_sigma))
    checks.append(_check("SNF invariant under row/column permutation", snf_permutation))
    checks.append(_check("counterexample face {156} is singular", counterexample_disagrees))
    return checks


def multiplicity_suite(max_size: int) -> list[Check]:
    def catalan_chains():
        return all(fixed_point_mult(idn(2, n)) == catalan(n - 2) for n in range(4, 13)), "n = 4..12"

    def hooks():
        count = 0
        for n in range(2, HOOK_LIMIT + 2):
            for d in range(1, n):
                if d * (n - d) <= HOOK_LIMIT:
                    if hook_mult(d, n) != fixed_point_mult(idn(d, n)) or hook_mult(d, n) != hook_mult(n - d, n):
                        return False, f"I({d},{n})"
                    count += 1
        return True, f"{count} pairs"

    def jblock_independent():
        for k in range(0, 6):
            vals = {face_mult(JBlock(n, i, k)) for n in range(4, 10) for i in range(1, n - 2 - k)}
            if vals and vals != {catalan(k + 2)}:
                return False, f"k={k}: {vals}"
        return True, ""

    def jblock_faces():
        for n in range(4, 10):
            L = idn(2, n)
            for i in range(1, n - 2):
                for k in range(0, n - i - 2):
                    s = JBlockSpec(n, i, k)
                    lo, hi = s.generator_interval
                    box = L.j_poset.interval(lo, hi)
                    want = {(u, l) for u, l in box.covers()}
                    got = {(g.upper, g.lower) for g in _generators_for_mask(L, L.mask(jblock_face(n, i, k)))}
                    if got != want:
                        return False, f"n={n}, i={i}, k={k}"
        return True, ""

    def stanley_reisner():
        for name, L in corpus(min(max_size, 24)):
            H = sqfree_hilbert(stanley_reisner_ideal(L))
            if H.degree != fixed_point_mult(L) or H.krull_dim != L.poset.grading().rank + 1:
                return False, name
        return True, ""

    def three_way():
        lats = [L for _, L in corpus(min(max_size, 12))] + counterexample_intervals(min(max_size, 12))
        for L in lats:
            if not lattice_hilbert_crosscheck(L, 3).ok:
                return False, repr(L)
        return True, f"{len(lats)} lattices"

    return [
        _check("fixed-point multiplicity of I(2,n) is Catalan", catalan_chains),
        _check("hook-length formula matches chain count, d(n-d) <= 24", hooks),
        _check("J-block multiplicity depends only on k", jblock_independent),
        _check("J-block faces are generated by the covers of their box (n<=9)", jblock_faces),
        _check("Stanley-Reisner degree and dimension match the lattice", stanley_reisner),
        _check("multichains = Stanley-Reisner = semigroup counts (m<=3)", three_way),
    ]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "poset": poset_suite,
    "grassmann": grassmann_suite,
    "cone": cone_suite,
    "smoothness": smoothness_suite,
    "multiplicity": multiplicity_suite,
}


def run_suites(names: list[str], max_size: int) -> dict[str, list[Check]]:
    return {name: SUITES[name](max_size) for name in names}
