"""Exact integer and rational linear algebra.

Rank and null vectors use fraction arithmetic, the Smith normal form works
over the integers, and cone membership is decided by a phase-one simplex
over ``Fraction`` with Bland's rule, so nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import SizeLimitExceeded

Matrix = Sequence[Sequence[int]]

MAX_CONE_VECTORS = 64
MAX_CONE_DIM = 64


def _echelon(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(rows: Matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    A = [[int(x) for x in r] for r in rows]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            A[i] = [(piv * x - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = piv
        r += 1
        if r == m:
            break
    return r


def integer_dependency(rows: Matrix) -> list[int] | None:
    """Integer coefficients c, not all zero, with sum c_i * rows[i] = 0.

    Returns None when the rows are linearly independent.  The result is
    primitive (gcd 1) with a positive first nonzero entry.
    """
    rows = list(rows)
    if not rows:
        return None
    k = len(rows)
    # Null vectors of the transpose: solve sum_i c_i row_i = 0.
    cols = list(zip(*rows))
    A, pivots = _echelon([list(c) for c in cols])
    free = [j for j in range(k) if j not in pivots]
    if not free:
        return None
    f = free[0]
    sol = [Fraction(0)] * k
    sol[f] = Fraction(1)
    for r, pc in enumerate(pivots):
        sol[pc] = -A[r][f]
    den = lcm(*(x.denominator for x in sol))
    ints = [int(x * den) for x in sol]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return ints


def smith_normal_form(rows: Matrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""
    A = [[int(x) for x in r] for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best[0]):
                    best = (abs(A[i][j]), i, j)
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if dirty:
                # a smaller remainder appeared in row t or column t
                cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, pi, pj = min(cands)
                A[t], A[pi] = A[pi], A[t]
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def cone_contains(generators: Matrix, target: Sequence[int]) -> bool:
    """Whether ``target`` is a nonnegative rational combination of ``generators``."""
    gens = [list(g) for g in generators]
    dim = len(target)
    if not gens:
        return all(x == 0 for x in target)
    k = len(gens)
    # rows: one equation per coordinate, columns: lambda_1..lambda_k, artificials, rhs
    T = []
    for i in range(dim):
        row = [Fraction(g[i]) for g in gens]
        b = Fraction(target[i])
        if b < 0:
            row = [-x for x in row]
            b = -b
        art = [Fraction(0)] * dim
        art[i] = Fraction(1)
        T.append(row + art + [b])
    basis = [k + i for i in range(dim)]
    obj = [sum(T[i][j] for i in range(dim)) for j in range(k)] + [Fraction(0)] * dim
    obj.append(sum(T[i][-1] for i in range(dim)))
    while True:
        enter = next((j for j in range(k) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(dim):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            break  # unbounded direction; cannot happen while obj[-1] >= 0
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(dim):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, T[leave])]
        basis[leave] = enter
    return obj[-1] == 0


def irredundant_indices(vectors: Matrix) -> list[int]:
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if len(vecs) > MAX_CONE_VECTORS:
        raise SizeLimitExceeded(f"at most {MAX_CONE_VECTORS} vectors, got {len(vecs)}")
    if vecs and len(vecs[0]) > MAX_CONE_DIM:
        raise SizeLimitExceeded(f"dimension at most {MAX_CONE_DIM}, got {len(vecs[0])}")
    keep = list(range(len(vecs)))
    full = rank(vecs)
    for i in range(len(vecs)):
        others = [vecs[j] for j in keep if j != i]
        if not any(vecs[i]):
            keep.remove(i)
            continue
        # once something is dropped the span is unchanged, so ``full`` stays valid
        if rank(others) < full:
            continue
        if cone_contains(others, vecs[i]):
            keep.remove(i)
    return keep


def irredundant_generators(vectors: Matrix) -> list[tuple[int, ...]]:
    """Drop every vector lying in the cone spanned by the remaining ones."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    return [vecs[i] for i in irredundant_indices(vecs)]
