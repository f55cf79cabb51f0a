"""Multiplicities of X(L) at distinguished points.

Only the families with a closed form are supported: the fixed point (number
of maximal chains, hook lengths for I_{d,n}), the singular windows, and
J-blocks of X_{2,n} together with unions of separated blocks.  Anything else
raises ``UnsupportedFace`` rather than guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod

from .errors import BadParameters, UnsupportedFace
from .grassmann import JBlockSpec, idn, jblock_union_face, singular_window
from .lattice import DistributiveLattice


def catalan(m: int) -> int:
    if m < 0:
        raise BadParameters(f"catalan needs m >= 0, got {m}")
    return comb(2 * m, m) // (m + 1)


def fixed_point_mult(L: DistributiveLattice) -> int:
    """Multiplicity at the torus-fixed point: the number of maximal chains of L."""
    return L.poset.maximal_chain_count()


def hook_lengths(rows: int, cols: int) -> list[int]:
    return [(cols - c) + (rows - r) - 1 for r in range(rows) for c in range(cols)]


def hook_mult(d: int, n: int) -> int:
    """Standard Young tableaux of the d x (n-d) rectangle."""
    if not (isinstance(d, int) and isinstance(n, int)) or not (1 <= d < n):
        raise BadParameters(f"need 1 <= d < n, got d={d}, n={n}")
    rows, cols = sorted((d, n - d))
    return factorial(rows * cols) // prod(hook_lengths(rows, cols))


@dataclass(frozen=True)
class Window:
    d: int
    n: int
    i: int
    j: int


@dataclass(frozen=True)
class JBlock:
    n: int
    i: int
    k: int


@dataclass(frozen=True)
class JBlockUnion:
    n: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))


@dataclass(frozen=True)
class GenericFace:
    """An arbitrary face; carried only so the refusal can name it."""

    lattice: DistributiveLattice
    D: frozenset


FaceSpec = Window | JBlock | JBlockUnion | GenericFace


def _block_mult(k: int) -> int:
    value = catalan(k + 2)
    check = fixed_point_mult(idn(2, k + 4))
    if value != check:
        raise AssertionError(f"Cat_{k + 2} = {value} but I_(2,{k + 4}) has {check} maximal chains")
    return value


def face_mult(spec: FaceSpec) -> int:
    if isinstance(spec, Window):
        singular_window(spec.d, spec.n, spec.i, spec.j)
        return 2
    if isinstance(spec, JBlock):
        s = JBlockSpec(spec.n, spec.i, spec.k)
        return _block_mult(s.k)
    if isinstance(spec, JBlockUnion):
        if not 1 <= len(spec.blocks) <= 3:
            raise UnsupportedFace(f"unions of {len(spec.blocks)} blocks are outside the checked range 1..3")
        jblock_union_face(spec.n, list(spec.blocks))
        return prod(_block_mult(k) for _, k in spec.blocks)
    if isinstance(spec, GenericFace):
        from .cone import h_poset

        H = h_poset(spec.lattice, spec.D)
        raise UnsupportedFace(
            "no closed form for this face; its H-poset is attached", h_components=H.components
        )
    raise BadParameters(f"unknown face spec {spec!r}")
