"""Exact computations on Hibi toric varieties of finite distributive lattices."""
from .cone import Face, Generator, cone_generators, face, face_generators, face_geometry, face_support
from .errors import HibiError
from .grassmann import counterexample_lattice, idn, singular_window
from .hilbert import SqFreeIdeal, lattice_hilbert_crosscheck, sqfree_hilbert, stanley_reisner_ideal
from .lattice import DistributiveLattice, boolean_lattice, chain, diamond, ideal_lattice
from .multiplicity import JBlock, JBlockUnion, Window, catalan, face_mult, fixed_point_mult, hook_mult
from .poset import Poset, build_poset
from .smoothness import gl_criterion, is_smooth_face, singular_locus_idn

__all__ = [
    "DistributiveLattice",
    "Face",
    "Generator",
    "HibiError",
    "JBlock",
    "JBlockUnion",
    "Poset",
    "SqFreeIdeal",
    "Window",
    "boolean_lattice",
    "build_poset",
    "catalan",
    "chain",
    "cone_generators",
    "counterexample_lattice",
    "diamond",
    "face",
    "face_generators",
    "face_geometry",
    "face_mult",
    "face_support",
    "fixed_point_mult",
    "gl_criterion",
    "hook_mult",
    "ideal_lattice",
    "idn",
    "is_smooth_face",
    "lattice_hilbert_crosscheck",
    "singular_locus_idn",
    "singular_window",
    "sqfree_hilbert",
    "stanley_reisner_ideal",
]
