"""Torsion classes of representations of the linear quiver A_n and the Tamari lattice."""

from .gfp import PrimeField
from .intervals import Interval, Rep, ext_classify, hom_dim, quotients_of, surjects_onto
from .poset import Poset, poset_isomorphic
from .rotation import rotation_lattice_oracle
from .subcat import AVector, avector_of, enumerate_torsion_brute, f_set, is_torsion, torsion_closure
from .tamari import (
    BracketVector,
    TiltingObject,
    decode,
    encode,
    enumerate_bracket_vectors,
    enumerate_tilting,
    gen,
    hasse,
    is_bracket_vector,
    join,
    leq,
    meet,
    rs_poset,
    sincere_interval,
)

__version__ = "0.1.0"
