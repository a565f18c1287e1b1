"""Temperley-Lieb immanants of Jacobi-Trudi matrices, shuffle tableaux and their crystals."""

from .crystal import build_graph, is_yamanouchi, reading_word, verify_stembridge
from .immanants import ImmanantQuery, all_immanants, imm_eval, lr_coefficient
from .partitions import Partition, SkewShape
from .shuffle import ShuffleTableau, enumerate_shuffle, tl_type
from .sympoly import SymPoly, schur_expand, schur_poly
from .temperley_lieb import NoncrossingMatching, tl_basis

__all__ = [
    "ImmanantQuery",
    "NoncrossingMatching",
    "Partition",
    "ShuffleTableau",
    "SkewShape",
    "SymPoly",
    "all_immanants",
    "build_graph",
    "enumerate_shuffle",
    "imm_eval",
    "is_yamanouchi",
    "lr_coefficient",
    "reading_word",
    "schur_expand",
    "schur_poly",
    "tl_basis",
    "tl_type",
    "verify_stembridge",
]
