"""Orbit combinatorics of toroidal reductive group embeddings.

Weyl groups with Bruhat order and parabolic quotients, combinatorial
embedding models (boundary divisor families with their map to the
wonderful compactification), the double-Borel orbit index set [K, v, w],
two equivalent closure-containment criteria, materialized orbit posets,
and exhaustive verification suites, all at desk scale with exact integer
arithmetic.
"""

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from ._kernels import available_backends
from .coxeter import (WeylElement, WeylGroup, format_word, parse_word,
                      weyl_group)
from .embedding import (EmbeddingModel, dumps, group_model, load_model, loads,
                        save_model, wonderful_model)
from .errors import (ContextMismatchError, InvalidCartanError,
                     ModelParseError, ModelValidationError, NotFiniteTypeError,
                     OrbitPosetError, OrbitValidationError, SizeBoundError)
from .orbits import (Orbit, closure_leq, closure_leq_bclosure,
                     divisorial_orbits, enumerate_orbits, format_orbit,
                     make_orbit, normalize_orbit, orbit_count, parse_orbit)
from .poset import OrbitPoset, build_poset, covers, maximal_below
from .rootsys import CartanDatum, RootSystem, build_root_system
from .verify import VerifyReport, verify_poset, verify_suite

__version__ = "0.1.0"

__all__ = [
    "CartanDatum", "RootSystem", "build_root_system",
    "WeylGroup", "WeylElement", "weyl_group", "format_word", "parse_word",
    "EmbeddingModel", "wonderful_model", "group_model",
    "load_model", "save_model", "loads", "dumps",
    "Orbit", "make_orbit", "normalize_orbit", "enumerate_orbits",
    "orbit_count", "closure_leq", "closure_leq_bclosure",
    "divisorial_orbits", "format_orbit", "parse_orbit",
    "OrbitPoset", "build_poset", "covers", "maximal_below",
    "VerifyReport", "verify_poset", "verify_suite",
    "KERNEL_IMPLEMENTATION", "available_backends",
    "OrbitPosetError", "InvalidCartanError", "NotFiniteTypeError",
    "SizeBoundError", "ContextMismatchError", "ModelParseError",
    "ModelValidationError", "OrbitValidationError",
]
