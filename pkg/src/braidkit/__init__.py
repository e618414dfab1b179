"""Braid groups on few strands: normal forms, homomorphisms and the B_4 splitting."""

from ._kernels import USE_NUMBA
from .braid import BraidWord, make_constant
from .freewords import FreeWord
from .garside import equal, normal_form
from .perm import Permutation

__all__ = ["BraidWord", "FreeWord", "Permutation", "make_constant", "normal_form", "equal", "USE_NUMBA"]
__version__ = "0.1.0"
