"""Exact Eulerian-Catalan enumeration.

Permutations are lists in one-line notation with values 1..m, lattice paths are
strings over "E"/"N", and polytope specs are dicts in the AlcovedSpec JSON
schema (ambient_n, level_k, bounds).
"""

from ._ecat import *  # noqa: F401,F403
from ._ecat import DegeneratePolytope, ScaleCapExceeded, VerificationFailure  # noqa: F401

__version__ = "0.1.0"
