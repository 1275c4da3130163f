"""qdet-lab: exact verification of q-series determinant and Pfaffian identities.

The library evaluates both sides of a catalogue of determinant, Pfaffian,
basic-hypergeometric, and orthogonal-polynomial identities at randomized
non-degenerate rational points, entirely in exact QQ(i) arithmetic, and
reports bit-exact agreement.  See :mod:`qdetlab.identities` for the check
registry and :mod:`qdetlab.cli` for the command-line front end.
"""

from .errors import (
    DegenerateSampleError,
    NonTerminatingSeriesError,
    ParseError,
    PoleError,
    QdetLabError,
)
from .gaussian import I, ONE, ZERO, GaussianRational, parse, to_gq
from .linalg import ExactMatrix, determinant, pfaffian, submatrix

__version__ = "0.1.0"

__all__ = [
    "DegenerateSampleError",
    "ExactMatrix",
    "GaussianRational",
    "I",
    "NonTerminatingSeriesError",
    "ONE",
    "ParseError",
    "PoleError",
    "QdetLabError",
    "ZERO",
    "determinant",
    "parse",
    "pfaffian",
    "submatrix",
    "to_gq",
    "__version__",
]
