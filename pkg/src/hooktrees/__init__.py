"""hooktrees: exact hook-length weight calculus for weighted ordered trees.

Computes the counting series of degree-weighted, hook-weighted ordered
rooted trees with exact rational arithmetic, recovers the hook weight
function from a target series (tree and forest forms), solves the
fixed-point and differential equations of simply generated and increasing
tree families, and certifies every identity by exhaustive enumeration at
small sizes.
"""

from .errors import HookTreesError
from .families import DegreeWeightFamily
from .hookcalc import HookWeightFunction
from .rational import Rational
from .series import TruncatedSeries
from .treeoracle import OrderedTree

__version__ = "0.1.0"

__all__ = [
    "DegreeWeightFamily",
    "HookTreesError",
    "HookWeightFunction",
    "OrderedTree",
    "Rational",
    "TruncatedSeries",
    "__version__",
]
