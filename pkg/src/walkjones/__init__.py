"""walkjones: exact colored Jones polynomials of knots from braid words.

The polynomial is computed from walk sums read off the quantum determinant
of the deformed Burau matrix of the braid, with duplicate-reduction pruning
and mirror-orientation selection keeping the stack of walks small. All
arithmetic is exact over integer-coefficient Laurent polynomials in q.
"""

from .braid import BraidWord, NotAKnotError, parse_braid
from .cjp import CjpResult, choose_orientation, colored_jones, simple_walk_count
from .laurent import LaurentParseError, LaurentPolynomial
from .oracle import FreeWord, free_normalize, naive_colored_jones, right_quantum_check
from .table import KnotRecord, knot_lookup, load_table
from .weyl import KeyedMonomial, WalkSum

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CjpResult",
    "FreeWord",
    "KeyedMonomial",
    "KnotRecord",
    "LaurentParseError",
    "LaurentPolynomial",
    "NotAKnotError",
    "WalkSum",
    "choose_orientation",
    "colored_jones",
    "free_normalize",
    "knot_lookup",
    "load_table",
    "naive_colored_jones",
    "parse_braid",
    "right_quantum_check",
    "simple_walk_count",
    "__version__",
]
