"""Chiral polyhedra from finite permutation groups.

Exact permutation-group machinery (stabilizer chains, classes), chirality
verdicts and censuses for generating pairs (x, t), the rank-3 coset poset
of a pair, and exact checks of involution-counting inequalities for groups
of Lie type.
"""

from .chirality import (
    ChiralCensus,
    GenPair,
    PairVerdict,
    classify_pair,
    count_chiral_pairs,
    enantiomorph,
    is_chiral,
    random_chiral_search,
    tuple_equivalent,
)
from .errors import (
    ArgumentError,
    CapacityError,
    ChiralscopeError,
    DegreeMismatchError,
    IntegrityError,
    ParseError,
)
from .group import PermGroup, group_from_generators
from .perm import Permutation

__version__ = "0.1.0"

__all__ = [
    "ArgumentError", "CapacityError", "ChiralCensus", "ChiralscopeError",
    "DegreeMismatchError", "GenPair", "IntegrityError", "PairVerdict",
    "ParseError", "PermGroup", "Permutation", "classify_pair",
    "count_chiral_pairs", "enantiomorph", "group_from_generators", "is_chiral",
    "random_chiral_search", "tuple_equivalent", "__version__",
]
