"""Permutation weights, orbit signatures and string functions for A_N^(1)."""

from .errors import PwlieError
from .polyalg import LaurentPoly, QSeries, SchurContext, Specialization, orbit_sum
from .pweights import (
    MaximalClass,
    PermutationWeightSet,
    maximal_classes,
    pweights,
    pweights_compose,
    pweights_fundamental,
    solve_depth_equation,
)
from .signatures import SignedWeight, signature_index, signed_pweights
from .weights import (
    AffineDominant,
    AffineWeight,
    AlgebraContext,
    FiniteWeight,
    class_of,
    dominant_representative,
    from_dynkin,
    inner,
    to_dynkin,
)
from .weylkac import StringFunctionTable, multiplicity, residuals, solve_strings

__version__ = "0.1.0"
