"""Exact computations with powers of monomial ideals.

Ordinary powers, symbolic powers, integral closures and the two flavours
of Castelnuovo-Mumford regularity, plus experiment drivers that turn the
classical containment and asymptotic-linearity statements about them into
reproducible, machine-checked reports.
"""

from .betti import BettiTable, RegularityValue, betti_table, lcm_closure, regularity, upper_koszul
from .closure import integral_closure_membership, integral_closure_power, newton_multipliers
from .errors import (
    AmbientMismatchError,
    CacheAuditError,
    CapExceededError,
    HomologyCrossCheckError,
    IdealPowersError,
    InputError,
    NotSquarefreeError,
    ParseError,
)
from .exprs import canonical_form, evaluate, infer_ambient, parse_ideal, pretty
from .homology import SimplicialComplex, reduced_homology_ranks
from .ideals import Monomial, MonomialIdeal, divides, gcd, intersect, lcm, minimalize
from .squarefree import (
    big_height,
    coordinate_arrangement_ideal,
    minimal_primes,
    symbolic_membership,
    symbolic_power,
)

ENGINE_VERSION = "0.1.0"
__version__ = ENGINE_VERSION

__all__ = [
    "AmbientMismatchError",
    "BettiTable",
    "CacheAuditError",
    "CapExceededError",
    "ENGINE_VERSION",
    "HomologyCrossCheckError",
    "IdealPowersError",
    "InputError",
    "Monomial",
    "MonomialIdeal",
    "NotSquarefreeError",
    "ParseError",
    "RegularityValue",
    "SimplicialComplex",
    "betti_table",
    "big_height",
    "canonical_form",
    "coordinate_arrangement_ideal",
    "divides",
    "evaluate",
    "gcd",
    "infer_ambient",
    "integral_closure_membership",
    "integral_closure_power",
    "intersect",
    "lcm",
    "lcm_closure",
    "minimal_primes",
    "minimalize",
    "newton_multipliers",
    "parse_ideal",
    "pretty",
    "reduced_homology_ranks",
    "regularity",
    "symbolic_membership",
    "symbolic_power",
    "upper_koszul",
]
