"""cudim: covering dimension for abstract Cuntz semigroups, at desk scale.

Exhaustive checks on finite ordered-monoid presentations, bounded
(sound-refutation) checks on symbolic countable semigroups, the covering
dimension witness search, the catalog of standard semigroups, and a batch
CLI emitting stable machine-readable reports.
"""

from ._backend import backend_name
from .core import (
    AxiomVerdict,
    FiniteCuPresentation,
    SearchSpaceTooLarge,
    ValidationError,
    check_axiom,
    validate_presentation,
    way_below_finite,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomVerdict",
    "FiniteCuPresentation",
    "SearchSpaceTooLarge",
    "ValidationError",
    "backend_name",
    "check_axiom",
    "validate_presentation",
    "way_below_finite",
]
