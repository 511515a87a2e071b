"""Negativity-font invariants, tangles and monogamy residuals of 2-4 qubit states."""

from .errors import TangleError
from .estimator import TangleTransformer
from .monogamy import TangleReport, catalog, family_g2, family_reference, report, sweep
from .qstate import (
    DensityMatrix,
    LocalUnitary,
    PureState,
    load_state,
    make_pure,
    parse_state,
    partial_trace,
    random_state,
)
from .roof import RoofOptions, concurrence, new_two_tangle_roof, three_tangle_roof

__all__ = [
    "DensityMatrix",
    "LocalUnitary",
    "PureState",
    "RoofOptions",
    "TangleError",
    "TangleReport",
    "TangleTransformer",
    "catalog",
    "concurrence",
    "family_g2",
    "family_reference",
    "load_state",
    "make_pure",
    "new_two_tangle_roof",
    "parse_state",
    "partial_trace",
    "random_state",
    "report",
    "sweep",
    "three_tangle_roof",
]
