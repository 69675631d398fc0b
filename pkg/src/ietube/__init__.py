"""Small inclusion-exclusion formulas for finite set systems.

Exact Möbius inversion over the Venn diagram, randomized ±1 formulas from
selector complexes (abstract tubes), and the projective-space families whose
formulas cannot be made small.
"""

from .core import (
    EmptyUnionError,
    IEError,
    IEVector,
    IndexSet,
    InputError,
    ResourceError,
    RestartsExhausted,
    SetSystem,
    SimplicialComplex,
    VennDiagram,
    evaluate_formula,
    evaluate_union,
    index_set,
    members,
)
from .mobius import l1_norm, mobius_ie_vector
from .standardize import compute_nerve, compute_venn, region_of
from .tube import (
    Selector,
    TubeResult,
    build_complex,
    build_tube,
    d_bound,
    face_condition,
    selector_from_permutation,
    truncate,
)
from .validate import Report, bonferroni_check, check_abstract_tube, check_ie_vector, measure_oracle_check

__version__ = "0.1.0"

__all__ = [
    "EmptyUnionError",
    "IEError",
    "IEVector",
    "IndexSet",
    "InputError",
    "Report",
    "ResourceError",
    "RestartsExhausted",
    "Selector",
    "SetSystem",
    "SimplicialComplex",
    "TubeResult",
    "VennDiagram",
    "bonferroni_check",
    "build_complex",
    "build_tube",
    "check_abstract_tube",
    "check_ie_vector",
    "compute_nerve",
    "compute_venn",
    "d_bound",
    "evaluate_formula",
    "evaluate_union",
    "face_condition",
    "index_set",
    "l1_norm",
    "measure_oracle_check",
    "members",
    "mobius_ie_vector",
    "region_of",
    "selector_from_permutation",
    "truncate",
]
