from .families import gen_exponential, gen_random, gen_uniqueness
from .lattice import check_lattice_column_property, is_intersection_closed
from .projective import (
    ProjectiveLattice,
    gen_projective,
    projective_coefficient,
    projective_expected_l1,
    projective_expected_m,
    projective_lattice,
)
from .qbinomial import cauchy_identity_check, gauss_binomial, q_integer

__all__ = [
    "ProjectiveLattice",
    "cauchy_identity_check",
    "check_lattice_column_property",
    "gauss_binomial",
    "gen_exponential",
    "gen_projective",
    "gen_random",
    "gen_uniqueness",
    "is_intersection_closed",
    "projective_coefficient",
    "projective_expected_l1",
    "projective_expected_m",
    "projective_lattice",
    "q_integer",
]
