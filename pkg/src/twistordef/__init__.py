"""Exact torus-weight computations for equivariant deformations of LeBrun twistor spaces with torus action."""

from .cycle import build_cycle, classify_subgroup, isotropy_weight, pointwise_stabilizer
from .deformation import (
    AssembledRep,
    Configuration,
    DegenerateConfiguration,
    alpha_image,
    assemble,
    closed_form_rep,
    cokernel_rep,
    dimension_audit,
    gamma_vectors,
    normal_bundle_rep_c0,
)
from .moduli import excess_subgroups, fixed_dimension, moduli_dimension, scan, torus_invariant_dimension
from .weights import SubgroupDirection, Weight, WeightRep, k_subgroup, negate_rep, normalize_direction

__version__ = "0.1.0"
