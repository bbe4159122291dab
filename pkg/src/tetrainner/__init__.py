"""Rational tetra-inner functions and tetrablock geometry."""

from .boundary import (
    GammaPoint,
    GammaRegion,
    Matrix2,
    TetraPoint,
    TetraRegion,
    classify_gamma,
    classify_tetra,
    gamma_to_tetra,
    mu_diag_le_one,
    mu_diag_value,
    pi_map,
    psi,
    tetra_to_gamma_diff,
    tetra_to_gamma_sum,
)
from .construct import (
    ConstructionSpec,
    RecoveredData,
    build_e1,
    build_royal_target,
    construct,
    recover_data,
)
from .extremal import (
    PerturbationMethod,
    PerturbationResult,
    certify_extreme_symmetric,
    convex_combine,
    gamma_royal,
    perturb_nonextreme,
    scale_nonextreme,
)
from .fejriesz import TrigPolynomial, factor, is_outer, laurent_shift, modulus_squared_on_circle
from .polycx import Polynomial, RootMultiset, coeff_distance, is_n_symmetric, roots
from .tetrafun import (
    BlaschkeSpec,
    RoyalNode,
    SuperficialSpec,
    TetraRational,
    TypeNK,
    circle_trace,
    degree,
    eval_function,
    from_gamma_inner,
    is_superficial,
    psi_omega_check,
    royal_nodes,
    royal_polynomial,
    superficial_build,
    type_nk,
    validate,
    winding_number,
)

__version__ = "0.1.0"
