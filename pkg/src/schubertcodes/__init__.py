"""Constant-dimension subspace codes inside Schubert varieties of Gr_q(k, rk)."""

from ._caps import CapExceeded
from .bounds import (
    VerificationReport,
    bounds_table,
    exact_mq_search,
    lower_bound_multilevel,
    upper_bound_basic,
    upper_bound_general,
    verify_intersecting,
)
from .codes import SubspaceCode
from .constructions import check_equivalence, lift_semilinear, norm_one_code, psi_map, scattered_code, sigma_a
from .ferrers import (
    FerrersCode,
    FerrersDiagram,
    closed_form_nu_min,
    construct_ferrers_code,
    largest_cell_diagram,
    lift,
    max_multilevel_bound_2k,
    multilevel_assemble,
    multilevel_bound_2k,
    nu,
    nu_min,
    singleton_bound,
)
from .fields import (
    ExtElement,
    FieldCtx,
    frobenius,
    hilbert90_root,
    linearized_kernel,
    make_field,
    norm,
    norm_one_elements,
)
from .linalg import (
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    intersect,
    rank,
    rank_distance,
    rref,
    span_sum,
    subspace_distance,
    subspace_from_rows,
)
from .linear_sets import (
    LinearSetPoint,
    QSystem,
    desarguesian_spread,
    field_reduce_point,
    field_reduce_vec,
    gabidulin_system,
    is_scattered,
    linear_set_points,
    scattered_rank_check,
    twisted_system,
    weight_one_points,
)
from .schubert import (
    cell_of,
    condition_to_pivot,
    echelon_ferrers_of,
    enumerate_cell,
    in_omega_ul,
    omega_ul_condition,
    pivot_to_condition,
    satisfies_schubert,
    standard_flag_space,
)

__version__ = "0.1.0"
