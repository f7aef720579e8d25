"""Degree stability of vectorial Boolean functions on affine subspaces of
F_2^n: GF(2^n) arithmetic, function representations, subspace enumeration,
degree-drop scans, power-function predicates and exact counting formulas.
"""

from .boolfn import (
    NEG_INF,
    AnfForm,
    UnivariateForm,
    VectorialFunction,
    anf_to_table,
    affine_transform,
    complement,
    degree,
    derivative,
    fast_points,
    higher_derivative,
    homogeneous_part,
    inverse_function,
    power_function,
    read_table,
    read_univariate,
    table_to_anf,
    table_to_univariate,
    univariate_to_table,
    write_table,
    write_univariate,
)
from .counting import (
    CountQuery,
    brute_force_count,
    count_exact_drop_dimension,
    count_exact_fast_dimension,
    count_no_drop_hyperplane,
    count_no_fast_points,
    inversion_lemma_check,
)
from .errors import CapExceededError, ConsistencyError
from .gf2 import Embedding, FieldCtx, embed, find_embedding, make_ctx, verify_lin_indep_transfer
from .power import (
    ExponentProfile,
    MooreSetVerdict,
    codim1_no_drop,
    codim2_no_drop,
    codim_k_moore_sufficient,
    codim_k_sufficient,
    inverse_codim2_classification,
    inverse_codim3_special_count,
    inverse_codim3_z,
    is_moore_exponent_set,
    named_family_report,
    profile,
)
from .scan import (
    ScanReport,
    full_stability,
    hyperplane_drop_space,
    is_apn,
    is_degree_drop,
    scan,
)
from .subspaces import (
    AffineSubspace,
    LinearSubspace,
    TraceEquations,
    affine_subspace,
    enumerate_affine,
    enumerate_linear,
    equations_to_subspace,
    gaussian_binomial,
    indicator_product_degree,
    linear_subspace,
    parse_subspace,
    restrict,
    restriction_degree,
    serialize_subspace,
    subspace_to_equations,
)

__version__ = "0.1.0"
