"""Exact plethysm of Schur functions through plethystic semistandard tableaux,
polytabloid straightening, and highest-weight vectors."""

from ._kernels import IMPL as kernel_impl
from .caches import clear_caches
from .errors import ComputationError
from .hwv import (
    HwVector,
    foulkes_hwv,
    hwv_space,
    is_highest_weight,
    multiply_hwv,
    raising_action,
    star_map,
    tilde_map,
    weight_space_basis,
)
from .partitions import (
    add,
    conjugate,
    disjoint_union,
    dominates,
    enumerate_partitions,
    format_partition,
    make_partition,
    parse_partition,
    scale,
)
from .plethystic import (
    PlethysticTableau,
    enumerate_pssyt,
    enumerate_pssyt_weight,
    format_pssyt,
    is_closed,
    maximal_weights,
    parse_pssyt,
)
from .polytabloid import (
    column_normalize,
    expand_polytabloid,
    leading_term_check,
    snake_terms,
    straighten,
)
from .symfunc import (
    SchurVector,
    WeightMultiplicityMap,
    decompose,
    dim_nabla,
    inner_product,
    plethysm_coefficient,
    plethysm_weights,
    schur_expand,
    sign_twist,
)
from .tableaux import (
    Tableau,
    apply_place_permutation,
    content,
    enumerate_ssyt,
    enumerate_ssyt_content,
    format_tableau,
    kostka,
    less,
    parse_tableau,
    row_semistandardize,
    superstandard,
    tableau_dominates,
)
from .verify import (
    VerificationReport,
    saturation_threshold,
    stability_bound,
    verify_theorem1,
    verify_theorem1_twisted,
    verify_theorem2,
    verify_theorem3,
    verify_theorem5,
)

__version__ = "0.1.0"
