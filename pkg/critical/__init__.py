from critical.laplacian import (
    GeneralizedLaplacian, CriticalIdeal, generalized_laplacian, k_minors, critical_ideal,
)
from critical.corank import (
    CorankEngine, CorankResult, IdealStatus, algebraic_corank, gamma, corank_exceeds, is_gamma_critical,
    gamma_by_components, gamma_disjoint_sum_check, product_formula_ideal, matching_unit_minor,
)
from critical.groups import (
    CriticalGroup, integer_laplacian, reduced_laplacian, critical_group, f_count, spanning_tree_count,
    matching_group_formula,
)
from critical.forbidden import forb_search, is_forbidden
