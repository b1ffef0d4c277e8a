from algebra.polynomials import (
    Polynomial, PolyMatrix, polynomial_ring, variable_names, constant, parse_polynomial,
    add, mul, neg, scale, normalize_sign, is_unit, evaluate, render, embed, det_symbolic, sort_key,
)
from algebra.ideals import (
    Ideal, GroebnerBasis, TrivialityDecision, groebner, normal_form, decide_triviality, is_trivial,
    contains, equal,
)
from algebra.smith import (
    InvariantFactors, SmithForm, smith_normal_form, invariant_factors, integer_det, determinantal_divisors,
)
