from itertools import permutations

import numpy as np
import pytest

from algebra.components.determinant import MinorExpander
from algebra.polynomials import (
    PolyMatrix, add, constant, det_symbolic, embed, evaluate, is_unit, mul, neg, normalize_sign,
    parse_polynomial, polynomial_ring, render, scale, sorted_polynomials,
)
from algebra.smith import integer_det
from utils.errors import GraphArgumentError, MissingVariableError

TEST_NAMES = ("x1", "x2", "x3")


@pytest.fixture
def R():
    return polynomial_ring(TEST_NAMES)


@pytest.mark.parametrize("text, rendered", [
    ("x1*x2 - x3 + 2", "x1*x2 - x3 + 2"),
    ("-2*x1^2 + x2", "-2*x1^2 + x2"),
    ("x3 + x1", "x1 + x3"),
    ("(x1 + 1)*(x2 + 1)", "x1*x2 + x1 + x2 + 1"),
    ("0", "0"),
])
def test_render(R, text: str, rendered: str):
    assert render(parse_polynomial(R, text)) == rendered


def test_normalize_sign(R):
    p = parse_polynomial(R, "-x1 + 1")
    assert normalize_sign(p) == parse_polynomial(R, "x1 - 1")
    assert normalize_sign(-p) == normalize_sign(p)
    assert normalize_sign(R.zero) == R.zero


def test_is_unit(R):
    assert is_unit(constant(R, 1))
    assert is_unit(constant(R, -1))
    assert not is_unit(constant(R, 2))
    assert not is_unit(R.gens[0])
    assert not is_unit(R.zero)


def test_evaluate(R):
    p = parse_polynomial(R, "x1*x2 - x3 + 2")
    assert evaluate(p, {"x1": 2, "x2": 3, "x3": 1}) == 7
    assert evaluate(p, {0: 2, 1: 3, 2: 1}) == 7
    with pytest.raises(MissingVariableError):
        evaluate(p, {"x1": 2})


def test_embed_shifts_variables(R):
    S = polynomial_ring(("y1", "y2"))
    q = parse_polynomial(S, "y1*y2 + 1")
    assert embed(q, R, 1) == parse_polynomial(R, "x2*x3 + 1")


def test_sorted_polynomials_is_deterministic(R):
    polys = [parse_polynomial(R, t) for t in ("x1", "2", "x3 + 1", "x1*x2")]
    assert [render(p) for p in sorted_polynomials(polys)] == [render(p) for p in sorted_polynomials(polys[::-1])]


def test_empty_ring_rejected():
    with pytest.raises(GraphArgumentError):
        polynomial_ring(())


def _laplacian_k3(R):
    x1, x2, x3 = R.gens
    m = constant(R, -1)
    return PolyMatrix(R, [[x1, m, m], [m, x2, m], [m, m, x3]])


def test_det_symbolic(R):
    L = _laplacian_k3(R)
    assert render(det_symbolic(L)) == "x1*x2*x3 - x1 - x2 - x3 - 2"
    assert render(det_symbolic(L.submatrix([0, 1], [0, 1]))) == "x1*x2 - 1"
    assert L.is_symmetric()
    assert L.evaluate({"x1": 0, "x2": 0, "x3": 0})[0] == [0, -1, -1]


def test_det_requires_square(R):
    with pytest.raises(GraphArgumentError):
        det_symbolic(_laplacian_k3(R).submatrix([0, 1], [0, 1, 2]))


def test_minor_expander_respects_index_order(R):
    expander = MinorExpander(_laplacian_k3(R))
    assert expander.minor((1, 0), (0, 1)) == -expander.minor((0, 1), (0, 1))
    assert len(list(expander.minors(2))) == 9
    with pytest.raises(ValueError):
        expander.minor((0, 1), (0,))


def random_polynomial(R, rng, terms: int = 3, degree: int = 2):
    p = R.zero
    for _ in range(terms):
        coeff = int(rng.integers(-3, 4))
        if coeff:
            monom = tuple(int(e) for e in rng.integers(0, degree + 1, size=R.ngens))
            p += R.from_dict({monom: coeff})
    return p


def random_matrix(R, rng, size: int) -> PolyMatrix:
    return PolyMatrix(R, [[random_polynomial(R, rng, terms=2, degree=1) for _ in range(size)] for _ in range(size)])


def permutation_det(M: PolyMatrix):
    total = M.ring.zero
    for perm in permutations(range(M.rows)):
        inversions = sum(1 for i in range(M.rows) for j in range(i + 1, M.rows) if perm[i] > perm[j])
        term = M.ring.one * (-1) ** inversions
        for i, j in enumerate(perm):
            term *= M[i, j]
        total += term
    return total


@pytest.mark.parametrize("seed", range(8))
def test_ring_axioms(R, seed: int):
    rng = np.random.default_rng(seed)
    p, q, r = (random_polynomial(R, rng) for _ in range(3))
    c = int(rng.integers(-5, 6))
    assert add(add(p, q), r) == add(p, add(q, r))
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert add(p, q) == add(q, p)
    assert mul(p, q) == mul(q, p)
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
    assert add(p, neg(p)) == R.zero
    assert scale(add(p, q), c) == add(scale(p, c), scale(q, c))
    assert scale(p, c) == mul(constant(R, c), p)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_det_symbolic_against_permutation_expansion(R, size: int):
    rng = np.random.default_rng(100 + size)
    M = random_matrix(R, rng, size)
    det = det_symbolic(M)
    assert det == permutation_det(M)

    transposed = PolyMatrix(R, [[M[j, i] for j in range(size)] for i in range(size)])
    assert det_symbolic(transposed) == det

    point = {name: int(v) for name, v in zip(TEST_NAMES, rng.integers(-3, 4, size=len(TEST_NAMES)))}
    assert evaluate(det, point) == integer_det(M.evaluate(point))
