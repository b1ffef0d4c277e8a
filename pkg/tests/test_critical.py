from functools import reduce
from math import gcd, prod

import pytest

from algebra.ideals import Ideal, equal
from algebra.polynomials import evaluate, is_unit, render
from algebra.smith import determinantal_divisors, invariant_factors
from critical.corank import (
    NON_TRIVIAL, TRIVIAL, UNIT_MINOR, CorankEngine, algebraic_corank, corank_exceeds, gamma,
    gamma_by_components, gamma_disjoint_sum_check, is_gamma_critical, matching_unit_minor, product_formula_ideal,
)
from critical.forbidden import forb_search, is_forbidden
from critical.groups import integer_laplacian
from critical.laplacian import critical_ideal, generalized_laplacian, k_minors
from graphs.components.constructions import (
    complete, complete_multipartite, cycle, disjoint_union, matching_removed, path, star, trivial,
)
from graphs.components.enumeration import canonical_form
from graphs.components.patterns import f2_patterns
from graphs.graph import Graph
from utils.errors import GraphArgumentError, NotSimpleGraphError, SizeLimitError


def test_generalized_laplacian_entries():
    L = generalized_laplacian(Graph(3, [(0, 1, 2), (1, 2)]))
    assert L.matrix.is_symmetric()
    assert render(L.matrix[0, 0]) == "x1"
    assert render(L.matrix[0, 1]) == "-2"
    assert render(L.matrix[0, 2]) == "0"
    with pytest.raises(GraphArgumentError):
        generalized_laplacian(trivial(0))


def test_critical_ideal_conventions():
    G = complete(3)
    assert render(critical_ideal(G, 0).generators[0]) == "1"
    assert critical_ideal(G, 4).ideal.is_zero
    assert critical_ideal(G, 3).serialize() == ["x1*x2*x3 - x1 - x2 - x3 - 2"]
    assert set(critical_ideal(G, 1).serialize()) == {"1", "x1", "x2", "x3"}


def test_k_minors_up_to_sign():
    minors = k_minors(generalized_laplacian(path(3)), 2)
    rendered = {render(p) for p in minors}
    assert "x1*x2 - 1" in rendered
    assert "1" in rendered
    assert all(p.LC > 0 for p in minors)


@pytest.mark.parametrize("G, expected", [
    (trivial(1), 0),
    (complete(2), 1),
    (complete(5), 1),
    (path(3), 2),
    (path(4), 3),
    (path(7), 6),
    (star(3), 2),
    (complete_multipartite([2, 2, 2]), 2),
    (disjoint_union(complete(2), complete(2)), 2),
])
def test_gamma(G: Graph, expected: int):
    assert gamma(G) == expected


def test_corank_result_records_witness():
    result = algebraic_corank(path(4))
    assert result.gamma == 3
    assert result.trivial_indices == [1, 2, 3]
    assert result.witness_kind == UNIT_MINOR
    assert len(result.witness_rows) == 3
    assert [s.status for s in result.statuses] == [TRIVIAL, TRIVIAL, TRIVIAL, NON_TRIVIAL]


def test_corank_timings_are_optional():
    assert all(s.seconds is None for s in algebraic_corank(path(3)).statuses)
    assert all(s.seconds is not None for s in algebraic_corank(path(3), timings=True).statuses)


def test_debug_nesting():
    result = algebraic_corank(cycle(4), debug_nesting=True)
    assert result.nesting_verified is True
    assert len(result.statuses) == 4


def test_corank_exceeds():
    P4 = path(4)
    assert corank_exceeds(P4, 2)
    assert not corank_exceeds(P4, 3)
    assert not corank_exceeds(P4, 10)
    assert corank_exceeds(trivial(1), -1)


def test_engine_out_of_range_indices():
    engine = CorankEngine(complete(3))
    assert engine.status(0).method == "convention"
    assert engine.status(4).status == NON_TRIVIAL


def test_size_limit():
    with pytest.raises(SizeLimitError):
        gamma(complete(9))


def test_disjoint_sum_is_additive():
    assert gamma_disjoint_sum_check(complete(2), path(3))
    assert gamma_disjoint_sum_check(trivial(1), complete(3))


def test_product_formula_ideal():
    G, H = complete(2), complete(2)
    union = disjoint_union(G, H)
    for i in range(1, 4):
        assert equal(critical_ideal(union, i).ideal, product_formula_ideal(G, H, i))


@pytest.mark.parametrize("k", [1, 2])
def test_matching_unit_minor(k: int):
    rows, cols, det = matching_unit_minor(k)
    assert rows == tuple(range(0, 2 * k + 2, 2))
    assert cols == tuple(range(1, 2 * k + 2, 2))
    assert is_unit(det)


def test_gamma_critical():
    assert is_gamma_critical(path(4))
    assert is_gamma_critical(path(3))
    assert not is_gamma_critical(complete(3))
    assert not is_gamma_critical(trivial(1))
    with pytest.raises(NotSimpleGraphError):
        is_gamma_critical(Graph(2, [(0, 1, 2)]))


def test_is_forbidden():
    assert is_forbidden(path(3), 1)
    assert is_forbidden(complete(2), 0)
    assert is_forbidden(f2_patterns().get("Gab"), 2)
    assert not is_forbidden(path(4), 1)
    assert not is_forbidden(star(3), 1)


def test_forb_search_small():
    found = forb_search(1, 4, jobs=1)
    assert [canonical_form(G) for G in found] == [canonical_form(path(3))]
    with pytest.raises(GraphArgumentError):
        forb_search(-1, 3)


@pytest.mark.slow
def test_forb_search_gamma2():
    found = forb_search(2, 6, jobs=1)
    assert sorted(canonical_form(G) for G in found) == sorted(canonical_form(G) for G in f2_patterns().graphs())


@pytest.mark.slow
def test_matching_removed_gamma():
    G = matching_removed(6, 2)
    assert gamma(G) == 3
    assert is_gamma_critical(G)


TEST_BRIDGE_GRAPHS = [
    path(3),
    path(4),
    star(3),
    cycle(5),
    complete(4),
    complete_multipartite([2, 2, 1]),
    Graph(3, [(0, 1, 2), (1, 2)]),
]


@pytest.mark.parametrize("G", TEST_BRIDGE_GRAPHS)
def test_minors_at_degrees_give_snf_divisors(G: Graph):
    # x_u = deg u turns L(G, X) into the Laplacian of G
    L = generalized_laplacian(G)
    degrees = dict(zip(G.variable_names(), G.degrees()))
    diag = invariant_factors(integer_laplacian(G)).diag
    divisors = determinantal_divisors(integer_laplacian(G))
    for k in range(1, G.n + 1):
        values = [evaluate(p, degrees) for _, _, p in L.iter_minors(k)]
        assert reduce(gcd, values, 0) == prod(diag[:k]) == divisors[k - 1]


def as_expressions(ideal: Ideal):
    return {frozenset((g.as_expr(), -g.as_expr())) for g in ideal.generators}


@pytest.mark.parametrize("G, order", [
    (Graph(4, [(0, 1), (1, 2), (2, 3)], labels=("a", "b", "c", "d")), [2, 0, 3, 1]),
    (Graph(4, [(0, 1), (0, 2), (0, 3)], labels=("a", "b", "c", "d")), [3, 1, 0, 2]),
    (Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)], labels=tuple("abcde")), [4, 2, 0, 1, 3]),
])
def test_critical_ideals_survive_relabeling(G: Graph, order):
    H = G.relabel(order)
    assert H.variable_names() == tuple(G.variable_names()[v] for v in order)
    for k in range(1, G.n + 1):
        I = critical_ideal(G, k).ideal
        J = critical_ideal(H, k).ideal
        assert as_expressions(I) == as_expressions(J)
        moved = Ideal(I.ring, [I.ring.from_expr(g.as_expr()) for g in J.generators])
        assert equal(I, moved)


def test_critical_ideals_of_the_empty_graph():
    empty = trivial(0)
    assert critical_ideal(empty, 0).serialize() == ["1"]
    assert critical_ideal(empty, -1).serialize() == ["1"]
    assert critical_ideal(empty, 1).ideal.is_zero


def test_full_minor_scan_covers_transposes():
    L = generalized_laplacian(complete(3))
    assert len(list(L.iter_minors(2))) == 6
    assert len(list(L.iter_minors(2, full=True))) == 9


def test_gamma_by_components():
    G = disjoint_union(path(3), complete(2))
    assert gamma_by_components(G) == gamma(G) == 3
    assert gamma_by_components(trivial(3)) == 0


def test_gamma_critical_cross_checks_disconnecting_deletions(monkeypatch):
    warnings = []
    monkeypatch.setattr("critical.corank.logger.warning", warnings.append)
    assert is_gamma_critical(path(4))
    assert not is_gamma_critical(star(3))
    assert warnings == []

    monkeypatch.setattr("critical.corank.gamma_by_components", lambda G: 99)
    # deleting the middle of P3 leaves two isolated vertices
    assert is_gamma_critical(path(3))
    assert len(warnings) == 1
    assert "sum rule" in warnings[0]
