"""Algebraic co-rank: how many critical ideals of a graph are trivial."""
import time
from typing import Dict, List, Optional, Tuple
from pydantic import BaseModel
from algebra.ideals import Ideal, contains, decide_triviality
from algebra.polynomials import embed, is_unit, polynomial_ring
from critical.laplacian import GeneralizedLaplacian, critical_ideal, generalized_laplacian
from graphs.components.constructions import disjoint_union, matching_removed
from graphs.graph import Graph
from utils.config import config
from utils.errors import GraphArgumentError, GroebnerBudgetExhausted, SizeLimitError
from utils.logger import logger

UNIT_MINOR = "unit-minor"

TRIVIAL = "trivial"
NON_TRIVIAL = "non-trivial"


class IdealStatus(BaseModel):
    index: int
    status: str
    method: str
    generators: int = 0
    rows: Optional[List[int]] = None
    cols: Optional[List[int]] = None
    pairs_processed: int = 0
    seconds: Optional[float] = None


class CorankResult(BaseModel):
    """gamma plus the per-index decisions; `witness_kind` certifies I_gamma (0-based rows/cols)."""

    gamma: int
    vertices: int
    trivial_indices: List[int]
    statuses: List[IdealStatus]
    witness_kind: Optional[str] = None
    witness_rows: Optional[List[int]] = None
    witness_cols: Optional[List[int]] = None
    nesting_verified: Optional[bool] = None


def _check_size(G: Graph) -> None:
    limit = config.limits_config.max_gamma_vertices
    if G.n > limit:
        raise SizeLimitError(f"Co-rank computation is capped at {limit} vertices, got {G.n}")


class CorankEngine:
    """Decides triviality of I_k(G) index by index, sharing one minor memo across indices."""

    def __init__(self, G: Graph, timings: bool = False):
        _check_size(G)
        self.graph = G
        self.timings = timings
        self.laplacian: Optional[GeneralizedLaplacian] = generalized_laplacian(G) if G.n else None
        self._ideals: Dict[int, Ideal] = {}

    def ideal(self, k: int) -> Ideal:
        if k not in self._ideals:
            self._ideals[k] = critical_ideal(self.graph, k, self.laplacian).ideal
        return self._ideals[k]

    def status(self, k: int) -> IdealStatus:
        if k < 1:
            return IdealStatus(index=k, status=TRIVIAL, method="convention")
        if k > self.graph.n:
            return IdealStatus(index=k, status=NON_TRIVIAL, method="convention")
        start = time.perf_counter()
        status = self._decide(k)
        if self.timings:
            status.seconds = round(time.perf_counter() - start, 6)
        logger.debug(f"I_{k}: {status.status} via {status.method}")
        return status

    def _decide(self, k: int) -> IdealStatus:
        for rows, cols, det in self.laplacian.iter_minors(k):
            if is_unit(det):
                return IdealStatus(index=k, status=TRIVIAL, method=UNIT_MINOR, rows=list(rows), cols=list(cols))
        ideal = self.ideal(k)
        try:
            decision = decide_triviality(ideal)
        except GroebnerBudgetExhausted as e:
            raise e.at_index(k) from e
        return IdealStatus(
            index=k,
            status=TRIVIAL if decision.trivial else NON_TRIVIAL,
            method=decision.method,
            generators=len(ideal),
            pairs_processed=decision.pairs_processed,
        )

    def is_trivial(self, k: int) -> bool:
        return self.status(k).status == TRIVIAL

    def corank(self, debug_nesting: bool = False) -> CorankResult:
        statuses: List[IdealStatus] = []
        gamma = 0
        for k in range(1, self.graph.n + 1):
            status = self.status(k)
            statuses.append(status)
            if status.status != TRIVIAL:
                if not debug_nesting:
                    break
            elif gamma == k - 1:
                gamma = k

        nesting = None
        if debug_nesting:
            nesting = self._verify_nesting(statuses, gamma)

        result = CorankResult(
            gamma=gamma,
            vertices=self.graph.n,
            trivial_indices=list(range(1, gamma + 1)),
            statuses=statuses,
            nesting_verified=nesting,
        )
        if gamma:
            witness = statuses[gamma - 1]
            result.witness_kind = witness.method
            result.witness_rows = witness.rows
            result.witness_cols = witness.cols
        return result

    def _verify_nesting(self, statuses: List[IdealStatus], gamma: int) -> bool:
        prefix = all(s.status == TRIVIAL for s in statuses[:gamma]) and not any(
            s.status == TRIVIAL for s in statuses[gamma:]
        )
        chain = all(contains(self.ideal(k), self.ideal(k + 1)) for k in range(1, self.graph.n))
        if not (prefix and chain):
            logger.warning(f"Critical ideal nesting failed for {self.graph!r}")
        return prefix and chain


def algebraic_corank(G: Graph, debug_nesting: bool = False, timings: bool = False) -> CorankResult:
    """gamma(G), stopping at the first non-trivial critical ideal unless debug_nesting is set."""
    result = CorankEngine(G, timings).corank(debug_nesting)
    logger.debug(f"gamma = {result.gamma} for graph on {G.n} vertices")
    return result


def gamma(G: Graph) -> int:
    return algebraic_corank(G).gamma


def corank_exceeds(G: Graph, bound: int) -> bool:
    """gamma(G) > bound, decided from I_{bound+1} alone."""
    if bound < 0:
        return True
    if bound + 1 > G.n:
        return False
    return CorankEngine(G).is_trivial(bound + 1)


def gamma_by_components(G: Graph) -> int:
    return sum(gamma(C) for C in G.connected_components())


def _deletion_lowers(G: Graph, v: int, g: int) -> bool:
    H = G.delete_vertex(v)
    if H.n and not H.is_connected():
        whole = gamma(H)
        parts = gamma_by_components(H)
        if whole != parts:
            logger.warning(f"Deleting vertex {v}: gamma = {whole} breaks the sum rule over components ({parts})")
        return whole < g
    return not corank_exceeds(H, g - 1)


def is_gamma_critical(G: Graph) -> bool:
    """Every vertex deletion lowers gamma; a deletion that disconnects G is cross-checked
    against the sum of gamma over its components."""
    G.require_simple("gamma-criticality")
    g = gamma(G)
    if g == 0:
        return False
    return all(_deletion_lowers(G, v, g) for v in range(G.n))


def gamma_disjoint_sum_check(G: Graph, H: Graph) -> bool:
    combined = gamma(disjoint_union(G, H))
    expected = gamma(G) + gamma(H)
    if combined != expected:
        logger.warning(f"gamma(G+H) = {combined} but gamma(G) + gamma(H) = {expected}")
    return combined == expected


def product_formula_ideal(G: Graph, H: Graph, i: int) -> Ideal:
    """Generators of the products I_j(G) * I_{i-j}(H), j = 0..i, inside the ring of G + H."""
    union = disjoint_union(G, H)
    R = polynomial_ring(union.variable_names())
    generators = []
    for j in range(0, i + 1):
        left = critical_ideal(G, j).ideal
        right = critical_ideal(H, i - j).ideal
        for f in left.generators:
            for g in right.generators:
                generators.append(embed(f, R, 0) * embed(g, R, G.n))
    return Ideal(R, generators)


def matching_unit_minor(k: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], object]:
    """(rows, cols, det) of the (k+1)-square submatrix of L(K_{2k+2} minus M_k) on the odd
    vertices 1, 3, ..., 2k+1 and the even vertices 2, 4, ..., 2k+2 (0-based 0, 2, ... / 1, 3, ...)."""
    if k < 1:
        raise GraphArgumentError(f"Matching size must be positive, got {k}")
    L = generalized_laplacian(matching_removed(2 * k + 2, k))
    rows = tuple(range(0, 2 * k + 2, 2))
    cols = tuple(range(1, 2 * k + 2, 2))
    return rows, cols, L.minor(rows, cols)
