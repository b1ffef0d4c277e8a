"""Generalized Laplacians, their k-minors and the critical ideals they generate."""
from itertools import combinations
from typing import Dict, Iterator, Optional, Tuple
from sympy.polys.rings import PolyElement
from algebra.components.determinant import MinorExpander
from algebra.ideals import Ideal
from algebra.polynomials import PolyMatrix, constant, ground_ring, normalize_sign, polynomial_ring
from graphs.graph import Graph
from utils.errors import GraphArgumentError

MinorIndex = Tuple[Tuple[int, ...], Tuple[int, ...]]


class GeneralizedLaplacian:
    """L(G, X): x_u on the diagonal and -m_uv off the diagonal."""

    def __init__(self, graph: Graph):
        if graph.n == 0:
            raise GraphArgumentError("The generalized Laplacian needs at least one vertex")
        self.graph = graph
        self.ring = polynomial_ring(graph.variable_names())
        gens = self.ring.gens
        entries = [
            [gens[u] if u == v else constant(self.ring, -graph.multiplicity(u, v)) for v in range(graph.n)]
            for u in range(graph.n)
        ]
        self.matrix = PolyMatrix(self.ring, entries)
        self.expander = MinorExpander(self.matrix)

    @property
    def n(self) -> int:
        return self.graph.n

    def minor(self, rows, cols) -> PolyElement:
        return self.expander.minor(rows, cols)

    def iter_minors(self, k: int, full: bool = False) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], PolyElement]]:
        """Non-zero k-minors over rows <= cols, or over every row and column subset when `full`;
        transposed minors are equal since L is symmetric."""
        if not 1 <= k <= self.n:
            raise GraphArgumentError(f"Minor size {k} out of range 1..{self.n}")
        subsets = list(combinations(range(self.n), k))
        for a, rows in enumerate(subsets):
            for cols in (subsets if full else subsets[a:]):
                det = self.expander.minor(rows, cols)
                if det:
                    yield rows, cols, det


def generalized_laplacian(G: Graph) -> GeneralizedLaplacian:
    return GeneralizedLaplacian(G)


def k_minors(L: GeneralizedLaplacian, k: int) -> Dict[PolyElement, MinorIndex]:
    """Distinct non-zero k-minors up to sign, each with the first submatrix producing it."""
    found: Dict[PolyElement, MinorIndex] = {}
    for rows, cols, det in L.iter_minors(k):
        found.setdefault(normalize_sign(det), (rows, cols))
    return found


class CriticalIdeal:
    def __init__(self, graph: Graph, index: int, ideal: Ideal, minors: Optional[Dict[PolyElement, MinorIndex]] = None):
        self.graph = graph
        self.index = index
        self.ideal = ideal
        self.minors = minors or {}

    @property
    def generators(self):
        return self.ideal.generators

    def serialize(self):
        return self.ideal.serialize()


def critical_ideal(G: Graph, k: int, laplacian: Optional[GeneralizedLaplacian] = None) -> CriticalIdeal:
    """I_k(G); <1> for k < 1 and <0> for k > n."""
    if G.n == 0 and laplacian is None:
        R = ground_ring()
        return CriticalIdeal(G, k, Ideal.unit(R) if k < 1 else Ideal.zero(R))
    L = laplacian or generalized_laplacian(G)
    if k < 1:
        return CriticalIdeal(G, k, Ideal.unit(L.ring))
    if k > G.n:
        return CriticalIdeal(G, k, Ideal.zero(L.ring))
    minors = k_minors(L, k)
    return CriticalIdeal(G, k, Ideal(L.ring, minors), minors)
