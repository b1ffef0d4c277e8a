"""Integer Laplacians and critical groups."""
from typing import List, Optional
from pydantic import BaseModel
from algebra.smith import InvariantFactors, integer_det, invariant_factors
from graphs.graph import Graph
from utils.errors import DisconnectedGraphError, GraphArgumentError


class CriticalGroup(BaseModel):
    """K(G) as the invariant factors of the reduced Laplacian at `base`."""

    vertices: int
    base: int
    factors: InvariantFactors

    def f(self, k: int) -> int:
        return self.factors.count(k)

    def render(self) -> str:
        return self.factors.render()


def integer_laplacian(G: Graph) -> List[List[int]]:
    degrees = G.degrees()
    return [[degrees[u] if u == v else -G.multiplicity(u, v) for v in range(G.n)] for u in range(G.n)]


def reduced_laplacian(G: Graph, s: int) -> List[List[int]]:
    """Integer Laplacian without row and column s."""
    if not 0 <= s < G.n:
        raise GraphArgumentError(f"Invalid base vertex {s} for a graph on {G.n} vertices")
    L = integer_laplacian(G)
    return [[L[u][v] for v in range(G.n) if v != s] for u in range(G.n) if u != s]


def critical_group(G: Graph, base: Optional[int] = None) -> CriticalGroup:
    """Critical group of a connected graph; the base vertex defaults to the last one."""
    if not G.is_connected():
        raise DisconnectedGraphError("The critical group needs a connected graph")
    s = G.n - 1 if base is None else base
    return CriticalGroup(vertices=G.n, base=s, factors=invariant_factors(reduced_laplacian(G, s)))


def f_count(G: Graph, k: int) -> int:
    """Number of invariant factors of K(G) equal to k."""
    if k < 1:
        raise GraphArgumentError(f"f_k needs a positive k, got {k}")
    return critical_group(G).f(k)


def spanning_tree_count(G: Graph) -> int:
    if not G.is_connected():
        return 0
    return abs(integer_det(reduced_laplacian(G, G.n - 1)))


def matching_group_formula(n: int, k: int) -> List[int]:
    """Invariant factors of K(K_n minus a k-edge matching), units included, for n >= 2k+1."""
    if k < 0 or n < 2 * k + 1 or n < 2:
        raise GraphArgumentError(f"No closed form for n={n}, k={k}")
    if n >= 2 * k + 2:
        return [1] * (k + 1) + [n] * (n - 2 * k - 2) + [n * (n - 2)] * k
    return [1] * k + [n - 2] + [n * (n - 2)] * (k - 1)
