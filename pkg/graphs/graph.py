from typing import Iterable, List, Optional, Sequence, Tuple
import networkx as nx
import numpy as np
from utils.errors import GraphArgumentError, NotSimpleGraphError


class Graph:
    """Immutable undirected graph on vertices 0..n-1 with integer edge multiplicities.

    `labels` are optional vertex names; they become the names of the
    indeterminates of the generalized Laplacian (default x1..xn).
    """

    __slots__ = ("_n", "_adj", "_labels", "_neighbors")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphArgumentError(f"Vertex count must be non-negative, got {n}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphArgumentError(f"Expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise GraphArgumentError("Vertex labels must be distinct")
        adj = [[0] * n for _ in range(n)]
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                m = 1
            else:
                u, v, m = edge
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"Edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphArgumentError(f"Loops are not allowed (vertex {u})")
            if m < 0:
                raise GraphArgumentError(f"Negative multiplicity on edge ({u}, {v})")
            adj[u][v] += m
            adj[v][u] += m
        self._n = n
        self._adj = tuple(tuple(row) for row in adj)
        self._labels = labels
        self._neighbors = tuple(frozenset(v for v in range(n) if adj[u][v]) for u in range(n))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> "Graph":
        n = len(adj)
        edges = [(u, v, adj[u][v]) for u in range(n) for v in range(u + 1, n) if adj[u][v]]
        for u in range(n):
            if adj[u][u]:
                raise GraphArgumentError(f"Loops are not allowed (vertex {u})")
            for v in range(n):
                if adj[u][v] != adj[v][u]:
                    raise GraphArgumentError(f"Adjacency is not symmetric at ({u}, {v})")
        return cls(n, edges, labels)

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        H = nx.convert_node_labels_to_integers(G, ordering="sorted")
        edges = [(u, v, data.get("multiplicity", 1)) for u, v, data in H.edges(data=True)]
        return cls(H.number_of_nodes(), edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    def variable_names(self) -> Tuple[str, ...]:
        if self._labels is not None:
            return self._labels
        return tuple(f"x{i + 1}" for i in range(self._n))

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj[u][v]

    def adjacent(self, u: int, v: int) -> bool:
        return self._adj[u][v] > 0

    def neighbors(self, u: int) -> frozenset:
        return self._neighbors[u]

    def edges(self) -> List[Tuple[int, int, int]]:
        """Edges (u, v, multiplicity) with u < v, in lexicographic order."""
        return [(u, v, self._adj[u][v]) for u in range(self._n) for v in range(u + 1, self._n) if self._adj[u][v]]

    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edges())

    def adjacency_matrix(self) -> np.ndarray:
        return np.array(self._adj, dtype=np.int64).reshape(self._n, self._n)

    def degrees(self) -> List[int]:
        return [int(d) for d in self.adjacency_matrix().sum(axis=1)]

    def is_simple(self) -> bool:
        return all(m <= 1 for _, _, m in self.edges())

    def require_simple(self, operation: str) -> None:
        if not self.is_simple():
            raise NotSimpleGraphError(f"{operation} requires a simple graph")

    def is_complete(self) -> bool:
        return all(self._adj[u][v] for u in range(self._n) for v in range(u + 1, self._n))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self._n))
        G.add_edges_from((u, v, {"multiplicity": m}) for u, v, m in self.edges())
        return G

    def is_connected(self) -> bool:
        if self._n == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def connected_components(self) -> List["Graph"]:
        if self._n == 0:
            return []
        parts = sorted((sorted(c) for c in nx.connected_components(self.to_networkx())), key=lambda c: c[0])
        return [self.induced(part) for part in parts]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """G[U] with the vertices of U renumbered in the given order."""
        order = list(vertices)
        if len(set(order)) != len(order):
            raise GraphArgumentError("Induced vertex set has repeated vertices")
        for v in order:
            if not 0 <= v < self._n:
                raise GraphArgumentError(f"Invalid vertex {v}")
        edges = [(i, j, self._adj[order[i]][order[j]])
                 for i in range(len(order)) for j in range(i + 1, len(order)) if self._adj[order[i]][order[j]]]
        labels = tuple(self._labels[v] for v in order) if self._labels is not None else None
        return Graph(len(order), edges, labels)

    def delete_vertex(self, v: int) -> "Graph":
        if not 0 <= v < self._n:
            raise GraphArgumentError(f"Invalid vertex {v}")
        return self.induced(u for u in range(self._n) if u != v)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """New graph whose vertex i is the old vertex order[i]."""
        if sorted(order) != list(range(self._n)):
            raise GraphArgumentError("Relabel order must be a permutation of the vertices")
        return self.induced(order)

    def complement(self) -> "Graph":
        self.require_simple("complement")
        edges = [(u, v) for u in range(self._n) for v in range(u + 1, self._n) if not self._adj[u][v]]
        return Graph(self._n, edges, self._labels)

    def without_labels(self) -> "Graph":
        return Graph(self._n, self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={[(u, v) if m == 1 else (u, v, m) for u, v, m in self.edges()]})"
