"""Isomorphism-free enumeration of small connected graphs.

Every connected graph on n vertices has a vertex whose removal leaves it connected, so the
classes on n vertices are reached from the classes on n-1 vertices by adding one vertex with
a non-empty neighbourhood; duplicates are removed by an exact canonical form.
"""
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, List, Tuple
from graphs.graph import Graph
from utils.config import config
from utils.errors import SizeLimitError
from utils.logger import logger

CanonicalForm = Tuple[int, int]


def _refined_colors(G: Graph) -> List[int]:
    colors = [len(G.neighbors(v)) for v in range(G.n)]
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in G.neighbors(v)))) for v in range(G.n)]
        rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [rank[sig] for sig in signatures]
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def _code(G: Graph, order: Tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        for i in range(j):
            code = (code << 1) | G.adjacent(order[i], order[j])
    return code


def canonical_labeling(G: Graph) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """(form, order): the smallest adjacency code over orderings that respect the colour cells."""
    G.require_simple("canonical form")
    colors = _refined_colors(G)
    cells = [[v for v in range(G.n) if colors[v] == c] for c in sorted(set(colors))]
    best_code, best_order = None, tuple(range(G.n))
    for choice in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for part in choice for v in part)
        code = _code(G, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return (G.n, best_code or 0), best_order


def canonical_form(G: Graph) -> CanonicalForm:
    return canonical_labeling(G)[0]


def canonical_graph(G: Graph) -> Graph:
    return G.without_labels().relabel(canonical_labeling(G)[1])


def _check_range(n: int) -> None:
    limit = config.settings.limits.max_enumeration_vertices
    if not 1 <= n <= limit:
        raise SizeLimitError(f"Enumeration supports 1 <= n <= {limit}, got {n}")


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found = {}
    for base in _connected_classes(n - 1):
        edges = [(u, v) for u, v, _ in base.edges()]
        for mask in range(1, 1 << (n - 1)):
            G = Graph(n, edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1])
            form, order = canonical_labeling(G)
            if form not in found:
                found[form] = G.relabel(order)
    logger.debug(f"Enumerated {len(found)} connected classes on {n} vertices")
    return tuple(found[form] for form in sorted(found))


class GraphClassIterator:
    """One canonical representative per isomorphism class of connected simple graphs on n vertices."""

    def __init__(self, n: int):
        _check_range(n)
        self.n = n
        self._classes = _connected_classes(n)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._classes)

    def __len__(self) -> int:
        return len(self._classes)

    def partition(self, index: int, parts: int) -> Iterator[Graph]:
        """Every parts-th representative starting at index, for splitting work across workers."""
        return iter(self._classes[index::parts])


def enumerate_connected(n: int) -> GraphClassIterator:
    return GraphClassIterator(n)


def enumerate_connected_up_to(n_max: int) -> List[Graph]:
    return [G for n in range(1, n_max + 1) for G in enumerate_connected(n)]
