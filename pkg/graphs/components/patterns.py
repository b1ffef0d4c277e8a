from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
from graphs.graph import Graph
from graphs.components.constructions import complete, disjoint_union, path
from utils.errors import GraphArgumentError

# 1-based edge sets read off the generalized Laplacians of the five minimal graphs with co-rank 3
F2_EDGES: Dict[str, Tuple[Tuple[int, int], ...]] = {
    "P4": ((1, 2), (2, 3), (3, 4)),
    "K5-S2": tuple((u, v) for u in range(1, 6) for v in range(u + 1, 6) if (u, v) not in {(1, 2), (1, 5)}),
    "K6-M2": tuple((u, v) for u in range(1, 7) for v in range(u + 1, 7) if (u, v) not in {(1, 2), (3, 6)}),
    "Gaa": ((2, 3), (1, 4), (2, 4), (3, 4), (4, 5)),
    "Gab": ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5)),
}
F2_SIZES = {"P4": 4, "K5-S2": 5, "K6-M2": 6, "Gaa": 5, "Gab": 5}


class PatternSet:
    """Named simple connected graphs searched for as induced subgraphs."""

    def __init__(self, patterns: Sequence[Tuple[str, Graph]]):
        self.patterns: List[Tuple[str, Graph]] = list(patterns)

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.patterns]

    def get(self, name: str) -> Graph:
        """Look up a pattern; set-difference notation such as `K6∖M2` is accepted for `K6-M2`."""
        name = name.replace("∖", "-")
        for pattern_name, graph in self.patterns:
            if pattern_name == name:
                return graph
        raise GraphArgumentError(f"Unknown pattern {name!r}; known: {', '.join(self.names)}")

    def graphs(self) -> List[Graph]:
        return [graph for _, graph in self.patterns]

    def __iter__(self) -> Iterator[Tuple[str, Graph]]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)


@lru_cache(maxsize=None)
def f2_patterns() -> PatternSet:
    """P4, K5∖S2, K6∖M2, Gaa and Gab, named `P4`, `K5-S2`, `K6-M2`, `Gaa`, `Gab` so the names
    stay ASCII in graph specs and JSON reports; `get` accepts either spelling."""
    return PatternSet([
        (name, Graph(F2_SIZES[name], [(u - 1, v - 1) for u, v in edges]))
        for name, edges in F2_EDGES.items()
    ])


@lru_cache(maxsize=None)
def disconnected_gamma2_patterns() -> PatternSet:
    """ℱ₂ together with P3 + P2 and 3P2, the obstructions once components may be separate."""
    extra = [
        ("P3+P2", disjoint_union(path(3), complete(2))),
        ("3P2", disjoint_union(disjoint_union(complete(2), complete(2)), complete(2))),
    ]
    return PatternSet(list(f2_patterns()) + extra)


def _search_order(H: Graph) -> List[int]:
    # each next pattern vertex is chosen to touch as many placed ones as possible
    order: List[int] = []
    remaining = set(range(H.n))
    while remaining:
        best = max(remaining, key=lambda h: (sum(1 for p in order if H.adjacent(h, p)), len(H.neighbors(h)), -h))
        order.append(best)
        remaining.remove(best)
    return order


def find_induced(G: Graph, H: Graph) -> Optional[Dict[int, int]]:
    """An embedding h -> g with G[image] isomorphic to H via the map, or None."""
    G.require_simple("induced subgraph search")
    H.require_simple("induced subgraph search")
    if H.n > G.n:
        return None
    if H.n == 0:
        return {}
    g_deg = [len(G.neighbors(v)) for v in range(G.n)]
    h_deg = [len(H.neighbors(h)) for h in range(H.n)]
    order = _search_order(H)
    candidates = {
        h: [v for v in range(G.n)
            if g_deg[v] >= h_deg[h] and (G.n - 1 - g_deg[v]) >= (H.n - 1 - h_deg[h])]
        for h in order
    }
    mapping: Dict[int, int] = {}
    used = set()

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        h = order[depth]
        for v in candidates[h]:
            if v in used:
                continue
            if all(H.adjacent(h, p) == G.adjacent(v, mapping[p]) for p in order[:depth]):
                mapping[h] = v
                used.add(v)
                if extend(depth + 1):
                    return True
                del mapping[h]
                used.discard(v)
        return False

    return dict(mapping) if extend(0) else None


def contains_induced(G: Graph, H: Graph) -> bool:
    return find_induced(G, H) is not None


def first_pattern_hit(G: Graph, patterns: PatternSet) -> Optional[str]:
    for name, pattern in patterns:
        if contains_induced(G, pattern):
            return name
    return None
