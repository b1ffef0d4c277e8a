"""Search for the minimal forbidden graphs of Γ≤k among small connected graphs."""
from typing import List, Optional, Tuple
from critical.corank import corank_exceeds
from graphs.components.enumeration import canonical_form, enumerate_connected
from graphs.components.graph6 import emit_graph6, parse_graph6
from graphs.graph import Graph
from utils.errors import GraphArgumentError
from utils.logger import logger


def is_forbidden(G: Graph, k: int) -> bool:
    """gamma(G) = k+1 and every vertex deletion brings gamma down to at most k."""
    if not corank_exceeds(G, k) or corank_exceeds(G, k + 1):
        return False
    return all(not corank_exceeds(G.delete_vertex(v), k) for v in range(G.n))


def _check_candidate(item: Tuple[str, int]) -> Optional[str]:
    text, k = item
    return text if is_forbidden(parse_graph6(text), k) else None


def forb_search(k: int, n_max: int, jobs: Optional[int] = None) -> List[Graph]:
    """Representatives of Forb(Γ≤k) on at most n_max vertices, ordered by size then canonical form."""
    from verification.runner import run_cases

    if k < 0:
        raise GraphArgumentError(f"k must be non-negative, got {k}")
    items = [(emit_graph6(G), k) for n in range(1, n_max + 1) for G in enumerate_connected(n)]
    results = run_cases(_check_candidate, items, jobs, desc=f"Forb(k={k})")
    found = []
    for result in results:
        if isinstance(result, Exception):
            raise result
        if result is not None:
            found.append(parse_graph6(result))
    found.sort(key=canonical_form)
    logger.info(f"Forb(Γ≤{k}) up to {n_max} vertices: {len(found)} graphs")
    return found
