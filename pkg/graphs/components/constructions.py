"""Standard graph constructions: complete, trivial, paths, stars, joins, unions and the two
families K_{m,n,o} and T_n v (K_m + K_o)."""
from itertools import combinations
from typing import List, Optional, Sequence, Tuple
from graphs.graph import Graph
from utils.errors import GraphArgumentError, UnknownFamilyError

BLOCK_NAMES = ("x", "y", "z")

# 1-based edge list of the seven-vertex graph whose co-rank is 5 without any unit 5-minor
EXAMPLE7_EDGES = (
    (1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 7), (3, 4), (3, 6),
    (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
)


def _check_size(value: int, name: str) -> None:
    if value < 0:
        raise GraphArgumentError(f"{name} must be non-negative, got {value}")


def _block_labels(sizes: Sequence[int]) -> Tuple[str, ...]:
    return tuple(f"{BLOCK_NAMES[b]}{i + 1}" for b, size in enumerate(sizes) for i in range(size))


def _combined_labels(G: Graph, H: Graph) -> Optional[Tuple[str, ...]]:
    if G.labels is None or H.labels is None:
        return None
    merged = G.labels + H.labels
    return merged if len(set(merged)) == len(merged) else None


def complete(n: int) -> Graph:
    _check_size(n, "n")
    return Graph(n, combinations(range(n), 2))


def trivial(n: int) -> Graph:
    _check_size(n, "n")
    return Graph(n)


def path(n: int) -> Graph:
    _check_size(n, "n")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    edges = G.edges() + [(u + shift, v + shift, m) for u, v, m in H.edges()]
    return Graph(G.n + H.n, edges, _combined_labels(G, H))


def join(G: Graph, H: Graph) -> Graph:
    union = disjoint_union(G, H)
    cross = [(u, G.n + v) for u in range(G.n) for v in range(H.n)]
    return Graph(union.n, union.edges() + cross, union.labels)


def cone(G: Graph) -> Graph:
    return join(trivial(1), G)


def star(k: int) -> Graph:
    """S_k = c(T_k), centre at vertex 0."""
    return cone(trivial(k))


def matching_removed(n: int, k: int) -> Graph:
    """K_n minus the matching {v1v2, v3v4, ..., v_{2k-1}v_{2k}}."""
    _check_size(k, "k")
    if n < 2 * k:
        raise GraphArgumentError(f"K_{n} has no matching with {k} edges")
    removed = {(2 * i, 2 * i + 1) for i in range(k)}
    return Graph(n, [e for e in combinations(range(n), 2) if e not in removed])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{parts}; with at most three parts the blocks are labelled x, y, z."""
    for size in parts:
        _check_size(size, "part size")
    block_of = [b for b, size in enumerate(parts) for _ in range(size)]
    n = len(block_of)
    edges = [(u, v) for u, v in combinations(range(n), 2) if block_of[u] != block_of[v]]
    labels = _block_labels(parts) if len(parts) <= len(BLOCK_NAMES) else None
    return Graph(n, edges, labels)


def t_join_cliques(n: int, m: int, o: int) -> Graph:
    """T_n v (K_m + K_o) with vertex blocks X = K_m, Y = T_n, Z = K_o in that order."""
    for value, name in ((n, "n"), (m, "m"), (o, "o")):
        _check_size(value, name)
    x_block = range(m)
    y_block = range(m, m + n)
    z_block = range(m + n, m + n + o)
    edges = list(combinations(x_block, 2)) + list(combinations(z_block, 2))
    edges += [(u, y) for u in x_block for y in y_block]
    edges += [(y, z) for y in y_block for z in z_block]
    return Graph(m + n + o, edges, _block_labels((m, n, o)))


def example7() -> Graph:
    return Graph(7, [(u - 1, v - 1) for u, v in EXAMPLE7_EDGES])


def _ints(text: str, count: Optional[int] = None) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as e:
        raise GraphArgumentError(f"Invalid family parameters {text!r}") from e
    if count is not None and len(values) != count:
        raise GraphArgumentError(f"Expected {count} parameters, got {text!r}")
    return values


def family_graph(spec: str) -> Graph:
    """Build a graph from a `name:params` string such as `tjoin:1,3,2` or `f2:Gaa`."""
    from graphs.components.patterns import f2_patterns

    name, _, params = spec.partition(":")
    name = name.strip().lower()
    if name == "complete":
        return complete(*_ints(params, 1))
    if name == "trivial":
        return trivial(*_ints(params, 1))
    if name == "path":
        return path(*_ints(params, 1))
    if name == "cycle":
        return cycle(*_ints(params, 1))
    if name == "star":
        return star(*_ints(params, 1))
    if name == "matching":
        return matching_removed(*_ints(params, 2))
    if name == "multipartite":
        return complete_multipartite(_ints(params))
    if name == "tjoin":
        return t_join_cliques(*_ints(params, 3))
    if name == "f2":
        return f2_patterns().get(params.strip())
    if name == "example7":
        return example7()
    raise UnknownFamilyError(f"Unknown graph family {name!r}")
