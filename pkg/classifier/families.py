"""Recognizers for complete graphs, K_{m,n,o} and T_n v (K_m + K_o), read off the complement.

G is K_{m,n,o} exactly when its complement is a disjoint union of at most three cliques, and
G is T_n v (K_m + K_o) exactly when its complement is one clique (the T_n block) plus either a
single complete bipartite graph K_{m,o} or m isolated vertices (o = 0).
"""
from typing import List, Optional, Sequence
import networkx as nx
from pydantic import BaseModel
from graphs.components.constructions import complete, complete_multipartite, t_join_cliques
from graphs.graph import Graph

COMPLETE = "complete"
TRIPARTITE = "tripartite"
T_JOIN = "t-join-cliques"
NONE = "none"


class FamilyMembership(BaseModel):
    """`parameters` are [n] for complete, [m, n, o] (m >= n >= o) for tripartite and
    [n, m, o] (m >= o) for t-join-cliques; `partition` lists the vertex blocks in
    constructor order (X = K_m, Y = T_n, Z = K_o for t-join-cliques)."""

    family: str
    parameters: List[int] = []
    partition: List[List[int]] = []

    @property
    def mno(self) -> Optional[tuple]:
        """(m, n, o) in the table convention of the family, or None."""
        if self.family == TRIPARTITE:
            return tuple(self.parameters)
        if self.family == T_JOIN:
            n, m, o = self.parameters
            return m, n, o
        return None

    def family_graph(self) -> Optional[Graph]:
        if self.family == COMPLETE:
            return complete(self.parameters[0])
        if self.family == TRIPARTITE:
            return complete_multipartite(self.parameters)
        if self.family == T_JOIN:
            return t_join_cliques(*self.parameters)
        return None

    def validate(self, G: Graph) -> bool:
        """The family graph induced on the witness partition reproduces G."""
        family = self.family_graph()
        if family is None:
            return False
        order = [v for block in self.partition for v in block]
        if sorted(order) != list(range(G.n)) or family.n != G.n:
            return False
        return G.relabel(order).without_labels() == family.without_labels()


def _complement_components(G: Graph) -> List[List[int]]:
    H = G.complement().to_networkx()
    return sorted((sorted(c) for c in nx.connected_components(H)), key=lambda c: (-len(c), c[0]))


def _is_clique(C: Graph) -> bool:
    return C.is_complete()


def _bipartition(C: Graph) -> Optional[List[List[int]]]:
    """Sides of C if C is complete bipartite with both sides non-empty."""
    H = C.to_networkx()
    if C.n < 2 or not nx.is_connected(H) or not nx.is_bipartite(H):
        return None
    left, right = nx.bipartite.sets(H)
    if C.edge_count() != len(left) * len(right):
        return None
    return [sorted(left), sorted(right)]


def recognize_complete(G: Graph) -> Optional[FamilyMembership]:
    if G.n == 0 or not G.is_complete():
        return None
    return FamilyMembership(family=COMPLETE, parameters=[G.n], partition=[list(range(G.n))])


def recognize_tripartite(G: Graph) -> Optional[FamilyMembership]:
    if G.n == 0:
        return None
    G.require_simple("family recognition")
    components = _complement_components(G)
    if len(components) > 3:
        return None
    Gc = G.complement()
    if not all(_is_clique(Gc.induced(c)) for c in components):
        return None
    blocks = components + [[] for _ in range(3 - len(components))]
    return FamilyMembership(family=TRIPARTITE, parameters=[len(b) for b in blocks], partition=blocks)


def recognize_t_joins(G: Graph) -> List[FamilyMembership]:
    """Every way of reading G as T_n v (K_m + K_o) with n >= 1 and m >= o."""
    if G.n == 0:
        return []
    G.require_simple("family recognition")
    Gc = G.complement()
    components = _complement_components(G)
    found = {}
    for i, t_block in enumerate(components):
        if not _is_clique(Gc.induced(t_block)):
            continue
        rest = [c for j, c in enumerate(components) if j != i]
        if all(len(c) == 1 for c in rest):
            x_block, z_block = sorted(v for c in rest for v in c), []
        elif len(rest) == 1:
            sides = _bipartition(Gc.induced(rest[0]))
            if sides is None:
                continue
            x_block, z_block = [[rest[0][v] for v in side] for side in sides]
            if len(z_block) > len(x_block) or (len(z_block) == len(x_block) and z_block < x_block):
                x_block, z_block = z_block, x_block
        else:
            continue
        params = (len(t_block), len(x_block), len(z_block))
        if params not in found:
            found[params] = FamilyMembership(family=T_JOIN, parameters=list(params),
                                             partition=[x_block, list(t_block), z_block])
    return [found[p] for p in sorted(found)]


def parameterizations(G: Graph) -> List[FamilyMembership]:
    """All family readings of G: the tripartite one (if any) first, then the t-joins."""
    readings = []
    tripartite = recognize_tripartite(G)
    if tripartite is not None:
        readings.append(tripartite)
    return readings + recognize_t_joins(G)


def recognize(G: Graph, readings: Optional[Sequence[FamilyMembership]] = None) -> FamilyMembership:
    """Preferred reading: complete, then tripartite, then the first t-join; else family none."""
    complete_reading = recognize_complete(G)
    if complete_reading is not None:
        return complete_reading
    readings = parameterizations(G) if readings is None else readings
    return readings[0] if readings else FamilyMembership(family=NONE)
