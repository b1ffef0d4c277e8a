from graphs.graph import Graph
from graphs.components.constructions import (
    complete, trivial, path, cycle, star, cone, join, disjoint_union, matching_removed,
    complete_multipartite, t_join_cliques, example7, family_graph,
)
from graphs.components.graph6 import parse_graph6, emit_graph6, read_graph6_file, parse_edge_list
from graphs.components.patterns import (
    PatternSet, f2_patterns, disconnected_gamma2_patterns, contains_induced, find_induced, first_pattern_hit,
)
from graphs.components.enumeration import (
    GraphClassIterator, enumerate_connected, enumerate_connected_up_to, canonical_form, canonical_graph,
)
