from pathlib import Path
from typing import List, Tuple
import networkx as nx
from graphs.graph import Graph
from utils.config import config
from utils.errors import EdgeListParseError, Graph6ParseError, GraphArgumentError, NotSimpleGraphError, SizeLimitError

GRAPH6_HEADER = ">>graph6<<"


def _decode_size(body: str, base: int) -> Tuple[int, int]:
    """Return (n, number of size bytes) of the N(n) field."""
    values = [ord(c) - 63 for c in body]
    if values[0] != 63:
        return values[0], 1
    if len(values) < 4:
        raise Graph6ParseError("Truncated vertex-count field", base + len(values))
    if values[1] != 63:
        return (values[1] << 12) | (values[2] << 6) | values[3], 4
    if len(values) < 8:
        raise Graph6ParseError("Truncated vertex-count field", base + len(values))
    n = 0
    for v in values[2:8]:
        n = (n << 6) | v
    return n, 8


def validate_graph6(text: str) -> Tuple[str, int]:
    """Check framing of a graph6 string; return (body, n)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6ParseError("Empty graph6 string", base)
    for i, c in enumerate(s):
        if not 63 <= ord(c) <= 126:
            raise Graph6ParseError(f"Character {c!r} outside the graph6 range 63..126", base + i)
    n, size_bytes = _decode_size(s, base)
    limit = config.settings.limits.max_graph6_vertices
    if n > limit:
        raise SizeLimitError(f"graph6 string encodes {n} vertices, limit is {limit}")
    expected = size_bytes + (n * (n - 1) // 2 + 5) // 6
    if len(s) < expected:
        raise Graph6ParseError(f"Truncated bit field: {n} vertices need {expected} bytes, got {len(s)}", base + len(s))
    if len(s) > expected:
        raise Graph6ParseError("Trailing bytes after the bit field", base + expected)
    return s, n


def parse_graph6(text: str) -> Graph:
    body, _ = validate_graph6(text)
    return Graph.from_networkx(nx.from_graph6_bytes(body.encode("ascii")))


def emit_graph6(graph: Graph) -> str:
    if not graph.is_simple():
        raise NotSimpleGraphError("graph6 encodes simple graphs only")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def read_graph6_file(path: Path) -> List[Graph]:
    """One graph6 string per line; blank lines skipped."""
    graphs = []
    with open(path, "r", encoding="ascii") as f:
        for line in f:
            if line.strip():
                graphs.append(parse_graph6(line.strip()))
    return graphs


def parse_edge_list(text: str) -> Graph:
    """'n' on the first line, then 'u v' or 'u v m' per line, 0-based; '#' starts a comment."""
    n = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise EdgeListParseError(f"Non-integer field in {line!r}", number)
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise EdgeListParseError("First line must hold the vertex count", number)
            n = values[0]
            continue
        if len(values) not in (2, 3):
            raise EdgeListParseError(f"Expected 'u v' or 'u v m', got {line!r}", number)
        u, v = values[0], values[1]
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListParseError(f"Invalid edge ({u}, {v}) for {n} vertices", number)
        m = values[2] if len(values) == 3 else 1
        if m < 1:
            raise EdgeListParseError(f"Multiplicity must be positive, got {m}", number)
        edges.append((u, v, m))
    if n is None:
        raise EdgeListParseError("Missing vertex count", 1)
    try:
        return Graph(n, edges)
    except GraphArgumentError as e:
        raise EdgeListParseError(str(e), 1) from e
