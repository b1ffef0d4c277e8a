"""Membership tests for Γ≤1, Γ≤2, 𝒢₁ and 𝒢₂ by graph structure alone."""
from math import gcd
from typing import Callable, List, Optional, Tuple
from pydantic import BaseModel
from classifier.families import (
    COMPLETE, NONE, T_JOIN, TRIPARTITE, FamilyMembership, parameterizations, recognize,
)
from graphs.graph import Graph
from utils.errors import DisconnectedGraphError, GraphArgumentError

# contribution of a component to gamma when read structurally; 3 means "more than two"
_EXCEEDS = 3


def _require_connected(G: Graph, operation: str) -> None:
    G.require_simple(operation)
    if not G.is_connected():
        raise DisconnectedGraphError(f"{operation} needs a connected graph")


def in_gamma_le1(G: Graph) -> bool:
    """Connected graphs with gamma <= 1 are exactly the complete graphs."""
    _require_connected(G, "Γ≤1 membership")
    return G.is_complete()


def in_gamma_le2_structural(G: Graph) -> FamilyMembership:
    _require_connected(G, "Γ≤2 membership")
    return recognize(G)


def component_contribution(C: Graph) -> int:
    if C.n == 1:
        return 0
    if C.is_complete():
        return 1
    return 2 if recognize(C).family != NONE else _EXCEEDS


def structural_gamma_bound(G: Graph) -> int:
    """Sum of the component contributions, capped at 3."""
    G.require_simple("Γ≤2 membership")
    return min(_EXCEEDS, sum(component_contribution(C) for C in G.connected_components()))


def in_gamma_le2_any(G: Graph) -> bool:
    """Γ≤2 membership for possibly disconnected graphs: trivial components add nothing."""
    return structural_gamma_bound(G) <= 2


def in_g1(G: Graph) -> bool:
    """f1(G) = 1 exactly for complete graphs on at least two vertices."""
    _require_connected(G, "𝒢₁ membership")
    if G.n < 2:
        raise GraphArgumentError("𝒢₁ membership needs at least two vertices")
    return G.is_complete()


Clause = Tuple[str, Callable[[int, int, int], Optional[str]]]


def _same_parity(m: int, n: int, o: int) -> bool:
    return m % 2 == n % 2 == o % 2


def _gcd_clause(a: int, b: int, label: str) -> Optional[str]:
    d = gcd(a, b)
    return f"{label}={d}" if d != 1 else None


def _holds(condition: bool, evidence: str = "") -> Optional[str]:
    return evidence if condition else None


# (m, n, o) with m >= n >= o
TRIPARTITE_CLAUSES: List[Clause] = [
    ("m,n,o>=2 same parity",
     lambda m, n, o: _holds(o >= 2 and _same_parity(m, n, o), f"parity={m % 2}")),
    ("m,n>=3, o=1, gcd(m+1,n+1)!=1",
     lambda m, n, o: _gcd_clause(m + 1, n + 1, f"gcd({m + 1},{n + 1})") if n >= 3 and o == 1 else None),
    ("m>=2, n=o=1", lambda m, n, o: _holds(m >= 2 and n == 1 and o == 1)),
    ("m,n>=2, o=0, gcd(m,n)!=1",
     lambda m, n, o: _gcd_clause(m, n, f"gcd({m},{n})") if n >= 2 and o == 0 else None),
    ("m>=2, n=2, o=0", lambda m, n, o: _holds(m >= 2 and n == 2 and o == 0)),
    ("m=2, n=1", lambda m, n, o: _holds(m == 2 and n == 1)),
]

# (m, n, o) with m >= o, n the size of the independent block
T_JOIN_CLAUSES: List[Clause] = [
    ("m,n,o>=2 same parity",
     lambda m, n, o: _holds(min(m, n, o) >= 2 and _same_parity(m, n, o), f"parity={m % 2}")),
    ("m,o>=2, n=1, gcd(m+1,o+1)!=1",
     lambda m, n, o: _gcd_clause(m + 1, o + 1, f"gcd({m + 1},{o + 1})") if o >= 2 and n == 1 else None),
    ("m,n>=2, o=1, gcd(m+1,n-1)!=1",
     lambda m, n, o: _gcd_clause(m + 1, n - 1, f"gcd({m + 1},{n - 1})") if m >= 2 and n >= 2 and o == 1 else None),
    ("m>=1, n=o=1", lambda m, n, o: _holds(m >= 1 and n == 1 and o == 1)),
    ("n>=1, m=o=1", lambda m, n, o: _holds(n >= 1 and m == 1 and o == 1)),
    ("m,n>=3, o=0, gcd(m,n)!=1",
     lambda m, n, o: _gcd_clause(m, n, f"gcd({m},{n})") if m >= 3 and n >= 3 and o == 0 else None),
    ("m>=2, n=2, o=0", lambda m, n, o: _holds(m >= 2 and n == 2 and o == 0)),
    ("m=2, n>=2, o=0", lambda m, n, o: _holds(m == 2 and n >= 2 and o == 0)),
]


class G2Verdict(BaseModel):
    member: bool
    clause: Optional[str] = None
    family: Optional[str] = None
    parameters: Optional[List[int]] = None
    evidence: Optional[str] = None


def g2_clause(family: str, m: int, n: int, o: int) -> Optional[Tuple[str, str]]:
    """First clause of the family that fires at (m, n, o), with its evidence."""
    clauses = TRIPARTITE_CLAUSES if family == TRIPARTITE else T_JOIN_CLAUSES
    for label, test in clauses:
        evidence = test(m, n, o)
        if evidence is not None:
            return label, evidence
    return None


def in_g2(G: Graph) -> G2Verdict:
    """𝒢₂ membership: some reading of G as K_{m,n,o} or T_n v (K_m + K_o) satisfies a clause."""
    _require_connected(G, "𝒢₂ membership")
    for reading in parameterizations(G):
        m, n, o = reading.mno
        fired = g2_clause(reading.family, m, n, o)
        if fired is not None:
            label, evidence = fired
            family = "K" if reading.family == TRIPARTITE else "T"
            return G2Verdict(member=True, clause=f"{family}: {label}", family=reading.family,
                             parameters=[m, n, o], evidence=evidence or None)
    return G2Verdict(member=False)


__all__ = [
    "in_gamma_le1", "in_gamma_le2_structural", "in_gamma_le2_any", "in_g1", "in_g2", "G2Verdict",
    "component_contribution", "structural_gamma_bound", "g2_clause",
    "TRIPARTITE_CLAUSES", "T_JOIN_CLAUSES", "COMPLETE", "T_JOIN",
]
