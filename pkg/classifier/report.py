from typing import List, Optional
from pydantic import BaseModel
from classifier.families import NONE, FamilyMembership, recognize
from classifier.theorems import G2Verdict, in_g2, structural_gamma_bound
from critical.corank import algebraic_corank
from critical.groups import critical_group
from graphs.components.graph6 import emit_graph6
from graphs.components.patterns import disconnected_gamma2_patterns, f2_patterns, first_pattern_hit
from graphs.graph import Graph
from utils.config import config
from utils.logger import logger


class ClassificationReport(BaseModel):
    graph6: str
    vertices: int
    connected: bool
    gamma: Optional[int] = None
    invariant_factors: Optional[List[int]] = None
    f1: Optional[int] = None
    family: Optional[FamilyMembership] = None
    gamma_le1: bool
    gamma_le2: bool
    forbidden_hit: Optional[str] = None
    g2: Optional[G2Verdict] = None
    consistent: bool = True
    notes: List[str] = []


def classify(G: Graph) -> ClassificationReport:
    """Structural classification of a simple graph, cross-checked against gamma and K(G)."""
    G.require_simple("classification")
    connected = G.is_connected()
    bound = structural_gamma_bound(G) if G.n else 0
    patterns = f2_patterns() if connected else disconnected_gamma2_patterns()
    report = ClassificationReport(
        graph6=emit_graph6(G),
        vertices=G.n,
        connected=connected,
        gamma_le1=bound <= 1,
        gamma_le2=bound <= 2,
        forbidden_hit=first_pattern_hit(G, patterns),
    )

    if connected:
        report.family = recognize(G)
        group = critical_group(G)
        report.invariant_factors = group.factors.diag
        report.f1 = group.f(1)
        if G.n >= 2:
            report.g2 = in_g2(G)
            if report.g2.member != (report.f1 == 2):
                report.notes.append(f"𝒢₂ clause verdict {report.g2.member} but f1 = {report.f1}")

    if G.n <= config.limits_config.max_gamma_vertices:
        report.gamma = algebraic_corank(G).gamma
        if (report.gamma <= 2) != report.gamma_le2:
            report.notes.append(f"gamma = {report.gamma} disagrees with the structural Γ≤2 verdict")
        if connected and report.f1 is not None and G.n >= 2 and report.gamma > report.f1:
            report.notes.append(f"gamma = {report.gamma} exceeds f1 = {report.f1}")
    if (report.forbidden_hit is None) != report.gamma_le2:
        report.notes.append(f"forbidden pattern {report.forbidden_hit} disagrees with the structural Γ≤2 verdict")
    if connected and report.family is not None and report.family.family != NONE and not report.family.validate(G):
        report.notes.append("family witness does not reproduce the graph")

    report.consistent = not report.notes
    for note in report.notes:
        logger.warning(f"{report.graph6}: {note}")
    return report
