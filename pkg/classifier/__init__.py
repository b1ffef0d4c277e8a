from classifier.families import (
    FamilyMembership, recognize, recognize_complete, recognize_tripartite, recognize_t_joins, parameterizations,
    COMPLETE, TRIPARTITE, T_JOIN, NONE,
)
from classifier.theorems import (
    G2Verdict, in_gamma_le1, in_gamma_le2_structural, in_gamma_le2_any, in_g1, in_g2, g2_clause,
    structural_gamma_bound,
)
from classifier.report import ClassificationReport, classify
