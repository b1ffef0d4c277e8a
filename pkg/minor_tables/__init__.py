from minor_tables.tables import (
    KMN, KMNO, KM_JOIN_TN, TN_JOIN_KM_KO, FAMILY_PARAMETERS, PRESENTED_FAMILIES,
    MinorTableComparison, I3Check, family_graph, expected_3minors, expected_I3, presentation_case,
    compare_minor_table, verify_minor_table, check_I3, verify_I3,
    minor_table_admissible, i3_admissible, minor_table_params, i3_params,
)
from minor_tables.components.loader import MinorPattern, IdealPresentation, instantiate
