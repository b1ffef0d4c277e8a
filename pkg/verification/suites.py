"""The verification suites V1-V9 and P1, and the consolidated run."""
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import numpy as np
from classifier.families import T_JOIN, TRIPARTITE
from critical.forbidden import forb_search
from graphs.components.constructions import complete, cone, cycle, matching_removed, path, star
from graphs.components.enumeration import canonical_form, enumerate_connected_up_to
from graphs.components.graph6 import emit_graph6
from graphs.graph import Graph
from graphs.components.patterns import f2_patterns
from minor_tables.tables import FAMILY_PARAMETERS, PRESENTED_FAMILIES, i3_params, minor_table_params
from utils.config import config
from utils.logger import logger
from verification.components import cases
from verification.models import CaseRecord, VerificationReport, VerificationSuiteResult
from verification.runner import run_cases


class SuiteContext:
    def __init__(self, n_max: int, sweep_bound: int, jobs: Optional[int] = None):
        settings = config.verification_config
        self.n_max = n_max
        self.sweep_bound = sweep_bound
        self.jobs = jobs
        self.block_bound = settings.table_block_bound
        self.matching_n_max = settings.matching_n_max
        self.random_graphs = settings.random_graphs
        self.random_max_vertices = settings.random_max_vertices
        self.seed = settings.seed

    def run(self, func, items: Sequence, desc: str) -> List[CaseRecord]:
        return run_cases(func, items, self.jobs, desc=desc)


def _connected_graph6(n_max: int) -> List[str]:
    return [emit_graph6(G) for G in enumerate_connected_up_to(n_max)]


def suite_v1(ctx: SuiteContext) -> List[CaseRecord]:
    return ctx.run(cases.gamma_le1_case, _connected_graph6(ctx.n_max), "V1")


def suite_v2(ctx: SuiteContext) -> List[CaseRecord]:
    return ctx.run(cases.f2_critical_case, f2_patterns().names, "V2")


def _same_classes(found: Sequence[Graph], expected: Sequence[Graph]) -> bool:
    return sorted(canonical_form(G) for G in found) == sorted(canonical_form(G) for G in expected)


def suite_v3(ctx: SuiteContext) -> List[CaseRecord]:
    searches = [
        (2, min(6, ctx.n_max), f2_patterns().graphs()),
        (1, min(5, ctx.n_max), [path(3)]),
        (0, min(4, ctx.n_max), [complete(2)]),
    ]
    records = []
    for k, bound, expected in searches:
        expected = [G for G in expected if G.n <= bound]
        found = forb_search(k, bound, ctx.jobs)
        records.append(CaseRecord(
            key=f"forb({k},{bound})",
            inputs={"k": k, "n_max": bound},
            expected=sorted(emit_graph6(G) for G in expected),
            computed=sorted(emit_graph6(G) for G in found),
            passed=_same_classes(found, expected),
        ))
    return records


def suite_v4(ctx: SuiteContext) -> List[CaseRecord]:
    return ctx.run(cases.gamma_le2_case, _connected_graph6(ctx.n_max), "V4")


def suite_v5(ctx: SuiteContext) -> List[CaseRecord]:
    items = [(family, params) for family in PRESENTED_FAMILIES for params in i3_params(family, ctx.block_bound)]
    return ctx.run(cases.i3_case, items, "V5")


def suite_v6(ctx: SuiteContext) -> List[CaseRecord]:
    items = [(family, params) for family in FAMILY_PARAMETERS for params in minor_table_params(family, ctx.block_bound)]
    return ctx.run(cases.minor_table_case, items, "V6")


def matching_params(n_max: int) -> List[Tuple[int, int]]:
    """(n, k) with n >= 2k + 1; an n with no such k gets one (n, n // 2) entry, recorded as skipped."""
    items = []
    for n in range(2, n_max + 1):
        ks = [k for k in range(1, n // 2 + 1) if n >= 2 * k + 1]
        items += [(n, k) for k in ks] or [(n, n // 2)]
    return items


def suite_v7(ctx: SuiteContext) -> List[CaseRecord]:
    items = matching_params(ctx.matching_n_max)
    return ctx.run(cases.matching_group_case, items, "V7")


def suite_v8(ctx: SuiteContext) -> List[CaseRecord]:
    return [cases.example7_case("example7")]


def g2_sweep(sweep_bound: int) -> List[Tuple[str, Tuple[int, int, int]]]:
    """Connected members of both families with m + n + o <= sweep_bound and at least two vertices."""
    items = []
    for total in range(2, sweep_bound + 1):
        for m in range(total + 1):
            for n in range(total - m + 1):
                o = total - m - n
                if m >= n >= o and n >= 1:
                    items.append((TRIPARTITE, (m, n, o)))
                if n >= 1 and m >= max(o, 1):
                    items.append((T_JOIN, (m, n, o)))
    return items


# f1 of a few named graphs
F1_FACTS: List[Tuple[Callable[[], Graph], int]] = [
    (lambda: cone(star(3)), 2),
    (lambda: star(3), 3),
    (lambda: matching_removed(6, 2), 3),
    (lambda: matching_removed(5, 2), 2),
]


def suite_v9(ctx: SuiteContext) -> List[CaseRecord]:
    records = ctx.run(cases.g2_case, g2_sweep(ctx.sweep_bound), "V9")
    facts = [(emit_graph6(build()), f1) for build, f1 in F1_FACTS]
    return records + [cases.f1_fact_case(item) for item in facts]


def random_graph6(count: int, max_vertices: int, seed: int) -> List[str]:
    rng = np.random.default_rng(seed)
    found = []
    for _ in range(count):
        n = int(rng.integers(1, max_vertices + 1))
        upper = rng.random((n, n)) < 0.5
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if upper[u, v]]
        found.append(emit_graph6(Graph(n, edges)))
    return found


def suite_p1(ctx: SuiteContext) -> List[CaseRecord]:
    sample = random_graph6(ctx.random_graphs, ctx.random_max_vertices, ctx.seed)
    sample += [emit_graph6(cycle(n)) for n in range(3, ctx.random_max_vertices + 1)]
    items = [(text, sample[(i + 1) % len(sample)]) for i, text in enumerate(sample)]
    return ctx.run(cases.property_case, items, "P1")


SUITES: Dict[str, Tuple[str, Callable[[SuiteContext], List[CaseRecord]]]] = {
    "V1": ("gamma <= 1 iff complete iff P3-free", suite_v1),
    "V2": ("each F2 graph has gamma 3 and is gamma-critical", suite_v2),
    "V3": ("forbidden-graph search reproduces F2, {P3}, {P2}", suite_v3),
    "V4": ("gamma <= 2 iff F2-free iff complement recognizer fires", suite_v4),
    "V5": ("third critical ideals match the presentations", suite_v5),
    "V6": ("3-minor sets match the tables", suite_v6),
    "V7": ("critical groups of K_n minus a matching", suite_v7),
    "V8": ("seven-vertex graph with gamma 5 and no unit 5-minor", suite_v8),
    "V9": ("G2 clauses agree with f1 = 2", suite_v9),
    "P1": ("properties on random graphs", suite_p1),
}


def run_suite(name: str, ctx: SuiteContext, timings: bool = False) -> VerificationSuiteResult:
    description, suite = SUITES[name]
    logger.info(f"Running {name}: {description}")
    start = time.perf_counter()
    records = sorted(suite(ctx), key=lambda r: r.key)
    result = VerificationSuiteResult(suite=name, description=description, cases=records)
    if timings:
        result.seconds = round(time.perf_counter() - start, 3)
    if result.passed:
        logger.info(f"{name} passed ({len(records)} cases)")
    else:
        for record in result.failed_cases():
            logger.warning(f"{name} failed on {record.key}: {record.error or record.computed}")
    return result


def verify_all(
    n_max: Optional[int] = None,
    sweep_bound: Optional[int] = None,
    suites: Optional[Sequence[str]] = None,
    jobs: Optional[int] = None,
    timings: bool = False,
) -> VerificationReport:
    settings = config.verification_config
    n_max = settings.n_max if n_max is None else n_max
    sweep_bound = settings.sweep_bound if sweep_bound is None else sweep_bound
    if not 1 <= n_max <= 7:
        raise ValueError(f"n_max must lie in 1..7, got {n_max}")
    if not 2 <= sweep_bound <= 9:
        raise ValueError(f"sweep_bound must lie in 2..9, got {sweep_bound}")
    names = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}; known: {', '.join(SUITES)}")

    ctx = SuiteContext(n_max, sweep_bound, jobs)
    report = VerificationReport(n_max=n_max, sweep_bound=sweep_bound)
    for name in names:
        report.suites.append(run_suite(name, ctx, timings))
    logger.info(f"Verification {'passed' if report.passed else 'failed'}")
    return report
