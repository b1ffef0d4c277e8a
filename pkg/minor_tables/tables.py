"""Expected 3-minors and third critical ideals of the two-parameter and three-parameter families,
instantiated from the table files, and the checks against the computed ones."""
from typing import Dict, Iterator, List, Sequence, Set, Tuple
from pydantic import BaseModel
from sympy.polys.rings import PolyElement
from algebra.ideals import Ideal, equal, is_trivial
from algebra.polynomials import render, sort_key
from critical.laplacian import critical_ideal, generalized_laplacian, k_minors
from graphs.components.constructions import complete_multipartite, t_join_cliques
from graphs.graph import Graph
from minor_tables.components.loader import instantiate, patterns_for, presentation_cases
from utils.errors import HypothesisError, UnknownFamilyError
from utils.logger import logger

KMN = "Kmn"
KMNO = "Kmno"
KM_JOIN_TN = "KmJoinTn"
TN_JOIN_KM_KO = "TnJoinKmKo"

# parameter names per family, in the order they are passed
FAMILY_PARAMETERS: Dict[str, Tuple[str, ...]] = {
    KMN: ("m", "n"),
    KMNO: ("m", "n", "o"),
    KM_JOIN_TN: ("m", "n"),
    TN_JOIN_KM_KO: ("m", "n", "o"),
}
PRESENTED_FAMILIES = (KMNO, TN_JOIN_KM_KO)


def _sizes(family: str, params: Sequence[int]) -> Dict[str, int]:
    if family not in FAMILY_PARAMETERS:
        raise UnknownFamilyError(f"Unknown family {family!r}; known: {', '.join(FAMILY_PARAMETERS)}")
    names = FAMILY_PARAMETERS[family]
    if len(params) != len(names):
        raise HypothesisError(f"{family} takes {len(names)} parameters ({', '.join(names)}), got {tuple(params)}")
    if any(p < 0 for p in params):
        raise HypothesisError(f"{family} parameters must be non-negative, got {tuple(params)}")
    sizes = {"m": 0, "n": 0, "o": 0}
    sizes.update(zip(names, params))
    return sizes


def family_graph(family: str, params: Sequence[int]) -> Graph:
    """The graph of the family with blocks X (m), Y (n), Z (o) labelled x.., y.., z.."""
    s = _sizes(family, params)
    if family == KMN:
        return complete_multipartite([s["m"], s["n"]])
    if family == KMNO:
        return complete_multipartite([s["m"], s["n"], s["o"]])
    if family == KM_JOIN_TN:
        return t_join_cliques(s["n"], s["m"], 0)
    return t_join_cliques(s["n"], s["m"], s["o"])


def _block_sizes(sizes: Dict[str, int]) -> Dict[str, int]:
    return {"x": sizes["m"], "y": sizes["n"], "z": sizes["o"]}


def minor_table_admissible(family: str, params: Sequence[int]) -> bool:
    """Every block non-empty."""
    _sizes(family, params)
    return all(p >= 1 for p in params)


def i3_admissible(family: str, params: Sequence[int]) -> bool:
    s = _sizes(family, params)
    m, n, o = s["m"], s["n"], s["o"]
    if family == KMNO:
        return m >= n >= o and n >= 1 and m + n + o >= 4
    if family == TN_JOIN_KM_KO:
        # o = 0 with n = 1 is complete, o = 0 with m <= 1 is a star
        return n >= 1 and m >= o and m + n + o >= 4 and not (o == 0 and (n == 1 or m <= 1))
    raise UnknownFamilyError(f"No I3 presentation for family {family!r}")


def expected_3minors(family: str, params: Sequence[int]) -> Set[PolyElement]:
    sizes = _sizes(family, params)
    R = generalized_laplacian(family_graph(family, params)).ring
    blocks = _block_sizes(sizes)
    expected: Set[PolyElement] = set()
    for pattern in patterns_for(family):
        if pattern.applies(sizes):
            expected |= instantiate(R, pattern.template, blocks)
    return expected


def presentation_case(family: str, params: Sequence[int]):
    """The single presentation case that fires at params."""
    if not i3_admissible(family, params):
        raise HypothesisError(f"{family}{tuple(params)} is outside the hypotheses of the I3 presentation")
    sizes = _sizes(family, params)
    fired = [case for case in presentation_cases(family) if case.applies(sizes)]
    if len(fired) != 1:
        raise HypothesisError(f"{len(fired)} presentation cases fire for {family}{tuple(params)}")
    return fired[0]


def expected_I3(family: str, params: Sequence[int]) -> Ideal:
    case = presentation_case(family, params)
    R = generalized_laplacian(family_graph(family, params)).ring
    blocks = _block_sizes(_sizes(family, params))
    generators: Set[PolyElement] = set()
    for template in case.generators:
        generators |= instantiate(R, template, blocks)
    return Ideal(R, generators)


class MinorTableComparison(BaseModel):
    family: str
    params: List[int]
    missing: List[str] = []
    unexpected: List[str] = []

    @property
    def matches(self) -> bool:
        return not self.missing and not self.unexpected


def _rendered(polys: Set[PolyElement]) -> List[str]:
    return [render(p) for p in sorted(polys, key=sort_key)]


def compare_minor_table(family: str, params: Sequence[int]) -> MinorTableComparison:
    """Symmetric difference between the table and the computed 3-minors."""
    expected = expected_3minors(family, params)
    computed = set(k_minors(generalized_laplacian(family_graph(family, params)), 3)) if sum(params) >= 3 else set()
    comparison = MinorTableComparison(
        family=family,
        params=list(params),
        missing=_rendered(expected - computed),
        unexpected=_rendered(computed - expected),
    )
    if not comparison.matches:
        logger.warning(f"{family}{tuple(params)}: missing {comparison.missing}, unexpected {comparison.unexpected}")
    return comparison


def verify_minor_table(family: str, params: Sequence[int]) -> bool:
    return compare_minor_table(family, params).matches


class I3Check(BaseModel):
    family: str
    params: List[int]
    case: str
    presented: List[str]
    equal: bool
    nontrivial: bool

    @property
    def passed(self) -> bool:
        return self.equal and self.nontrivial


def check_I3(family: str, params: Sequence[int]) -> I3Check:
    case = presentation_case(family, params)
    presented = expected_I3(family, params)
    computed = critical_ideal(family_graph(family, params), 3).ideal
    check = I3Check(
        family=family,
        params=list(params),
        case=case.guard_text,
        presented=presented.serialize(),
        equal=equal(computed, presented),
        nontrivial=not is_trivial(presented),
    )
    if not check.passed:
        logger.warning(f"I3 of {family}{tuple(params)} vs case [{check.case}]: equal={check.equal}, nontrivial={check.nontrivial}")
    return check


def verify_I3(family: str, params: Sequence[int]) -> bool:
    return check_I3(family, params).passed


def minor_table_params(family: str, block_bound: int) -> Iterator[Tuple[int, ...]]:
    """Admissible parameters with every block at most block_bound and at least three vertices."""
    arity = len(FAMILY_PARAMETERS[family])
    for params in _grid(arity, 1, block_bound):
        if sum(params) >= 3:
            yield params


def i3_params(family: str, block_bound: int) -> Iterator[Tuple[int, int, int]]:
    for params in _grid(3, 0, block_bound):
        if i3_admissible(family, params):
            yield params


def _grid(arity: int, low: int, high: int) -> Iterator[Tuple[int, ...]]:
    if arity == 0:
        yield ()
        return
    for head in range(low, high + 1):
        for tail in _grid(arity - 1, low, high):
            yield (head,) + tail
