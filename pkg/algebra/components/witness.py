"""Common-zero search used to refute triviality before any Gröbner work.

If every generator vanishes at a point of ZZ^n, or of F_p^n, then 1 is not in the ideal,
since 1 would have to vanish there too.
"""
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
from sympy.polys.rings import PolyElement
from utils.logger import logger

_Term = Tuple[int, Tuple[int, ...]]


class CommonZero(NamedTuple):
    modulus: Optional[int]
    point: Tuple[int, ...]


class _NodeBudgetExceeded(Exception):
    pass


def _compile(p: PolyElement) -> List[_Term]:
    return [(int(c), tuple(m)) for m, c in p.terms()]


def _value(terms: List[_Term], point: Sequence[int], modulus: Optional[int]) -> int:
    total = 0
    for coeff, monom in terms:
        term = coeff
        for i, e in enumerate(monom):
            if e:
                term *= point[i] ** e
        total += term
    return total % modulus if modulus else total


def _last_variable(terms: List[_Term]) -> int:
    last = -1
    for _, monom in terms:
        for i, e in enumerate(monom):
            if e and i > last:
                last = i
    return last


class CommonZeroSearch:
    """Depth-first assignment of variables in index order; a generator is checked as soon as
    its last variable is fixed."""

    def __init__(self, generators: Sequence[PolyElement], nvars: int, max_nodes: int):
        self.nvars = nvars
        self.max_nodes = max_nodes
        self.constants: List[int] = []
        self.checks: Dict[int, List[List[_Term]]] = {}
        for g in generators:
            terms = _compile(g)
            last = _last_variable(terms)
            if last < 0:
                self.constants.append(terms[0][0] if terms else 0)
            else:
                self.checks.setdefault(last, []).append(terms)
        self._nodes = 0

    def search(self, values: Sequence[int], modulus: Optional[int] = None) -> Optional[Tuple[int, ...]]:
        if any((c % modulus if modulus else c) for c in self.constants):
            return None
        self._nodes = 0
        point = [0] * self.nvars
        try:
            if self._extend(point, 0, values, modulus):
                return tuple(point)
        except _NodeBudgetExceeded:
            logger.debug(f"Common-zero search gave up after {self.max_nodes} nodes (modulus {modulus})")
        return None

    def _extend(self, point: List[int], depth: int, values: Sequence[int], modulus: Optional[int]) -> bool:
        if depth == self.nvars:
            return True
        for value in values:
            self._nodes += 1
            if self._nodes > self.max_nodes:
                raise _NodeBudgetExceeded()
            point[depth] = value
            if all(_value(terms, point, modulus) == 0 for terms in self.checks.get(depth, ())):
                if self._extend(point, depth + 1, values, modulus):
                    return True
        point[depth] = 0
        return False


def _integer_values(radius: int) -> List[int]:
    values = [0]
    for r in range(1, radius + 1):
        values += [r, -r]
    return values


def find_common_zero(
    generators: Sequence[PolyElement],
    nvars: int,
    primes: Sequence[int],
    radius: int,
    max_nodes: int,
) -> Optional[CommonZero]:
    """A point where all generators vanish, over the small integers or some F_p, if one is found."""
    search = CommonZeroSearch(generators, nvars, max_nodes)
    if not any(search.constants):
        point = search.search(_integer_values(radius))
        if point is not None:
            return CommonZero(None, point)
    for p in primes:
        point = search.search(range(p), p)
        if point is not None:
            return CommonZero(p, point)
    return None
