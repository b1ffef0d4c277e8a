"""Ideals of ZZ[X]: strong Gröbner bases, normal forms, triviality, containment and equality."""
from functools import reduce as fold
from math import gcd
from typing import Iterable, List, Optional, Tuple
from pydantic import BaseModel
from sympy.polys.rings import PolyElement, PolyRing
from algebra.components.groebner import GroebnerBasis, groebner as _groebner
from algebra.components.witness import find_common_zero
from algebra.polynomials import is_unit, normalize_sign, render, sort_key
from utils.config import config
from utils.errors import GroebnerBudgetExhausted
from utils.logger import logger

# Certificate kinds for a triviality decision
UNIT_GENERATOR = "unit-generator"
CONSTANT_GCD = "constant-gcd"
COMMON_ZERO = "common-zero"
GROEBNER = "groebner"
ZERO_IDEAL = "zero-ideal"


class Ideal:
    """Finitely generated ideal; generators are kept up to sign, sorted and without repeats."""

    def __init__(self, R: PolyRing, generators: Iterable[PolyElement] = ()):
        self.ring = R
        unique = {normalize_sign(g) for g in generators if g}
        self.generators: Tuple[PolyElement, ...] = tuple(sorted(unique, key=sort_key))
        self._basis: Optional[GroebnerBasis] = None

    @classmethod
    def unit(cls, R: PolyRing) -> "Ideal":
        return cls(R, [R.one])

    @classmethod
    def zero(cls, R: PolyRing) -> "Ideal":
        return cls(R)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def groebner_basis(self) -> GroebnerBasis:
        if self._basis is None:
            self._basis = groebner(self)
        return self._basis

    def serialize(self) -> List[str]:
        return [render(g) for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal<{', '.join(self.serialize()) or '0'}>"


def groebner(ideal: Ideal, budget: Optional[int] = None, reduce: bool = True) -> GroebnerBasis:
    """Strong Gröbner basis; `budget` defaults to the configured pair budget (CRITID_BUDGET wins)."""
    return _groebner(ideal.ring, ideal.generators, budget or config.groebner_budget, reduce)


def normal_form(p: PolyElement, gb: GroebnerBasis) -> PolyElement:
    return gb.normal_form(p)


class TrivialityDecision(BaseModel):
    trivial: bool
    method: str
    modulus: Optional[int] = None
    point: Optional[List[int]] = None
    pairs_processed: int = 0


def decide_triviality(ideal: Ideal, budget: Optional[int] = None) -> TrivialityDecision:
    """Staged test for 1 in the ideal: unit generator, constant gcd, common zero, Gröbner basis."""
    if ideal.is_zero:
        return TrivialityDecision(trivial=False, method=ZERO_IDEAL)
    if any(is_unit(g) for g in ideal.generators):
        return TrivialityDecision(trivial=True, method=UNIT_GENERATOR)

    constants = [int(g.LC) for g in ideal.generators if g.is_ground]
    if constants and fold(gcd, constants) == 1:
        return TrivialityDecision(trivial=True, method=CONSTANT_GCD)

    settings = config.witness_config
    if settings.enabled:
        zero = find_common_zero(
            ideal.generators, ideal.ring.ngens, settings.primes, settings.integer_radius, settings.max_nodes
        )
        if zero is not None:
            logger.debug(f"Common zero {zero.point} (modulus {zero.modulus}) refutes triviality")
            return TrivialityDecision(
                trivial=False, method=COMMON_ZERO, modulus=zero.modulus, point=list(zero.point)
            )

    gb = ideal.groebner_basis() if budget is None else groebner(ideal, budget)
    return TrivialityDecision(trivial=gb.contains_unit, method=GROEBNER, pairs_processed=gb.pairs_processed)


def is_trivial(ideal: Ideal) -> bool:
    return decide_triviality(ideal).trivial


def contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    if I.ring != J.ring:
        raise ValueError("Ideals live in different rings")
    if J.is_zero:
        return True
    if I.is_zero:
        return False
    gb = I.groebner_basis()
    if gb.contains_unit:
        return True
    return all(gb.reduces_to_zero(g) for g in J.generators)


def equal(I: Ideal, J: Ideal) -> bool:
    return contains(I, J) and contains(J, I)


__all__ = [
    "Ideal", "GroebnerBasis", "GroebnerBudgetExhausted", "TrivialityDecision",
    "groebner", "normal_form", "decide_triviality", "is_trivial", "contains", "equal",
    "UNIT_GENERATOR", "CONSTANT_GCD", "COMMON_ZERO", "GROEBNER", "ZERO_IDEAL",
]
