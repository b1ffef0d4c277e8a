"""Strong Gröbner bases over the integers.

Buchberger's algorithm adapted to the Euclidean domain ZZ: besides S-polynomials every
pair contributes a GCD-polynomial whose leading coefficient is the gcd of the two leading
coefficients, so that for every f in the ideal some basis leading term divides LT(f),
coefficient included. Reduction uses the symmetric remainder, so a term c*X^m is reducible
by g exactly when LM(g) | X^m and the quotient of c by LC(g) is non-zero.
"""
import heapq
from math import gcd
from typing import List, Optional, Sequence, Tuple
from sympy.polys.domains import ZZ
from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyElement, PolyRing
from utils.errors import GroebnerBudgetExhausted
from utils.logger import logger


def symmetric_remainder(c: int, a: int) -> Tuple[int, int]:
    """(q, r) with c = q*a + r and -|a|/2 < r <= |a|/2."""
    b = abs(a)
    r = c % b
    if 2 * r > b:
        r -= b
    return (c - r) // a, r


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(u, v, d) with u*a + v*b = d = gcd(a, b) > 0."""
    u, v, d = (int(t) for t in ZZ.gcdex(ZZ(a), ZZ(b)))
    if d < 0:
        u, v, d = -u, -v, -d
    return u, v, d


class _Lead:
    __slots__ = ("monom", "coeff", "poly")

    def __init__(self, poly: PolyElement):
        self.monom, coeff = poly.LT
        self.coeff = int(coeff)
        self.poly = poly


def reduce_polynomial(p: PolyElement, leads: Sequence[_Lead], full: bool = True) -> PolyElement:
    """Remainder of p modulo the polynomials behind `leads`; with full=False only the top is reduced."""
    R = p.ring
    p = p.copy()
    remainder = R.zero.copy()
    while p:
        monom, coeff = p.LT
        c = int(coeff)
        for lead in leads:
            shift = monomial_div(monom, lead.monom)
            if shift is None:
                continue
            q, _ = symmetric_remainder(c, lead.coeff)
            if q:
                p = p - lead.poly.mul_term((shift, ZZ(q)))
                break
        else:
            if not full:
                return remainder + p
            remainder[monom] = coeff
            del p[monom]
    return remainder


def _normalized(p: PolyElement) -> PolyElement:
    return -p if p.LC < 0 else p


def _is_unit(p: PolyElement) -> bool:
    return p.is_ground and abs(int(p.LC)) == 1


def _lead_divides(a: _Lead, b: _Lead) -> bool:
    """LT(a) divides LT(b) in ZZ[X]."""
    return monomial_div(b.monom, a.monom) is not None and b.coeff % a.coeff == 0


class GroebnerBasis:
    """A strong Gröbner basis over ZZ together with how it was obtained."""

    def __init__(self, R: PolyRing, elements: Sequence[PolyElement], reduced: bool, pairs_processed: int):
        self.ring = R
        self.elements: List[PolyElement] = list(elements)
        self.reduced = reduced
        self.pairs_processed = pairs_processed
        self._leads = [_Lead(g) for g in self.elements]

    @property
    def contains_unit(self) -> bool:
        return any(_is_unit(g) for g in self.elements)

    def normal_form(self, p: PolyElement) -> PolyElement:
        if p.ring != self.ring:
            raise ValueError("Polynomial and basis live in different rings")
        if not p:
            return p
        return reduce_polynomial(p, self._leads)

    def reduces_to_zero(self, p: PolyElement) -> bool:
        return not self.normal_form(p)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class _Buchberger:
    def __init__(self, R: PolyRing, budget: int):
        self.ring = R
        self.budget = budget
        self.basis: List[_Lead] = []
        self.pairs: List[Tuple[tuple, int, int]] = []
        self.processed = 0
        self.unit: Optional[PolyElement] = None

    def add(self, h: PolyElement) -> None:
        h = _normalized(h)
        if _is_unit(h):
            self.unit = self.ring.one
            return
        lead = _Lead(h)
        index = len(self.basis)
        for i, other in enumerate(self.basis):
            lcm = monomial_lcm(other.monom, lead.monom)
            heapq.heappush(self.pairs, (self.ring.order(lcm), i, index))
        self.basis.append(lead)

    def _reduce_and_add(self, p: PolyElement) -> None:
        self.processed += 1
        if self.processed > self.budget:
            raise GroebnerBudgetExhausted(self.processed - 1, self.budget)
        h = reduce_polynomial(p, self.basis)
        if h:
            self.add(h)

    def process_pair(self, i: int, j: int) -> None:
        f, g = self.basis[i], self.basis[j]
        a, b = f.coeff, g.coeff
        lcm = monomial_lcm(f.monom, g.monom)
        f_shift = monomial_div(lcm, f.monom)
        g_shift = monomial_div(lcm, g.monom)

        coprime_monomials = monomial_mul(f.monom, g.monom) == lcm
        if not (coprime_monomials and gcd(a, b) == 1):
            l = abs(a * b) // gcd(a, b)
            s_poly = f.poly.mul_term((f_shift, ZZ(l // a))) - g.poly.mul_term((g_shift, ZZ(l // b)))
            self._reduce_and_add(s_poly)
            if self.unit is not None:
                return

        if a % b != 0 and b % a != 0:
            u, v, _ = extended_gcd(a, b)
            g_poly = f.poly.mul_term((f_shift, ZZ(u))) + g.poly.mul_term((g_shift, ZZ(v)))
            self._reduce_and_add(g_poly)

    def run(self) -> None:
        while self.pairs and self.unit is None:
            _, i, j = heapq.heappop(self.pairs)
            self.process_pair(i, j)


def _interreduced(leads: List[_Lead]) -> List[PolyElement]:
    """Drop elements whose leading term is divisible by another's, then reduce the tails."""
    kept: List[_Lead] = []
    for i, lead in enumerate(leads):
        redundant = any(
            _lead_divides(other, lead) and (not _lead_divides(lead, other) or j < i)
            for j, other in enumerate(leads) if j != i
        )
        if not redundant:
            kept.append(lead)
    result = []
    for lead in kept:
        others = [o for o in kept if o is not lead]
        head = lead.poly.ring.term_new(lead.monom, ZZ(lead.coeff))
        tail = reduce_polynomial(lead.poly - head, others)
        result.append(head + tail)
    return result


def groebner(R: PolyRing, generators: Sequence[PolyElement], budget: int, reduce: bool = True) -> GroebnerBasis:
    """Strong Gröbner basis of <generators>; stops as soon as a unit constant appears."""
    engine = _Buchberger(R, budget)
    polys = [_normalized(g) for g in generators if g]
    polys.sort(key=lambda g: (R.order(g.LM), abs(int(g.LC))))
    for g in polys:
        h = reduce_polynomial(g, engine.basis)
        if h:
            engine.add(h)
        if engine.unit is not None:
            break
    if engine.unit is None:
        engine.run()

    if engine.unit is not None:
        logger.debug(f"Unit reached after {engine.processed} pair reductions")
        return GroebnerBasis(R, [R.one], True, engine.processed)

    elements = _interreduced(engine.basis) if reduce else [lead.poly for lead in engine.basis]
    elements.sort(key=lambda p: tuple((R.order(m), int(c)) for m, c in p.terms()))
    logger.debug(f"Groebner basis with {len(elements)} elements after {engine.processed} pair reductions")
    return GroebnerBasis(R, elements, reduce, engine.processed)
