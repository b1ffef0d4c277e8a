"""Polynomials over ZZ on top of sympy's sparse ring elements, plus symbolic determinants."""
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple, Union
from sympy import sympify
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing, ring
from utils.config import config
from utils.errors import GraphArgumentError, MissingVariableError

Polynomial = PolyElement
Monomial = Tuple[int, ...]

MONOMIAL_ORDERS = {"grevlex": grevlex, "lex": lex}


@lru_cache(maxsize=None)
def polynomial_ring(names: Tuple[str, ...], order: str = None) -> PolyRing:
    """ZZ[names] with variables ranked in the given order (first name largest)."""
    if not names:
        raise GraphArgumentError("A polynomial ring needs at least one variable")
    order = order or config.settings.groebner.order
    return ring(",".join(names), ZZ, MONOMIAL_ORDERS[order])[0]


@lru_cache(maxsize=None)
def ground_ring(order: str = None) -> PolyRing:
    """ZZ with no indeterminates; the ring of the empty graph."""
    order = order or config.settings.groebner.order
    return ring("", ZZ, MONOMIAL_ORDERS[order])[0]


def variable_names(R: PolyRing) -> Tuple[str, ...]:
    return tuple(str(s) for s in R.symbols)


def constant(R: PolyRing, value: int) -> Polynomial:
    return R.ground_new(ZZ(value))


def parse_polynomial(R: PolyRing, text: str) -> Polynomial:
    """Parse an expression such as 'x1*x2 - x3 + 2' into R."""
    return R.from_expr(sympify(text))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def neg(p: Polynomial) -> Polynomial:
    return -p


def scale(p: Polynomial, c: int) -> Polynomial:
    return p.mul_ground(ZZ(c))


def leading_coefficient(p: Polynomial) -> int:
    return int(p.LC)


def normalize_sign(p: Polynomial) -> Polynomial:
    """Representative of {p, -p} with positive leading coefficient."""
    if p and p.LC < 0:
        return -p
    return p


def is_unit(p: Polynomial) -> bool:
    return p.is_ground and abs(int(p.LC)) == 1 if p else False


def term_key(R: PolyRing, monom: Monomial):
    return R.order(monom)


def sort_key(p: Polynomial) -> Tuple:
    """Total order on polynomials: by terms from largest monomial down, then coefficients."""
    R = p.ring
    return tuple((R.order(m), int(c)) for m, c in p.terms())


def sorted_polynomials(polys) -> List[Polynomial]:
    return sorted(polys, key=sort_key)


def evaluate(p: Polynomial, assignment: Mapping[Union[str, int], int]) -> int:
    """Exact integer value of p; the assignment may be keyed by variable name or index."""
    names = variable_names(p.ring)
    values: Dict[int, int] = {}
    for key, value in assignment.items():
        index = names.index(key) if isinstance(key, str) else key
        values[index] = int(value)
    total = 0
    for monom, coeff in p.terms():
        term = int(coeff)
        for i, e in enumerate(monom):
            if e:
                if i not in values:
                    raise MissingVariableError(f"No value for variable {names[i]}")
                term *= values[i] ** e
        total += term
    return total


def render(p: Polynomial) -> str:
    """Deterministic text form 'c*x1^a*x2^b + ...' in decreasing monomial order."""
    if not p:
        return "0"
    names = variable_names(p.ring)
    pieces = []
    for monom, coeff in p.terms():
        c = int(coeff)
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def embed(p: Polynomial, target: PolyRing, offset: int) -> Polynomial:
    """Map p into target, sending variable i of p's ring to variable offset + i."""
    width = target.ngens
    terms = {}
    for monom, coeff in p.terms():
        exponents = [0] * width
        exponents[offset:offset + len(monom)] = monom
        terms[tuple(exponents)] = coeff
    return target.from_dict(terms)


class PolyMatrix:
    """Rectangular grid of polynomials over one ring."""

    def __init__(self, R: PolyRing, entries: Sequence[Sequence[Polynomial]]):
        self.ring = R
        self.entries: List[List[Polynomial]] = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise GraphArgumentError("PolyMatrix rows must all have the same length")

    def __getitem__(self, index: Tuple[int, int]) -> Polynomial:
        i, j = index
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def evaluate(self, assignment: Mapping[Union[str, int], int]) -> List[List[int]]:
        return [[evaluate(e, assignment) for e in row] for row in self.entries]

    def det(self) -> Polynomial:
        return det_symbolic(self)


def det_symbolic(M: PolyMatrix) -> Polynomial:
    from algebra.components.determinant import MinorExpander

    if M.rows != M.cols:
        raise GraphArgumentError(f"Determinant of a non-square {M.rows}x{M.cols} matrix")
    return MinorExpander(M).minor(range(M.rows), range(M.cols))
