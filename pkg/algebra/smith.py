"""Smith normal form of integer matrices with optional unimodular transforms."""
from functools import reduce as fold
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence, Tuple
from pydantic import BaseModel
from sympy import Matrix

IntMatrix = List[List[int]]


class InvariantFactors(BaseModel):
    """Diagonal d1 | d2 | ... of a Smith normal form; zeros trail for singular matrices."""

    diag: List[int]

    def count(self, value: int) -> int:
        return sum(1 for d in self.diag if d == value)

    @property
    def product(self) -> int:
        result = 1
        for d in self.diag:
            result *= d
        return result

    def render(self) -> str:
        shown = [f"Z_{d}" if d else "Z" for d in self.diag if d != 1]
        return " x ".join(shown) if shown else "0"


class SmithForm(BaseModel):
    factors: InvariantFactors
    U: Optional[IntMatrix] = None
    V: Optional[IntMatrix] = None


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    def __init__(self, M: Sequence[Sequence[int]], with_transforms: bool):
        self.A = [[int(e) for e in row] for row in M]
        self.m = len(self.A)
        self.n = len(self.A[0]) if self.A else 0
        self.U = _identity(self.m) if with_transforms else None
        self.V = _identity(self.n) if with_transforms else None

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            for X in (self.A, self.U):
                if X is not None:
                    X[i], X[j] = X[j], X[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for X in (self.A, self.V):
                if X is not None:
                    for row in X:
                        row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]"""
        for X in (self.A, self.U):
            if X is not None:
                X[target] = [a + q * b for a, b in zip(X[target], X[source])]

    def add_col(self, target: int, source: int, q: int) -> None:
        for X in (self.A, self.V):
            if X is not None:
                for row in X:
                    row[target] += q * row[source]

    def negate_row(self, i: int) -> None:
        for X in (self.A, self.U):
            if X is not None:
                X[i] = [-a for a in X[i]]

    def smallest(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                a = abs(self.A[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        return None if best is None else best[1:]

    def clear(self, t: int) -> None:
        A = self.A
        while True:
            p = A[t][t]
            for i in range(t + 1, self.m):
                if A[i][t]:
                    self.add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, self.n):
                if A[t][j]:
                    self.add_col(j, t, -(A[t][j] // p))
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, self.m) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, self.n) if A[t][j]]
            if rest:
                _, i, j = min(rest)
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, self.m) for j in range(t + 1, self.n) if A[i][j] % p),
                None,
            )
            if bad is None:
                return
            self.add_row(t, bad, 1)

    def run(self) -> SmithForm:
        for t in range(min(self.m, self.n)):
            pivot = self.smallest(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            self.clear(t)
            if self.A[t][t] < 0:
                self.negate_row(t)
        diag = [self.A[t][t] for t in range(min(self.m, self.n))]
        return SmithForm(factors=InvariantFactors(diag=diag), U=self.U, V=self.V)


def smith_normal_form(M: Sequence[Sequence[int]], with_transforms: bool = False) -> SmithForm:
    """Smith form by elementary operations, pivoting on the smallest absolute entry
    (first in row-major order on ties); with_transforms keeps U, V such that U*M*V = D."""
    return _Reducer(M, with_transforms).run()


def invariant_factors(M: Sequence[Sequence[int]]) -> InvariantFactors:
    return smith_normal_form(M).factors


def integer_det(M: Sequence[Sequence[int]]) -> int:
    if not M:
        return 1
    return int(Matrix(M).det(method="bareiss"))


def determinantal_divisors(M: Sequence[Sequence[int]]) -> List[int]:
    """Delta_k = gcd of all k-minors, k = 1..min(rows, cols); brute force for small matrices."""
    m = len(M)
    n = len(M[0]) if M else 0
    result = []
    for k in range(1, min(m, n) + 1):
        minors = (
            integer_det([[M[i][j] for j in cols] for i in rows])
            for rows in combinations(range(m), k)
            for cols in combinations(range(n), k)
        )
        result.append(fold(gcd, minors, 0))
    return result
