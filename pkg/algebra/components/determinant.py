from itertools import combinations
from typing import Dict, Iterator, Sequence, Tuple
from sympy.polys.rings import PolyElement


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class MinorExpander:
    """Laplace expansion with one memo table keyed on (row set, column set) bitmasks.

    Each step expands along the row with the fewest non-zero entries inside the current
    column set, so sparse generalized Laplacians collapse quickly. The memo is shared by
    every minor requested from the same expander.
    """

    def __init__(self, matrix):
        self.matrix = matrix
        self.ring = matrix.ring
        self._memo: Dict[Tuple[int, int], PolyElement] = {}
        self._row_support = [
            sum(1 << j for j, entry in enumerate(row) if entry) for row in matrix.entries
        ]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> PolyElement:
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols):
            raise ValueError("Minor needs as many rows as columns")
        row_mask = sum(1 << r for r in rows)
        col_mask = sum(1 << c for c in cols)
        # masks list indices in ascending order, so account for the caller's ordering
        sign = _permutation_sign(rows) * _permutation_sign(cols)
        det = self._det(row_mask, col_mask)
        return det if sign > 0 else -det

    def minors(self, k: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], PolyElement]]:
        """All k-minors (rows, cols, det) over increasing index tuples."""
        for rows in combinations(range(self.matrix.rows), k):
            for cols in combinations(range(self.matrix.cols), k):
                yield rows, cols, self.minor(rows, cols)

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def _det(self, row_mask: int, col_mask: int) -> PolyElement:
        if not row_mask:
            return self.ring.one
        key = (row_mask, col_mask)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        pivot_row, pivot_count = -1, None
        for r in _bits(row_mask):
            count = _popcount(self._row_support[r] & col_mask)
            if count == 0:
                self._memo[key] = self.ring.zero
                return self.ring.zero
            if pivot_count is None or count < pivot_count:
                pivot_row, pivot_count = r, count

        rest_rows = row_mask & ~(1 << pivot_row)
        row_position = _popcount(row_mask & ((1 << pivot_row) - 1))
        total = self.ring.zero
        for c in _bits(self._row_support[pivot_row] & col_mask):
            sub = self._det(rest_rows, col_mask & ~(1 << c))
            if not sub:
                continue
            term = self.matrix.entries[pivot_row][c] * sub
            if (row_position + _popcount(col_mask & ((1 << c) - 1))) % 2:
                total -= term
            else:
                total += term
        self._memo[key] = total
        return total


def _permutation_sign(indices: Sequence[int]) -> int:
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
            elif items[i] == items[j]:
                raise ValueError("Repeated index in minor")
    return sign
