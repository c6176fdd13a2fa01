"""Smith normal form over the integers.

Elimination works on a sparse copy of the matrix.  Each step takes the
nonzero entry of least absolute value as pivot, clears its row and column
by integer division, and repeats with a smaller remainder until the pivot
stands alone.  The resulting diagonal is then brought into divisibility
order with 2x2 gcd/lcm moves.

With ``transforms=True`` the unimodular matrices U, V with U·M·V = D are
tracked together with their inverses.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy import ZZ

from errors import ShapeMismatchError
from integer_matrix import IntegerMatrix, SparseVector, axpy, combine
from logger_setup import logger


@dataclass(frozen=True)
class SmithDecomposition:
    shape: Tuple[int, int]
    invariant_factors: Tuple[int, ...]
    row_transform: Optional[IntegerMatrix] = None
    row_inverse: Optional[IntegerMatrix] = None
    col_transform: Optional[IntegerMatrix] = None
    col_inverse: Optional[IntegerMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    def diagonal(self) -> IntegerMatrix:
        rows, cols = self.shape
        return IntegerMatrix(rows, cols, tuple(
            {j: self.invariant_factors[j]} if j < self.rank else {}
            for j in range(cols)))


def _identity_vectors(size: int) -> List[SparseVector]:
    return [{i: 1} for i in range(size)]


class _Reduction:
    def __init__(self, matrix: IntegerMatrix, transforms: bool):
        self.rows: Dict[int, SparseVector] = {}
        self.col_rows: Dict[int, Set[int]] = defaultdict(set)
        for i, row in enumerate(matrix.row_dicts()):
            if row:
                self.rows[i] = row
                for j in row:
                    self.col_rows[j].add(i)
        self.transforms = transforms
        if transforms:
            # Each transform is stored in the orientation its updates act on.
            self.u_rows = _identity_vectors(matrix.rows)
            self.u_inv_cols = _identity_vectors(matrix.rows)
            self.v_cols = _identity_vectors(matrix.cols)
            self.v_inv_rows = _identity_vectors(matrix.cols)

    def _set(self, i: int, j: int, value: int):
        row = self.rows.setdefault(i, {})
        if value:
            row[j] = value
            self.col_rows[j].add(i)
        else:
            row.pop(j, None)
            self.col_rows[j].discard(i)
            if not row:
                del self.rows[i]

    def add_row(self, dst: int, src: int, q: int):
        """row dst += q * row src."""
        for j, v in list(self.rows[src].items()):
            self._set(dst, j, self.rows.get(dst, {}).get(j, 0) + q * v)
        if self.transforms:
            axpy(self.u_rows[dst], self.u_rows[src], q)
            axpy(self.u_inv_cols[src], self.u_inv_cols[dst], -q)

    def add_col(self, dst: int, src: int, q: int):
        """column dst += q * column src."""
        for i in list(self.col_rows[src]):
            v = self.rows[i][src]
            self._set(i, dst, self.rows[i].get(dst, 0) + q * v)
        if self.transforms:
            axpy(self.v_cols[dst], self.v_cols[src], q)
            axpy(self.v_inv_rows[src], self.v_inv_rows[dst], -q)

    def negate_row(self, i: int):
        for j in list(self.rows[i]):
            self.rows[i][j] = -self.rows[i][j]
        if self.transforms:
            self.u_rows[i] = {k: -v for k, v in self.u_rows[i].items()}
            self.u_inv_cols[i] = {k: -v for k, v in self.u_inv_cols[i].items()}

    def smallest_entry(self) -> Tuple[int, int]:
        best = None
        for i in sorted(self.rows):
            for j, v in sorted(self.rows[i].items()):
                if best is None or abs(v) < best[0]:
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return i, j
        return best[1], best[2]

    def reduce(self) -> List[Tuple[int, int, int]]:
        pivots = []
        while self.rows:
            r, c = self.smallest_entry()
            while True:
                p = self.rows[r][c]
                for i in sorted(self.col_rows[c] - {r}):
                    self.add_row(i, r, -(self.rows[i][c] // p))
                for j in sorted(set(self.rows[r]) - {c}):
                    self.add_col(j, c, -(self.rows[r][j] // p))
                leftovers = [(abs(self.rows[i][c]), i, c) for i in self.col_rows[c] if i != r]
                leftovers += [(abs(v), r, j) for j, v in self.rows[r].items() if j != c]
                if not leftovers:
                    break
                _, r, c = min(leftovers)
            if self.rows[r][c] < 0:
                self.negate_row(r)
            pivots.append((r, c, self.rows[r][c]))
            del self.rows[r]
            del self.col_rows[c]
        return pivots


def _sort_divisibility(diagonal: List[int], moves=None) -> List[int]:
    """Replace pairs (a, b) by (gcd, lcm) until each entry divides the next."""
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            a, b = diagonal[i], diagonal[j]
            if b % a == 0:
                continue
            s, t, g = ZZ.gcdex(ZZ(a), ZZ(b))
            s, t, g = int(s), int(t), int(g)
            diagonal[i], diagonal[j] = g, a // g * b
            if moves is not None:
                moves(i, j, a, b, s, t, g)
    return diagonal


def smith_normal_form(matrix: IntegerMatrix, transforms: bool = False) -> SmithDecomposition:
    rows, cols = matrix.shape
    work = _Reduction(matrix, transforms)
    pivots = work.reduce()
    logger.debug("Smith form of %dx%d matrix: rank %d", rows, cols, len(pivots))

    if not transforms:
        factors = _sort_divisibility([d for _, _, d in pivots])
        return SmithDecomposition((rows, cols), tuple(factors))

    pivot_rows = [r for r, _, _ in pivots]
    pivot_cols = [c for _, c, _ in pivots]
    row_order = pivot_rows + sorted(set(range(rows)) - set(pivot_rows))
    col_order = pivot_cols + sorted(set(range(cols)) - set(pivot_cols))
    u_rows = [work.u_rows[i] for i in row_order]
    u_inv_cols = [work.u_inv_cols[i] for i in row_order]
    v_cols = [work.v_cols[j] for j in col_order]
    v_inv_rows = [work.v_inv_rows[j] for j in col_order]

    def gcd_move(i, j, a, b, s, t, g):
        # U2 = [[s, t], [-b/g, a/g]], V2 = [[1, -t*b/g], [1, s*a/g]],
        # U2 · diag(a, b) · V2 = diag(g, lcm(a, b)).
        ag, bg = a // g, b // g
        u_rows[i], u_rows[j] = combine(s, u_rows[i], t, u_rows[j]), combine(-bg, u_rows[i], ag, u_rows[j])
        u_inv_cols[i], u_inv_cols[j] = (combine(ag, u_inv_cols[i], bg, u_inv_cols[j]),
                                        combine(-t, u_inv_cols[i], s, u_inv_cols[j]))
        v_cols[i], v_cols[j] = combine(1, v_cols[i], 1, v_cols[j]), combine(-t * bg, v_cols[i], s * ag, v_cols[j])
        v_inv_rows[i], v_inv_rows[j] = (combine(s * ag, v_inv_rows[i], t * bg, v_inv_rows[j]),
                                        combine(-1, v_inv_rows[i], 1, v_inv_rows[j]))

    factors = _sort_divisibility([d for _, _, d in pivots], gcd_move)
    return SmithDecomposition(
        (rows, cols), tuple(factors),
        row_transform=IntegerMatrix.from_rows(rows, u_rows),
        row_inverse=IntegerMatrix(rows, rows, tuple(u_inv_cols)),
        col_transform=IntegerMatrix(cols, cols, tuple(v_cols)),
        col_inverse=IntegerMatrix.from_rows(cols, v_inv_rows))


def invariant_factors(matrix: IntegerMatrix) -> Tuple[int, ...]:
    return smith_normal_form(matrix).invariant_factors


def matrix_rank(matrix: IntegerMatrix) -> int:
    return smith_normal_form(matrix).rank


def solve_integer_system(matrix: IntegerMatrix, rhs: Sequence[int]) -> Optional[List[int]]:
    """An integer solution x of matrix · x = rhs, or ``None`` if there is none."""
    if len(rhs) != matrix.rows:
        raise ShapeMismatchError(
            f"right-hand side has {len(rhs)} entries for {matrix.rows} equations")
    snf = smith_normal_form(matrix, transforms=True)
    c = snf.row_transform.apply({i: v for i, v in enumerate(rhs) if v})
    y: SparseVector = {}
    for i, value in c.items():
        if i >= snf.rank:
            return None
        d = snf.invariant_factors[i]
        if value % d:
            return None
        y[i] = value // d
    x = snf.col_transform.apply(y)
    return [x.get(j, 0) for j in range(matrix.cols)]
