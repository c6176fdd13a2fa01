"""Exact sparse integer matrices stored column by column.

Entries are Python ints, so there is no overflow and no rounding.  Only
nonzero entries are stored; a boundary matrix column holds at most n+1
of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from errors import ShapeMismatchError

SparseVector = Dict[int, int]


def axpy(target: SparseVector, source: Mapping[int, int], q: int) -> None:
    """target += q * source, in place, dropping entries that cancel."""
    if not q:
        return
    for key, value in source.items():
        new = target.get(key, 0) + q * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def combine(a: int, x: Mapping[int, int], b: int, y: Mapping[int, int]) -> SparseVector:
    """a*x + b*y as a new sparse vector."""
    out: SparseVector = {}
    axpy(out, x, a)
    axpy(out, y, b)
    return out


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    columns: Tuple[SparseVector, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatchError("matrix dimensions must be nonnegative")
        if len(self.columns) != self.cols:
            raise ShapeMismatchError(
                f"expected {self.cols} columns, got {len(self.columns)}")
        cleaned = []
        for j, column in enumerate(self.columns):
            entries = {}
            for i, v in column.items():
                if not 0 <= i < self.rows:
                    raise ShapeMismatchError(
                        f"row index {i} out of range in column {j}")
                if v:
                    entries[i] = int(v)
            cleaned.append(entries)
        object.__setattr__(self, 'columns', tuple(cleaned))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntegerMatrix':
        return cls(rows, cols, tuple({} for _ in range(cols)))

    @classmethod
    def identity(cls, size: int) -> 'IntegerMatrix':
        return cls(size, size, tuple({j: 1} for j in range(size)))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]],
                   cols: Optional[int] = None) -> 'IntegerMatrix':
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise ShapeMismatchError(f"row {r} has {len(row)} entries, expected {cols}")
        return cls(rows, cols, tuple(
            {i: dense[i][j] for i in range(rows) if dense[i][j]} for j in range(cols)))

    @classmethod
    def from_rows(cls, cols: int, rows: Sequence[Mapping[int, int]]) -> 'IntegerMatrix':
        columns: List[SparseVector] = [{} for _ in range(cols)]
        for i, row in enumerate(rows):
            for j, v in row.items():
                columns[j][i] = v
        return cls(len(rows), cols, tuple(columns))

    @classmethod
    def from_triplets(cls, rows: int, cols: int,
                      triplets: Iterable[Tuple[int, int, int]]) -> 'IntegerMatrix':
        columns: List[SparseVector] = [{} for _ in range(cols)]
        for i, j, v in triplets:
            if not 0 <= j < cols:
                raise ShapeMismatchError(f"column index {j} out of range")
            columns[j][i] = columns[j].get(i, 0) + v
        return cls(rows, cols, tuple(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.columns[j].get(i, 0)

    def column(self, j: int) -> SparseVector:
        return dict(self.columns[j])

    def row_dicts(self) -> List[SparseVector]:
        rows: List[SparseVector] = [{} for _ in range(self.rows)]
        for j, column in enumerate(self.columns):
            for i, v in column.items():
                rows[i][j] = v
        return rows

    def triplets(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero entries as (row, col, value) in row-major order."""
        return iter(sorted((i, j, v) for j, column in enumerate(self.columns)
                           for i, v in column.items()))

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.triplets():
            dense[i][j] = v
        return dense

    def is_zero(self) -> bool:
        return not any(self.columns)

    def apply(self, vector: Mapping[int, int]) -> SparseVector:
        out: SparseVector = {}
        for j, v in vector.items():
            axpy(out, self.columns[j], v)
        return out

    def row_slice(self, start: int, stop: Optional[int] = None) -> 'IntegerMatrix':
        stop = self.rows if stop is None else stop
        return IntegerMatrix(stop - start, self.cols, tuple(
            {i - start: v for i, v in c.items() if start <= i < stop}
            for c in self.columns))

    def column_slice(self, start: int, stop: Optional[int] = None) -> 'IntegerMatrix':
        stop = self.cols if stop is None else stop
        return IntegerMatrix(self.rows, stop - start, self.columns[start:stop])

    def __matmul__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return IntegerMatrix(self.rows, other.cols,
                             tuple(self.apply(c) for c in other.columns))

    def _check_same_shape(self, other: 'IntegerMatrix'):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        self._check_same_shape(other)
        return IntegerMatrix(self.rows, self.cols, tuple(
            combine(1, a, 1, b) for a, b in zip(self.columns, other.columns)))

    def __sub__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        self._check_same_shape(other)
        return IntegerMatrix(self.rows, self.cols, tuple(
            combine(1, a, -1, b) for a, b in zip(self.columns, other.columns)))

    def __neg__(self) -> 'IntegerMatrix':
        return IntegerMatrix(self.rows, self.cols, tuple(
            {i: -v for i, v in c.items()} for c in self.columns))

    def to_text(self) -> str:
        """Dimensions header followed by one ``row col value`` line per entry."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(f"{i} {j} {v}" for i, j, v in self.triplets())
        return '\n'.join(lines)
