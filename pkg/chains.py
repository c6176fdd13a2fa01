"""Singular chains, the boundary operator and induced chain maps.

Matrices are indexed by the canonical bases from ``simplicial``: column j
of the n-th boundary matrix is the boundary of the j-th n-simplex.  The
basis in dimension -1 is empty, so the 0-th boundary matrix has no rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence

from core import DigitalImage
from errors import ContinuityError, InvalidInputError, ShapeMismatchError
from integer_matrix import IntegerMatrix, SparseVector
from logger_setup import logger
from maps import DigitalMap, is_continuous
from simplicial import SingularSimplex, apply_face, singular_basis
from smith_form import solve_integer_system


@dataclass(frozen=True, eq=False)
class Chain:
    image: DigitalImage
    n: int
    terms: Mapping[SingularSimplex, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[SingularSimplex, int] = {}
        for sigma, coefficient in self.terms.items():
            if sigma.n != self.n:
                raise InvalidInputError(
                    f"a {sigma.n}-simplex cannot appear in a {self.n}-chain")
            if sigma.image != self.image:
                raise InvalidInputError("chain terms must lie in one image")
            if coefficient:
                cleaned[sigma] = cleaned.get(sigma, 0) + coefficient
        object.__setattr__(self, 'terms', {s: c for s, c in cleaned.items() if c})

    @classmethod
    def zero(cls, image: DigitalImage, n: int) -> 'Chain':
        return cls(image, n)

    @classmethod
    def from_simplex(cls, sigma: SingularSimplex, coefficient: int = 1) -> 'Chain':
        return cls(sigma.image, sigma.n, {sigma: coefficient})

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.n == other.n and self.image == other.image and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: 'Chain'):
        if self.n != other.n or self.image != other.image:
            raise ShapeMismatchError("chains must share dimension and image")

    def __add__(self, other: 'Chain') -> 'Chain':
        self._check(other)
        terms = dict(self.terms)
        for sigma, c in other.terms.items():
            terms[sigma] = terms.get(sigma, 0) + c
        return Chain(self.image, self.n, terms)

    def __neg__(self) -> 'Chain':
        return Chain(self.image, self.n, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: 'Chain') -> 'Chain':
        return self + (-other)

    def __rmul__(self, scalar: int) -> 'Chain':
        return Chain(self.image, self.n, {s: scalar * c for s, c in self.terms.items()})

    def to_vector(self) -> SparseVector:
        index = self.image.index
        position = singular_basis(self.image, self.n).position
        return {position[tuple(index[v] for v in s.values)]: c
                for s, c in self.terms.items()}

    @classmethod
    def from_vector(cls, image: DigitalImage, n: int, vector: Mapping[int, int]) -> 'Chain':
        simplices = singular_basis(image, n).simplices
        points = image.points
        return cls(image, n, {
            SingularSimplex(image, tuple(points[i] for i in simplices[j])): c
            for j, c in vector.items()})


def boundary_of_simplex(sigma: SingularSimplex) -> Chain:
    if sigma.n == 0:
        return Chain.zero(sigma.image, -1)
    terms: Dict[SingularSimplex, int] = {}
    for i in range(sigma.n + 1):
        face = apply_face(sigma, i)
        terms[face] = terms.get(face, 0) + (-1) ** i
    return Chain(sigma.image, sigma.n - 1, terms)


def boundary_of_chain(chain: Chain) -> Chain:
    result = Chain.zero(chain.image, chain.n - 1)
    for sigma, c in chain.terms.items():
        result = result + c * boundary_of_simplex(sigma)
    return result


@lru_cache(maxsize=256)
def boundary_matrix(image: DigitalImage, n: int) -> IntegerMatrix:
    if n < 0:
        raise InvalidInputError(f"boundary dimension must be nonnegative, got {n}")
    basis = singular_basis(image, n)
    faces = singular_basis(image, n - 1)
    position = faces.position
    columns: List[SparseVector] = []
    for s in basis.simplices:
        column: SparseVector = {}
        if n > 0:
            for i in range(n + 1):
                row = position[s[:i] + s[i + 1:]]
                column[row] = column.get(row, 0) + (-1) ** i
        columns.append(column)
    matrix = IntegerMatrix(len(faces), len(basis), tuple(columns))
    logger.debug("Boundary matrix %d on %d points: %dx%d, %d nonzeros",
                 n, len(image), matrix.rows, matrix.cols, matrix.nnz)
    return matrix


def induced_chain_map(f: DigitalMap, n: int) -> IntegerMatrix:
    """f_# on n-chains: each basis simplex σ goes to f ∘ σ."""
    if not is_continuous(f):
        raise ContinuityError("only continuous maps induce chain maps")
    source = singular_basis(f.domain, n)
    target = singular_basis(f.codomain, n)
    values = f.value_indices
    position = target.position
    columns = tuple({position[tuple(values[i] for i in s)]: 1} for s in source.simplices)
    return IntegerMatrix(len(target), len(source), columns)


def verify_dd_zero(image: DigitalImage, n: int) -> bool:
    return (boundary_matrix(image, n) @ boundary_matrix(image, n + 1)).is_zero()


def verify_chain_commutes(f: DigitalMap, n: int) -> bool:
    """f_# ∂_n = ∂'_n f_# as exact matrices."""
    left = induced_chain_map(f, n - 1) @ boundary_matrix(f.domain, n)
    right = boundary_matrix(f.codomain, n) @ induced_chain_map(f, n)
    return left == right


def _require_parallel(f: DigitalMap, g: DigitalMap):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ShapeMismatchError("maps must share domain and codomain")


def verify_chain_homotopy(phi: Sequence[IntegerMatrix], f: DigitalMap, g: DigitalMap,
                          n: int) -> bool:
    """f_# - g_# = ∂'_{n+1} φ_n + φ_{n-1} ∂_n in dimension n.

    ``phi[k]`` is φ_k : S_k(X) -> S_{k+1}(Y); φ_{-1} is zero.
    """
    _require_parallel(f, g)
    if len(phi) <= n:
        raise ShapeMismatchError(f"φ_{n} is missing: only {len(phi)} matrices given")
    X, Y = f.domain, f.codomain
    for k in range(max(0, n - 1), n + 1):
        expected = (len(singular_basis(Y, k + 1)), len(singular_basis(X, k)))
        if phi[k].shape != expected:
            raise ShapeMismatchError(f"φ_{k} has shape {phi[k].shape}, expected {expected}")
    left = induced_chain_map(f, n) - induced_chain_map(g, n)
    right = boundary_matrix(Y, n + 1) @ phi[n]
    if n > 0:
        right = right + phi[n - 1] @ boundary_matrix(X, n)
    return left == right


def find_chain_homotopy(f: DigitalMap, g: DigitalMap,
                        n: int) -> Optional[List[IntegerMatrix]]:
    """Integer matrices φ_0..φ_n satisfying the chain-homotopy identity in
    every dimension 0..n, or ``None`` if no integer solution exists.

    The identities are stacked into one integer linear system and solved
    through the Smith normal form, so only tiny images are practical.
    """
    _require_parallel(f, g)
    X, Y = f.domain, f.codomain
    rows_of = [len(singular_basis(Y, k + 1)) for k in range(n + 1)]
    cols_of = [len(singular_basis(X, k)) for k in range(n + 1)]
    targets = [len(singular_basis(Y, k)) for k in range(n + 1)]

    unknown_offset = [0]
    for r, c in zip(rows_of, cols_of):
        unknown_offset.append(unknown_offset[-1] + r * c)
    equation_offset = [0]
    for t, c in zip(targets, cols_of):
        equation_offset.append(equation_offset[-1] + t * c)

    def unknown(k, row, col):
        return unknown_offset[k] + col * rows_of[k] + row

    def equation(k, a, b):
        return equation_offset[k] + b * targets[k] + a

    triplets = []
    rhs = [0] * equation_offset[-1]
    for k in range(n + 1):
        upper = boundary_matrix(Y, k + 1)
        for c, column in enumerate(upper.columns):
            for a, v in column.items():
                for b in range(cols_of[k]):
                    triplets.append((equation(k, a, b), unknown(k, c, b), v))
        if k > 0:
            lower = boundary_matrix(X, k)
            for b, column in enumerate(lower.columns):
                for d, v in column.items():
                    for a in range(targets[k]):
                        triplets.append((equation(k, a, b), unknown(k - 1, a, d), v))
        difference = induced_chain_map(f, k) - induced_chain_map(g, k)
        for a, b, v in difference.triplets():
            rhs[equation(k, a, b)] = v

    system = IntegerMatrix.from_triplets(equation_offset[-1], unknown_offset[-1], triplets)
    logger.debug("Chain homotopy system: %d equations, %d unknowns",
                 system.rows, system.cols)
    solution = solve_integer_system(system, rhs)
    if solution is None:
        return None
    return [IntegerMatrix(rows_of[k], cols_of[k], tuple(
        {row: solution[unknown(k, row, col)] for row in range(rows_of[k])}
        for col in range(cols_of[k]))) for k in range(n + 1)]
