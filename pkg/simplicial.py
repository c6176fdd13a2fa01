"""Digitally standard simplexes, face functions and singular simplexes.

A singular n-simplex of X is a continuous map from the standard simplex,
whose vertices are pairwise adjacent, so it is nothing more than an ordered
(n+1)-tuple of pairwise equal-or-adjacent points.  Degenerate tuples are
included.  Bases are enumerated in lexicographic order of point indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

import config
from core import AdjacencySpec, DigitalImage, LatticePoint, digital_interval
from errors import DimensionLimitError, InvalidInputError
from logger_setup import logger
from maps import DigitalMap, compose


@dataclass(frozen=True)
class StandardSimplex:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"simplex dimension must be nonnegative, got {self.n}")

    def vertex(self, i: int) -> LatticePoint:
        if not 0 <= i <= self.n:
            raise InvalidInputError(f"vertex e_{i} does not exist in dimension {self.n}")
        return tuple(1 if j == i else 0 for j in range(self.n + 1))

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.vertex(i) for i in range(self.n + 1))

    def as_image(self) -> DigitalImage:
        # k(2, n+1); Z^1 only admits u = 1.
        spec = AdjacencySpec(self.n + 1, min(2, self.n + 1))
        return DigitalImage(spec, self.vertices)


def face_vertex_map(i: int, n: int) -> Tuple[int, ...]:
    """Vertex indices of the i-th face function Δ^{n-1} -> Δ^n.

    Entry j is the index of the vertex e_j is sent to: the order-preserving
    injection that misses i.
    """
    if n < 1:
        raise InvalidInputError(f"face functions need n >= 1, got n={n}")
    if not 0 <= i <= n:
        raise InvalidInputError(f"face index {i} out of range 0..{n}")
    return tuple(j if j < i else j + 1 for j in range(n))


def face_function(i: int, n: int) -> DigitalMap:
    """The i-th face function as a digital map, by inserting a zero
    barycentric coordinate at position i."""
    face_vertex_map(i, n)
    source = StandardSimplex(n - 1).as_image()
    target = StandardSimplex(n).as_image()
    return DigitalMap.from_function(source, target, lambda t: t[:i] + (0,) + t[i:])


def verify_face_identity(n: int) -> bool:
    """ε_j^{n+1} ∘ ε_k^n = ε_k^{n+1} ∘ ε_{j-1}^n for all k < j <= n+1.

    Checked on vertex indices and again on the face functions as maps.
    """
    for j in range(1, n + 2):
        for k in range(j):
            outer_j, inner_k = face_vertex_map(j, n + 1), face_vertex_map(k, n)
            outer_k, inner_j = face_vertex_map(k, n + 1), face_vertex_map(j - 1, n)
            left = tuple(outer_j[v] for v in inner_k)
            right = tuple(outer_k[v] for v in inner_j)
            if left != right:
                logger.warning("Face identity fails at n=%d, j=%d, k=%d", n, j, k)
                return False
            maps_left = compose(face_function(j, n + 1), face_function(k, n))
            maps_right = compose(face_function(k, n + 1), face_function(j - 1, n))
            if maps_left != maps_right:
                logger.warning("Face functions disagree at n=%d, j=%d, k=%d", n, j, k)
                return False
    return True


@dataclass(frozen=True, order=True)
class SingularSimplex:
    image: DigitalImage = field(compare=False, repr=False)
    values: Tuple[LatticePoint, ...]

    def __post_init__(self):
        values = tuple(tuple(v) for v in self.values)
        if not values:
            raise InvalidInputError("a singular simplex needs at least one value")
        for v in values:
            if v not in self.image:
                raise InvalidInputError(f"simplex value {v!r} is not in the image")
        for a in range(len(values)):
            for b in range(a + 1, len(values)):
                p, q = values[a], values[b]
                if p != q and not self.image.are_adjacent(p, q):
                    raise InvalidInputError(
                        f"simplex values {p!r} and {q!r} are neither equal nor adjacent")
        object.__setattr__(self, 'values', values)

    @property
    def n(self) -> int:
        return len(self.values) - 1


def apply_face(sigma: SingularSimplex, i: int) -> SingularSimplex:
    """σ ∘ ε_i^n: the value tuple with position i removed."""
    if sigma.n < 1:
        raise InvalidInputError("a 0-simplex has no faces")
    reindex = face_vertex_map(i, sigma.n)
    return SingularSimplex(sigma.image, tuple(sigma.values[j] for j in reindex))


@dataclass(frozen=True)
class SimplexBasis:
    """The canonical basis of the n-th chain group, as point-index tuples."""
    n: int
    simplices: Tuple[Tuple[int, ...], ...]

    def __len__(self):
        return len(self.simplices)

    @cached_property
    def position(self) -> Dict[Tuple[int, ...], int]:
        return {s: j for j, s in enumerate(self.simplices)}


@lru_cache(maxsize=256)
def _enumerate(image: DigitalImage, n: int) -> SimplexBasis:
    if n < 0:
        return SimplexBasis(n, ())
    closed = image.closed_neighborhoods
    size = n + 1
    found: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def extend(candidates):
        if len(chosen) == size:
            found.append(tuple(chosen))
            return
        for c in sorted(candidates):
            chosen.append(c)
            extend(candidates & closed[c])
            chosen.pop()

    extend(frozenset(range(len(image))))
    logger.debug("Enumerated %d singular %d-simplexes on %d points",
                 len(found), n, len(image))
    return SimplexBasis(n, tuple(found))


def singular_basis(image: DigitalImage, n: int) -> SimplexBasis:
    if n > config.MAX_CHAIN_DIM:
        raise DimensionLimitError(
            f"simplex dimension {n} exceeds the configured maximum {config.MAX_CHAIN_DIM}")
    return _enumerate(image, n)


def enumerate_singular(image: DigitalImage, n: int) -> List[SingularSimplex]:
    if n < 0:
        raise InvalidInputError(f"simplex dimension must be nonnegative, got {n}")
    points = image.points
    return [SingularSimplex(image, tuple(points[i] for i in s))
            for s in singular_basis(image, n).simplices]


def simplex_as_map(sigma: SingularSimplex) -> DigitalMap:
    simplex = StandardSimplex(sigma.n)
    return DigitalMap.from_table(
        simplex.as_image(), sigma.image,
        {simplex.vertex(i): v for i, v in enumerate(sigma.values)})


def eta_map() -> DigitalMap:
    """η : Δ^1 -> [0,2]_Z with e_0 -> 0 and e_1 -> 1."""
    simplex = StandardSimplex(1)
    return DigitalMap.from_table(
        simplex.as_image(), digital_interval(0, 2),
        {simplex.vertex(0): (0,), simplex.vertex(1): (1,)})
