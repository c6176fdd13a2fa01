"""Digitally continuous maps, paths, loops and the cartesian product with an interval."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

import config
from core import (AdjacencySpec, DigitalImage, LatticePoint, digital_interval,
                  is_connected_subset, is_digital_interval, translate)
from errors import InvalidInputError, ShapeMismatchError
from logger_setup import logger


@dataclass(frozen=True)
class DigitalMap:
    """A total function between two digital images.

    ``values[i]`` is the image of ``domain.points[i]``.
    """
    domain: DigitalImage
    codomain: DigitalImage
    values: Tuple[LatticePoint, ...]

    def __post_init__(self):
        values = tuple(tuple(v) for v in self.values)
        if len(values) != len(self.domain):
            raise InvalidInputError(
                f"map table has {len(values)} values for {len(self.domain)} domain points")
        for x, y in zip(self.domain.points, values):
            if y not in self.codomain:
                raise InvalidInputError(
                    f"value {y!r} of {x!r} is not a codomain point")
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_table(cls, domain: DigitalImage, codomain: DigitalImage,
                   table: Mapping[LatticePoint, LatticePoint]) -> 'DigitalMap':
        missing = [x for x in domain.points if x not in table]
        if missing:
            raise InvalidInputError(f"map is not defined at {missing[0]!r}")
        extra = [x for x in table if x not in domain]
        if extra:
            raise InvalidInputError(f"{extra[0]!r} is not a domain point")
        return cls(domain, codomain, tuple(table[x] for x in domain.points))

    @classmethod
    def from_function(cls, domain: DigitalImage, codomain: DigitalImage,
                      fn: Callable[[LatticePoint], LatticePoint]) -> 'DigitalMap':
        return cls(domain, codomain, tuple(fn(x) for x in domain.points))

    def __call__(self, x: LatticePoint) -> LatticePoint:
        try:
            return self.values[self.domain.index[x]]
        except KeyError:
            raise InvalidInputError(f"{x!r} is not a domain point") from None

    @property
    def table(self) -> Dict[LatticePoint, LatticePoint]:
        return dict(zip(self.domain.points, self.values))

    @cached_property
    def value_indices(self) -> Tuple[int, ...]:
        index = self.codomain.index
        return tuple(index[y] for y in self.values)


def identity_map(image: DigitalImage) -> DigitalMap:
    return DigitalMap(image, image, image.points)


def constant_map(domain: DigitalImage, codomain: DigitalImage,
                 y: LatticePoint) -> DigitalMap:
    return DigitalMap(domain, codomain, (tuple(y),) * len(domain))


def inclusion_map(sub: DigitalImage, image: DigitalImage) -> DigitalMap:
    return DigitalMap(sub, image, sub.points)


def translation_map(image: DigitalImage, vector: Sequence[int]) -> DigitalMap:
    moved = translate(image, vector)
    return DigitalMap(image, moved, moved.points)


def is_continuous(f: DigitalMap) -> bool:
    codomain = f.codomain
    for p, q in f.domain.graph.edges:
        fp, fq = f(p), f(q)
        if fp != fq and not codomain.are_adjacent(fp, fq):
            return False
    return True


def is_continuous_by_subsets(f: DigitalMap, limit: Optional[int] = None) -> bool:
    """Continuity as "every connected subset has a connected image".

    Enumerates all subsets of the domain, so the domain size is capped.
    """
    limit = config.SUBSET_LIMIT if limit is None else limit
    if len(f.domain) > limit:
        raise InvalidInputError(
            f"subset continuity check is limited to {limit} domain points")
    for r in range(2, len(f.domain) + 1):
        for subset in itertools.combinations(f.domain.points, r):
            if not is_connected_subset(f.domain, subset):
                continue
            if not is_connected_subset(f.codomain, {f(x) for x in subset}):
                return False
    return True


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """g ∘ f."""
    if f.codomain != g.domain:
        raise ShapeMismatchError("cannot compose: codomain of f is not the domain of g")
    return DigitalMap(f.domain, g.codomain, tuple(g(y) for y in f.values))


def verify_homeomorphism(f: DigitalMap, g: DigitalMap) -> bool:
    if f.domain != g.codomain or f.codomain != g.domain:
        raise ShapeMismatchError(
            "a candidate inverse must map the codomain of f back onto its domain")
    if len(f.domain) != len(f.codomain) or len(set(f.values)) != len(f.values):
        return False
    if not (is_continuous(f) and is_continuous(g)):
        return False
    return (compose(g, f) == identity_map(f.domain)
            and compose(f, g) == identity_map(f.codomain))


@dataclass(frozen=True)
class DigitalPath:
    """A (2,k)-continuous function [0,m]_Z -> target, stored by its values."""
    target: DigitalImage
    values: Tuple[LatticePoint, ...]

    def __post_init__(self):
        values = tuple(tuple(v) for v in self.values)
        if len(values) < 2:
            raise InvalidInputError("a digital path needs m >= 1, i.e. at least two values")
        for v in values:
            if v not in self.target:
                raise InvalidInputError(f"path value {v!r} is not in the target image")
        for t, (a, b) in enumerate(zip(values, values[1:])):
            if a != b and not self.target.are_adjacent(a, b):
                raise InvalidInputError(
                    f"path jumps from {a!r} to {b!r} at t={t}")
        object.__setattr__(self, 'values', values)

    @property
    def m(self) -> int:
        return len(self.values) - 1

    @property
    def is_loop(self) -> bool:
        return self.values[0] == self.values[-1]

    @property
    def base_point(self) -> LatticePoint:
        return self.values[0]

    @property
    def is_trivial(self) -> bool:
        return len(set(self.values)) == 1


def constant_loop(target: DigitalImage, x0: LatticePoint, length: int = 1) -> DigitalPath:
    return DigitalPath(target, (tuple(x0),) * (length + 1))


def path_as_map(path: DigitalPath) -> DigitalMap:
    return DigitalMap(digital_interval(0, path.m), path.target, path.values)


def path_product(f: DigitalPath, g: DigitalPath) -> DigitalPath:
    if f.target != g.target:
        raise ShapeMismatchError("paths must lie in the same image")
    if f.values[-1] != g.values[0]:
        raise InvalidInputError(
            f"path product needs f(m1) = g(0), got {f.values[-1]!r} and {g.values[0]!r}")
    return DigitalPath(f.target, f.values + g.values[1:])


def require_loop_pair(f: DigitalPath, g: DigitalPath):
    if not (f.is_loop and g.is_loop):
        raise InvalidInputError("both paths must be loops")
    if f.target != g.target:
        raise ShapeMismatchError("loops must lie in the same image")
    if f.base_point != g.base_point:
        raise InvalidInputError(
            f"loops have different base points {f.base_point!r} and {g.base_point!r}")


def trivial_extension_witness(f: DigitalPath, g: DigitalPath) -> Optional[Tuple[int, ...]]:
    """A nondecreasing surjection phi: [0,m_g] -> [0,m_f] with g = f ∘ phi.

    Steps of phi are 0 or 1; a 0 step is a repetition inserted at a
    junction of f.  Returns ``None`` when no such reindexing exists.
    """
    fv, gv = f.values, g.values
    mf, mg = len(fv) - 1, len(gv) - 1
    if mg < mf or gv[0] != fv[0]:
        return None
    reach: List[Dict[int, Optional[int]]] = [dict() for _ in range(mg + 1)]
    reach[0][0] = None
    for i in range(mg):
        for j in reach[i]:
            for nj in (j, j + 1):
                if nj <= mf and nj not in reach[i + 1] and gv[i + 1] == fv[nj]:
                    reach[i + 1][nj] = j
    if mf not in reach[mg]:
        return None
    phi = [mf]
    for i in range(mg, 0, -1):
        phi.append(reach[i][phi[-1]])
    return tuple(reversed(phi))


def is_trivial_extension(f: DigitalPath, g: DigitalPath) -> bool:
    require_loop_pair(f, g)
    return trivial_extension_witness(f, g) is not None


def is_trivial_extension_by_decomposition(f: DigitalPath, g: DigitalPath,
                                          allow_constant_pieces: bool = True) -> bool:
    """Search decompositions f = f_1*...*f_s and g = G_1*...*G_t directly.

    ``allow_constant_pieces`` decides whether the f_j themselves may be
    constant paths, a point the definition leaves open.
    """
    require_loop_pair(f, g)
    fv, gv = f.values, g.values
    mf, mg = len(fv) - 1, len(gv) - 1

    for cut_count in range(mf):
        for cuts in itertools.combinations(range(1, mf), cut_count):
            bounds = (0,) + cuts + (mf,)
            pieces = tuple(fv[a:b + 1] for a, b in zip(bounds, bounds[1:]))
            if not allow_constant_pieces and any(len(set(p)) == 1 for p in pieces):
                continue

            @lru_cache(maxsize=None)
            def match(pos, k):
                if k == len(pieces) and pos == mg:
                    return True
                if k < len(pieces):
                    piece = pieces[k]
                    end = pos + len(piece) - 1
                    if end <= mg and gv[pos:end + 1] == piece and match(end, k + 1):
                        return True
                length = 1
                while pos + length <= mg and gv[pos + length] == gv[pos]:
                    if match(pos + length, k):
                        return True
                    length += 1
                return False

            if match(0, 0):
                return True
    return False


def trivial_extensions(f: DigitalPath, length: int) -> List[DigitalPath]:
    """All trivial extensions of f with parameter interval [0, length]."""
    extra = length - f.m
    if extra < 0:
        return []
    found = set()
    for slots in itertools.combinations_with_replacement(range(f.m + 1), extra):
        repeats = [1] * (f.m + 1)
        for j in slots:
            repeats[j] += 1
        found.add(tuple(itertools.chain.from_iterable(
            [v] * r for v, r in zip(f.values, repeats))))
    return [DigitalPath(f.target, values) for values in sorted(found)]


def cartesian_product(image: DigitalImage, interval: DigitalImage) -> DigitalImage:
    """X × [a,b]_Z with cartesian-product adjacency, as an explicit-edge image.

    The point (x, t) is stored as the coordinates of x followed by t.
    """
    if not is_digital_interval(interval):
        raise InvalidInputError("the second factor must be a digital interval")
    product = nx.cartesian_product(image.graph, interval.graph)

    def point(node):
        x, t = node
        return x + t

    points = tuple(point(node) for node in product.nodes)
    edges = frozenset(frozenset((point(a), point(b))) for a, b in product.edges)
    logger.debug("Cartesian product: %d points, %d edges", len(points), len(edges))
    return DigitalImage(AdjacencySpec(image.spec.n + 1, 1), points, edges)


def psi(image: DigitalImage, interval: DigitalImage, i: int,
        product: Optional[DigitalImage] = None) -> DigitalMap:
    """The slice inclusion x -> (x, i) for i an endpoint of the interval."""
    if not is_digital_interval(interval):
        raise InvalidInputError("the second factor must be a digital interval")
    ends = (interval.points[0][0], interval.points[-1][0])
    if i not in ends:
        raise InvalidInputError(f"slice index {i} must be one of the endpoints {ends}")
    if product is None:
        product = cartesian_product(image, interval)
    return DigitalMap(image, product, tuple(x + (i,) for x in image.points))


def projection_map(product: DigitalImage, image: DigitalImage) -> DigitalMap:
    """(x, t) -> x."""
    return DigitalMap(product, image, tuple(p[:-1] for p in product.points))
