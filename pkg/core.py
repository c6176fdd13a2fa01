"""Lattice points, k(u,n)-adjacency, digital images and connectivity.

A digital image is a finite set of points of Z^n together with an
adjacency relation.  The relation is normally the k(u,n) rule; product
images built by ``maps.cartesian_product`` carry an explicit edge set
instead, because cartesian-product adjacency is not a k(u,n) relation.

Points are plain tuples of ints and are always kept in lexicographic
order, which fixes every basis ordering downstream.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from errors import InvalidInputError
from logger_setup import logger

LatticePoint = Tuple[int, ...]
Edge = FrozenSet[LatticePoint]


def lattice_point(coords: Iterable[int]) -> LatticePoint:
    point = tuple(coords)
    if not point:
        raise InvalidInputError("a lattice point needs at least one coordinate")
    for c in point:
        # bool is an int subclass and floats silently truncate; refuse both.
        if isinstance(c, bool) or not isinstance(c, int):
            raise InvalidInputError(
                f"lattice coordinates must be integers, got {c!r} in {point!r}")
    return point


@dataclass(frozen=True)
class AdjacencySpec:
    n: int
    u: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(
                f"ambient dimension must be positive, got n={self.n}")
        if not 1 <= self.u <= self.n:
            raise InvalidInputError(
                f"adjacency order must satisfy 1 <= u <= n, got u={self.u}, n={self.n}")

    @property
    def k(self) -> int:
        return neighbor_count(self)

    def __str__(self):
        return f"k({self.u},{self.n})={self.k}"


def adjacent(p: LatticePoint, q: LatticePoint, spec: AdjacencySpec) -> bool:
    if len(p) != spec.n or len(q) != spec.n:
        raise InvalidInputError(
            f"points {p!r} and {q!r} do not both have dimension {spec.n}")
    differing = 0
    for a, b in zip(p, q):
        d = abs(a - b)
        if d > 1:
            return False
        differing += d
    return 1 <= differing <= spec.u


def neighbor_count(spec: AdjacencySpec) -> int:
    return sum(2 ** i * math.comb(spec.n, i) for i in range(1, spec.u + 1))


def brute_force_neighbor_count(spec: AdjacencySpec) -> int:
    origin = (0,) * spec.n
    return sum(1 for offset in itertools.product((-1, 0, 1), repeat=spec.n)
               if adjacent(origin, offset, spec))


@dataclass(frozen=True)
class DigitalImage:
    """A finite digital image (X, k).

    ``edges`` is ``None`` for ordinary k(u,n) images.  When present it is
    the complete adjacency relation and ``spec`` only records the ambient
    dimension.
    """
    spec: AdjacencySpec
    points: Tuple[LatticePoint, ...]
    edges: Optional[FrozenSet[Edge]] = None

    def __post_init__(self):
        pts = tuple(lattice_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.spec.n:
                raise InvalidInputError(
                    f"point {p!r} does not have dimension {self.spec.n}")
        if len(set(pts)) != len(pts):
            raise InvalidInputError("digital image points must be distinct")
        object.__setattr__(self, 'points', tuple(sorted(pts)))

        if self.edges is not None:
            members = set(pts)
            edges = set()
            for edge in self.edges:
                pair = frozenset(lattice_point(p) for p in edge)
                if len(pair) != 2:
                    raise InvalidInputError(
                        f"edge {sorted(edge)!r} must join two distinct points")
                if not pair <= members:
                    raise InvalidInputError(
                        f"edge {sorted(pair)!r} leaves the image")
                edges.add(pair)
            object.__setattr__(self, 'edges', frozenset(edges))

    @classmethod
    def from_points(cls, points: Iterable[Iterable[int]], u: int,
                    n: Optional[int] = None,
                    edges: Optional[Iterable[Tuple[Sequence[int], Sequence[int]]]] = None
                    ) -> 'DigitalImage':
        pts = [lattice_point(p) for p in points]
        if n is None:
            if not pts:
                raise InvalidInputError(
                    "the ambient dimension of an empty image must be given")
            n = len(pts[0])
        explicit = None
        if edges is not None:
            explicit = frozenset(
                frozenset((lattice_point(a), lattice_point(b))) for a, b in edges)
        return cls(AdjacencySpec(n, u), tuple(pts), explicit)

    @property
    def is_explicit(self) -> bool:
        return self.edges is not None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self.index

    @cached_property
    def index(self) -> Dict[LatticePoint, int]:
        return {p: i for i, p in enumerate(self.points)}

    def are_adjacent(self, p: LatticePoint, q: LatticePoint) -> bool:
        if self.edges is not None:
            return frozenset((p, q)) in self.edges
        return adjacent(p, q, self.spec)

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.points)
        if self.edges is not None:
            graph.add_edges_from(tuple(sorted(e)) for e in sorted(
                self.edges, key=sorted))
        else:
            graph.add_edges_from(
                (p, q) for p, q in itertools.combinations(self.points, 2)
                if adjacent(p, q, self.spec))
        logger.debug("Built adjacency graph: %d points, %d edges",
                     graph.number_of_nodes(), graph.number_of_edges())
        return graph

    @cached_property
    def closed_neighborhoods(self) -> Tuple[FrozenSet[int], ...]:
        """Index sets {i} ∪ {j : points[j] adjacent to points[i]}."""
        index = self.index
        return tuple(
            frozenset([i] + [index[q] for q in self.graph.adj[p]])
            for i, p in enumerate(self.points))

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()


def neighbors(p: LatticePoint, image: DigitalImage) -> FrozenSet[LatticePoint]:
    if p not in image:
        raise InvalidInputError(f"point {p!r} is not in the image")
    return frozenset(image.graph.adj[p])


def connected_components(image: DigitalImage) -> List[Tuple[LatticePoint, ...]]:
    blocks = [tuple(sorted(c)) for c in nx.connected_components(image.graph)]
    return sorted(blocks)


def is_connected(image: DigitalImage) -> bool:
    # |X| <= 1 counts as connected: the pairwise condition is vacuous.
    return len(image) <= 1 or nx.is_connected(image.graph)


def is_connected_subset(image: DigitalImage, subset: Iterable[LatticePoint]) -> bool:
    nodes = set(subset)
    for p in nodes:
        if p not in image:
            raise InvalidInputError(f"point {p!r} is not in the image")
    if len(nodes) <= 1:
        return True
    return nx.is_connected(image.graph.subgraph(nodes))


def shortest_k_path(image: DigitalImage, p: LatticePoint,
                    q: LatticePoint) -> Optional[List[LatticePoint]]:
    if p not in image or q not in image:
        raise InvalidInputError(f"{p!r} and {q!r} must both lie in the image")
    try:
        return nx.shortest_path(image.graph, p, q)
    except nx.NetworkXNoPath:
        return None


def digital_interval(a: int, b: int) -> DigitalImage:
    if a >= b:
        raise InvalidInputError(
            f"a digital interval [a,b] needs a < b, got a={a}, b={b}")
    return DigitalImage(AdjacencySpec(1, 1), tuple((t,) for t in range(a, b + 1)))


def is_digital_interval(image: DigitalImage) -> bool:
    if image.is_explicit or image.spec != AdjacencySpec(1, 1) or len(image) < 2:
        return False
    first = image.points[0][0]
    return all(p == (first + t,) for t, p in enumerate(image.points))


def translate(image: DigitalImage, vector: Sequence[int]) -> DigitalImage:
    vector = lattice_point(vector)
    if len(vector) != image.spec.n:
        raise InvalidInputError(
            f"translation vector {vector!r} does not have dimension {image.spec.n}")

    def shift(p):
        return tuple(a + b for a, b in zip(p, vector))

    edges = None
    if image.edges is not None:
        edges = frozenset(frozenset(shift(p) for p in e) for e in image.edges)
    return DigitalImage(image.spec, tuple(shift(p) for p in image.points), edges)


def subimage(image: DigitalImage, points: Iterable[LatticePoint]) -> DigitalImage:
    """The subset A ⊆ X with the adjacency of X restricted to it."""
    chosen = set(points)
    for p in chosen:
        if p not in image:
            raise InvalidInputError(f"point {p!r} is not in the image")
    edges = None
    if image.edges is not None:
        edges = frozenset(e for e in image.edges if e <= chosen)
    return DigitalImage(image.spec, tuple(chosen), edges)
