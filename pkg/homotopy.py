"""Digital homotopy: validation, closure operations and decision by search.

Two continuous maps f, g : X -> Y are homotopic exactly when they lie in
the same component of the graph whose nodes are the continuous maps
X -> Y and whose edges join maps that differ pointwise by equal-or-adjacent
values.  The search below walks that graph breadth first, generating
neighbours in lexicographic order, so the witness it returns is the
lexicographically least among the shortest ones.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import config
from core import DigitalImage, LatticePoint, digital_interval, is_digital_interval
from errors import (ContinuityError, InvalidInputError, SearchBoundExceeded,
                    ShapeMismatchError)
from logger_setup import logger
from maps import (DigitalMap, DigitalPath, cartesian_product, is_continuous,
                  require_loop_pair, trivial_extensions)

MapState = Tuple[int, ...]


@dataclass(frozen=True)
class Homotopy:
    source: DigitalImage
    target: DigitalImage
    frames: Tuple[DigitalMap, ...]

    @property
    def m(self) -> int:
        return len(self.frames) - 1

    def track(self, x: LatticePoint) -> Tuple[LatticePoint, ...]:
        """The induced function F_x : [0,m]_Z -> Y."""
        return tuple(frame(x) for frame in self.frames)


def is_homotopy_valid(F: Homotopy, f: DigitalMap, g: DigitalMap) -> bool:
    if F.m < 1:
        return False
    if F.frames[0] != f or F.frames[-1] != g:
        return False
    for frame in F.frames:
        if frame.domain != F.source or frame.codomain != F.target:
            return False
        if not is_continuous(frame):
            return False
    for before, after in zip(F.frames, F.frames[1:]):
        for a, b in zip(before.values, after.values):
            if a != b and not F.target.are_adjacent(a, b):
                return False
    return True


def lazy_homotopy(f: DigitalMap) -> Homotopy:
    return Homotopy(f.domain, f.codomain, (f, f))


def reverse_homotopy(F: Homotopy) -> Homotopy:
    return Homotopy(F.source, F.target, tuple(reversed(F.frames)))


def concatenate_homotopies(F: Homotopy, G: Homotopy) -> Homotopy:
    if F.frames[-1] != G.frames[0]:
        raise InvalidInputError("the first homotopy must end where the second starts")
    return Homotopy(F.source, F.target, F.frames + G.frames[1:])


def homotopy_as_map(F: Homotopy) -> DigitalMap:
    """F as a map X × [0,m]_Z -> Y on the cartesian product."""
    product = cartesian_product(F.source, digital_interval(0, F.m))
    return DigitalMap.from_function(
        product, F.target, lambda p: F.frames[p[-1]](p[:-1]))


def _require_comparable(f: DigitalMap, g: DigitalMap):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ShapeMismatchError("maps must share domain and codomain")
    for h in (f, g):
        if not is_continuous(h):
            raise ContinuityError("homotopy search needs continuous maps")


class _MapGraph:
    """Continuous maps domain -> codomain, as index tuples, and their moves."""

    def __init__(self, domain: DigitalImage, codomain: DigitalImage,
                 fixed: Optional[Mapping[int, int]] = None):
        self.domain = domain
        self.codomain = codomain
        self.fixed = dict(fixed or {})
        index = domain.index
        self.earlier = [
            sorted(index[q] for q in domain.graph.adj[p] if index[q] < i)
            for i, p in enumerate(domain.points)]
        self.closed = [sorted(n) for n in codomain.closed_neighborhoods]
        self.closed_sets = codomain.closed_neighborhoods

    def moves(self, state: MapState) -> Iterator[MapState]:
        """Continuous maps pointwise equal-or-adjacent to ``state``."""
        size = len(state)
        chosen: List[int] = []

        def extend(i):
            if i == size:
                yield tuple(chosen)
                return
            if i in self.fixed:
                candidates = [self.fixed[i]] if self.fixed[i] in self.closed_sets[state[i]] else []
            else:
                candidates = self.closed[state[i]]
            for c in candidates:
                if all(c in self.closed_sets[chosen[j]] for j in self.earlier[i]):
                    chosen.append(c)
                    yield from extend(i + 1)
                    chosen.pop()

        yield from extend(0)

    def to_map(self, state: MapState) -> DigitalMap:
        points = self.codomain.points
        return DigitalMap(self.domain, self.codomain, tuple(points[i] for i in state))


def _search(graph: _MapGraph, sources: Sequence[MapState], targets: Iterable[MapState],
            state_cap: int) -> Optional[List[MapState]]:
    targets = set(targets)
    parent: Dict[MapState, Optional[MapState]] = {}
    queue = deque()
    for s in sources:
        if s not in parent:
            parent[s] = None
            queue.append(s)

    def walk_back(node):
        path = []
        while node is not None:
            path.append(node)
            node = parent[node]
        return path[::-1]

    for s in queue:
        if s in targets:
            return walk_back(s)
    while queue:
        node = queue.popleft()
        for nxt in graph.moves(node):
            if nxt in parent:
                continue
            parent[nxt] = node
            if nxt in targets:
                logger.debug("Homotopy search hit a target after %d states", len(parent))
                return walk_back(nxt)
            if len(parent) > state_cap:
                raise SearchBoundExceeded(state_cap, len(parent))
            queue.append(nxt)
    logger.debug("Homotopy search exhausted %d states", len(parent))
    return None


def _witness(graph: _MapGraph, path: List[MapState]) -> Homotopy:
    if len(path) == 1:
        path = path * 2
    frames = tuple(graph.to_map(s) for s in path)
    return Homotopy(graph.domain, graph.codomain, frames)


def are_homotopic(f: DigitalMap, g: DigitalMap,
                  state_cap: Optional[int] = None) -> Optional[Homotopy]:
    _require_comparable(f, g)
    cap = config.STATE_CAP if state_cap is None else state_cap
    graph = _MapGraph(f.domain, f.codomain)
    path = _search(graph, [f.value_indices], [g.value_indices], cap)
    return None if path is None else _witness(graph, path)


def are_pointed_homotopic(f: DigitalMap, g: DigitalMap, x0: LatticePoint,
                          y0: LatticePoint, endpoint_fixed: bool = False,
                          state_cap: Optional[int] = None) -> Optional[Homotopy]:
    """Homotopy with every frame sending x0 to y0.

    With ``endpoint_fixed`` the domain must be a digital interval (f and g
    are paths) and both of its endpoints are pinned as well.
    """
    _require_comparable(f, g)
    x0, y0 = tuple(x0), tuple(y0)
    if f(x0) != y0 or g(x0) != y0:
        raise InvalidInputError(f"both maps must send the base point {x0!r} to {y0!r}")
    fixed = {f.domain.index[x0]: f.codomain.index[y0]}
    if endpoint_fixed:
        if not is_digital_interval(f.domain):
            raise InvalidInputError("endpoint-fixed homotopy needs path maps")
        for end in (0, len(f.domain) - 1):
            if f.value_indices[end] != g.value_indices[end]:
                raise InvalidInputError("paths must share both endpoints")
            fixed[end] = f.value_indices[end]
    cap = config.STATE_CAP if state_cap is None else state_cap
    graph = _MapGraph(f.domain, f.codomain, fixed)
    path = _search(graph, [f.value_indices], [g.value_indices], cap)
    return None if path is None else _witness(graph, path)


def homotopy_class(f: DigitalMap, state_cap: Optional[int] = None) -> List[DigitalMap]:
    """Every continuous map homotopic to f, in lexicographic order."""
    if not is_continuous(f):
        raise ContinuityError("homotopy classes are taken among continuous maps")
    cap = config.STATE_CAP if state_cap is None else state_cap
    graph = _MapGraph(f.domain, f.codomain)
    seen = {f.value_indices}
    queue = deque(seen)
    while queue:
        node = queue.popleft()
        for nxt in graph.moves(node):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise SearchBoundExceeded(cap, len(seen))
                queue.append(nxt)
    return [graph.to_map(s) for s in sorted(seen)]


@dataclass(frozen=True)
class LoopEquivalence:
    extended_f: DigitalPath
    extended_g: DigitalPath
    homotopy: Homotopy


def loop_equivalence_witness(f: DigitalPath, g: DigitalPath, max_len: int,
                             state_cap: Optional[int] = None) -> Optional[LoopEquivalence]:
    """Trivial extensions of f and g of equal length <= max_len joined by an
    endpoint-fixed homotopy, or ``None`` if none exists within the bound.
    """
    require_loop_pair(f, g)
    if max_len < 1:
        raise InvalidInputError("the loop length bound must be positive")
    cap = config.STATE_CAP if state_cap is None else state_cap
    target = f.target
    base = target.index[f.base_point]
    index = target.index
    for length in range(max(f.m, g.m), max_len + 1):
        sources = {tuple(index[v] for v in p.values): p for p in trivial_extensions(f, length)}
        goals = {tuple(index[v] for v in p.values): p for p in trivial_extensions(g, length)}
        graph = _MapGraph(digital_interval(0, length), target, {0: base, length: base})
        path = _search(graph, sorted(sources), goals, cap)
        if path is not None:
            logger.debug("Loops joined at length %d by %d frames", length, len(path))
            return LoopEquivalence(sources[path[0]], goals[path[-1]], _witness(graph, path))
    return None


def loops_equivalent(f: DigitalPath, g: DigitalPath, max_len: int,
                     state_cap: Optional[int] = None) -> bool:
    """Bounded semi-decision: ``False`` means "not found within max_len"."""
    return loop_equivalence_witness(f, g, max_len, state_cap) is not None
