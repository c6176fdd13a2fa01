"""JSON documents for images, maps and paths.

Image document::

    {"name": "square4", "n": 2, "u": 1,
     "points": [[0,0],[1,0],[1,1],[0,1]],
     "edges": [[[0,0],[1,0]], ...]}          # optional, explicit adjacency

Map document (image paths are relative to the map document)::

    {"domain": "a.json", "codomain": "b.json", "pairs": [[[0,0],[1,1]], ...]}

Path document::

    {"image": "square4.json", "values": [[0,0],[1,0],[1,1],[0,1],[0,0]]}
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from core import AdjacencySpec, DigitalImage, LatticePoint, lattice_point
from errors import DocumentError, InvalidInputError
from logger_setup import logger
from maps import DigitalMap, DigitalPath

IMAGE_KEYS = {'name', 'n', 'u', 'points', 'edges'}


def _load_json(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno) from e
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object", line=1)
    return data


def _integer(data: Dict[str, Any], key: str) -> int:
    if key not in data:
        raise DocumentError("missing required key", field=key)
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"expected an integer, got {value!r}", field=key)
    return value


def _point(raw: Any, key: str, position: int, n: Optional[int] = None) -> LatticePoint:
    if not isinstance(raw, list):
        raise DocumentError(f"entry {position} is not a coordinate list", field=key)
    try:
        point = lattice_point(raw)
    except InvalidInputError as e:
        raise DocumentError(f"entry {position}: {e}", field=key) from e
    if n is not None and len(point) != n:
        raise DocumentError(
            f"entry {position} has {len(point)} coordinates, expected {n}", field=key)
    return point


def _pair_list(data: Dict[str, Any], key: str) -> List[Tuple[Any, Any]]:
    raw = data.get(key)
    if not isinstance(raw, list):
        raise DocumentError("expected a list of pairs", field=key)
    for position, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"entry {position} is not a pair", field=key)
    return [tuple(pair) for pair in raw]


@dataclass(frozen=True)
class ImageDocument:
    n: int
    u: int
    points: Tuple[LatticePoint, ...]
    edges: Optional[Tuple[Tuple[LatticePoint, LatticePoint], ...]] = None
    name: Optional[str] = None

    def to_image(self) -> DigitalImage:
        try:
            spec = AdjacencySpec(self.n, self.u)
        except InvalidInputError as e:
            raise DocumentError(str(e), field='u') from e
        try:
            explicit = None
            if self.edges is not None:
                explicit = frozenset(frozenset(pair) for pair in self.edges)
            return DigitalImage(spec, self.points, explicit)
        except InvalidInputError as e:
            raise DocumentError(str(e), field='edges' if self.edges else 'points') from e


def parse_image_document(text: str) -> ImageDocument:
    data = _load_json(text)
    unknown = set(data) - IMAGE_KEYS
    if unknown:
        logger.warning("Ignoring unknown image document keys: %s", sorted(unknown))
    n = _integer(data, 'n')
    u = _integer(data, 'u')
    if n < 1:
        raise DocumentError(f"ambient dimension must be positive, got {n}", field='n')
    if not 1 <= u <= n:
        raise DocumentError(f"adjacency order must satisfy 1 <= u <= {n}, got {u}", field='u')

    raw_points = data.get('points')
    if not isinstance(raw_points, list):
        raise DocumentError("expected a list of points", field='points')
    points: List[LatticePoint] = []
    seen = set()
    for position, raw in enumerate(raw_points):
        point = _point(raw, 'points', position, n)
        if point in seen:
            logger.warning("Duplicate point %r in image document; keeping one copy", point)
            continue
        seen.add(point)
        points.append(point)

    edges = None
    if 'edges' in data:
        edges = tuple((_point(a, 'edges', i, n), _point(b, 'edges', i, n))
                      for i, (a, b) in enumerate(_pair_list(data, 'edges')))
    name = data.get('name')
    if name is not None and not isinstance(name, str):
        raise DocumentError("expected a string", field='name')
    return ImageDocument(n, u, tuple(points), edges, name)


def parse_image(text: str) -> DigitalImage:
    return parse_image_document(text).to_image()


def _read(path: str) -> str:
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def load_image(path: str) -> DigitalImage:
    logger.debug("Loading image document %s", path)
    return parse_image(_read(path))


def _relative(base: str, path: Any, key: str) -> str:
    if not isinstance(path, str):
        raise DocumentError("expected a file name", field=key)
    return os.path.join(os.path.dirname(os.path.abspath(base)), path)


@dataclass(frozen=True)
class MapDocument:
    domain: str
    codomain: str
    pairs: Tuple[Tuple[LatticePoint, LatticePoint], ...]

    def to_map(self, domain: DigitalImage, codomain: DigitalImage) -> DigitalMap:
        table: Dict[LatticePoint, LatticePoint] = {}
        for x, y in self.pairs:
            if x in table and table[x] != y:
                raise DocumentError(f"{x!r} is sent to both {table[x]!r} and {y!r}", field='pairs')
            table[x] = y
        try:
            return DigitalMap.from_table(domain, codomain, table)
        except InvalidInputError as e:
            raise DocumentError(str(e), field='pairs') from e


def parse_map_document(text: str) -> MapDocument:
    data = _load_json(text)
    for key in ('domain', 'codomain'):
        if not isinstance(data.get(key), str):
            raise DocumentError("expected a file name", field=key)
    pairs = tuple((_point(x, 'pairs', i), _point(y, 'pairs', i))
                  for i, (x, y) in enumerate(_pair_list(data, 'pairs')))
    return MapDocument(data['domain'], data['codomain'], pairs)


def load_map(path: str) -> DigitalMap:
    document = parse_map_document(_read(path))
    domain = load_image(_relative(path, document.domain, 'domain'))
    codomain = load_image(_relative(path, document.codomain, 'codomain'))
    return document.to_map(domain, codomain)


def load_path(path: str) -> DigitalPath:
    data = _load_json(_read(path))
    target = load_image(_relative(path, data.get('image'), 'image'))
    raw = data.get('values')
    if not isinstance(raw, list):
        raise DocumentError("expected a list of points", field='values')
    values = tuple(_point(v, 'values', i, target.spec.n) for i, v in enumerate(raw))
    try:
        return DigitalPath(target, values)
    except InvalidInputError as e:
        raise DocumentError(str(e), field='values') from e
