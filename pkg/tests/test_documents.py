import json
import logging
import os

import pytest

from documents import (load_image, load_map, load_path, parse_image,
                       parse_image_document, parse_map_document)
from errors import DocumentError
from maps import is_continuous

SAMPLES = os.path.join(os.path.dirname(__file__), os.pardir, 'samples')


def write_json(path, data):
    path.write_text(json.dumps(data), encoding='utf-8')
    return str(path)


def test_parse_square():
    image = parse_image(
        '{"name": "square4", "n": 2, "u": 1, "points": [[0,0],[1,0],[1,1],[0,1]]}')
    assert image.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert image.edge_count == 4
    assert not image.is_explicit


def test_duplicate_points_are_dropped_with_a_warning(dighom_records):
    document = parse_image_document('{"n": 1, "u": 1, "points": [[0], [1], [0]]}')
    assert document.points == ((0,), (1,))
    assert any(r.levelno == logging.WARNING and 'Duplicate' in r.getMessage()
               for r in dighom_records)


def test_unknown_keys_are_reported(dighom_records):
    parse_image('{"n": 1, "u": 1, "points": [[0]], "colour": "red"}')
    assert any('colour' in r.getMessage() for r in dighom_records)


@pytest.mark.parametrize('text, field', [
    ('{"n": 2, "u": 3, "points": []}', 'u'),
    ('{"n": 0, "u": 1, "points": []}', 'n'),
    ('{"u": 1, "points": []}', 'n'),
    ('{"n": 2, "u": true, "points": []}', 'u'),
    ('{"n": 2, "u": 1, "points": [[0, 0], [1]]}', 'points'),
    ('{"n": 2, "u": 1, "points": [[0, 0.5]]}', 'points'),
    ('{"n": 2, "u": 1, "points": "none"}', 'points'),
    ('{"n": 1, "u": 1, "points": [[0], [1]], "edges": [[[0], [5]]]}', 'edges'),
    ('{"n": 1, "u": 1, "points": [[0]], "name": 7}', 'name'),
])
def test_invalid_image_documents(text, field):
    with pytest.raises(DocumentError) as info:
        parse_image(text)
    assert info.value.field == field


def test_malformed_json_reports_the_line():
    with pytest.raises(DocumentError) as info:
        parse_image('{\n  "n": 2,\n  "u": 1\n  "points": []\n}')
    assert info.value.line == 4
    with pytest.raises(DocumentError):
        parse_image('[1, 2]')


def test_explicit_edges():
    image = parse_image(
        '{"n": 1, "u": 1, "points": [[0], [1], [2]], "edges": [[[0], [2]]]}')
    assert image.is_explicit
    assert image.are_adjacent((0,), (2,))
    assert not image.are_adjacent((0,), (1,))


def test_load_samples():
    square = load_image(os.path.join(SAMPLES, 'square4.json'))
    assert len(square) == 4
    identity = load_map(os.path.join(SAMPLES, 'ring8_identity.json'))
    assert is_continuous(identity)
    assert identity.values == identity.domain.points
    loop = load_path(os.path.join(SAMPLES, 'square4_loop.json'))
    assert loop.is_loop and loop.m == 4


def test_map_documents(tmp_path):
    write_json(tmp_path / 'edge.json', {'n': 1, 'u': 1, 'points': [[0], [1]]})
    path = write_json(tmp_path / 'swap.json', {
        'domain': 'edge.json', 'codomain': 'edge.json',
        'pairs': [[[0], [1]], [[1], [0]]]})
    f = load_map(path)
    assert f((0,)) == (1,) and f((1,)) == (0,)
    assert is_continuous(f)


def test_partial_map_is_rejected(tmp_path):
    write_json(tmp_path / 'edge.json', {'n': 1, 'u': 1, 'points': [[0], [1]]})
    path = write_json(tmp_path / 'partial.json', {
        'domain': 'edge.json', 'codomain': 'edge.json', 'pairs': [[[0], [1]]]})
    with pytest.raises(DocumentError) as info:
        load_map(path)
    assert info.value.field == 'pairs'


def test_conflicting_pairs_are_rejected(tmp_path):
    write_json(tmp_path / 'edge.json', {'n': 1, 'u': 1, 'points': [[0], [1]]})
    path = write_json(tmp_path / 'twice.json', {
        'domain': 'edge.json', 'codomain': 'edge.json',
        'pairs': [[[0], [1]], [[0], [0]], [[1], [1]]]})
    with pytest.raises(DocumentError):
        load_map(path)


def test_map_document_needs_file_names():
    with pytest.raises(DocumentError) as info:
        parse_map_document('{"domain": 3, "codomain": "a.json", "pairs": []}')
    assert info.value.field == 'domain'


def test_path_documents(tmp_path):
    write_json(tmp_path / 'line.json', {'n': 1, 'u': 1, 'points': [[0], [1], [2]]})
    path = write_json(tmp_path / 'walk.json', {'image': 'line.json',
                                               'values': [[0], [1], [1], [2]]})
    walk = load_path(path)
    assert walk.m == 3 and not walk.is_loop
    jump = write_json(tmp_path / 'jump.json', {'image': 'line.json', 'values': [[0], [2]]})
    with pytest.raises(DocumentError) as info:
        load_path(jump)
    assert info.value.field == 'values'


def test_missing_file_is_an_os_error(tmp_path):
    with pytest.raises(OSError):
        load_image(str(tmp_path / 'absent.json'))
