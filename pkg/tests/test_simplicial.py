import itertools

import pytest

import config
from core import DigitalImage
from errors import DimensionLimitError, InvalidInputError
from maps import DigitalMap, is_continuous
from simplicial import (SingularSimplex, StandardSimplex, apply_face, enumerate_singular,
                        eta_map, face_function, face_vertex_map, simplex_as_map,
                        singular_basis, verify_face_identity)

X0, X1, X2, X3 = (0, 0), (1, 0), (1, 1), (0, 1)


def test_standard_simplex_vertices_are_pairwise_adjacent():
    for n in range(4):
        image = StandardSimplex(n).as_image()
        assert len(image) == n + 1
        assert image.edge_count == n * (n + 1) // 2
    assert StandardSimplex(2).vertex(1) == (0, 1, 0)
    with pytest.raises(InvalidInputError):
        StandardSimplex(2).vertex(3)
    with pytest.raises(InvalidInputError):
        StandardSimplex(-1)


def test_face_vertex_maps():
    assert face_vertex_map(0, 2) == (1, 2)
    assert face_vertex_map(1, 2) == (0, 2)
    assert face_vertex_map(2, 2) == (0, 1)
    with pytest.raises(InvalidInputError):
        face_vertex_map(3, 2)
    with pytest.raises(InvalidInputError):
        face_vertex_map(0, 0)


def test_face_functions_are_continuous():
    for n in range(1, 4):
        for i in range(n + 1):
            f = face_function(i, n)
            assert is_continuous(f)
            assert f(StandardSimplex(n - 1).vertex(0)) == StandardSimplex(n).vertex(
                face_vertex_map(i, n)[0])


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_face_identity(n):
    assert verify_face_identity(n)


def test_square_counts(square4):
    assert len(singular_basis(square4, 0)) == 4
    assert len(singular_basis(square4, 1)) == 12
    assert len(singular_basis(square4, 2)) == 28


def test_complete_and_one_point_counts(square4_u2, point, two_points):
    for n in range(4):
        assert len(singular_basis(square4_u2, n)) == 4 ** (n + 1)
        assert len(singular_basis(point, n)) == 1
    assert [s.values for s in enumerate_singular(two_points, 1)] == [
        ((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]


def test_basis_is_lexicographic(ring8):
    simplices = singular_basis(ring8, 2).simplices
    assert list(simplices) == sorted(simplices)
    assert len(set(simplices)) == len(simplices)


def continuous_simplices(image, n):
    simplex = StandardSimplex(n)
    source = simplex.as_image()
    found = set()
    for values in itertools.product(image.points, repeat=n + 1):
        f = DigitalMap.from_table(source, image, dict(zip(simplex.vertices, values)))
        if is_continuous(f):
            found.add(values)
    return found


def test_enumeration_matches_continuity(square4, cycle5):
    for image in (square4, cycle5):
        for n in range(3):
            assert {s.values for s in enumerate_singular(image, n)} == \
                continuous_simplices(image, n)


def test_enumeration_matches_continuity_on_random_images(corpus):
    for image in corpus[:6]:
        assert len(image) <= 6
        for n in range(4):
            assert {s.values for s in enumerate_singular(image, n)} == \
                continuous_simplices(image, n)


def test_face_composition_on_simplexes(square4):
    cube = DigitalImage.from_points(list(itertools.product(range(2), repeat=3)), u=3)
    simplices = [SingularSimplex(cube, cube.points[:n + 1]) for n in range(2, 5)]
    for n in (2, 3):
        simplices.extend(enumerate_singular(square4, n))
    for sigma in simplices:
        for j in range(1, sigma.n + 1):
            for k in range(j):
                assert apply_face(apply_face(sigma, j), k) == \
                    apply_face(apply_face(sigma, k), j - 1)


def test_simplex_as_map(square4):
    sigma = SingularSimplex(square4, (X0, X1, X1))
    f = simplex_as_map(sigma)
    assert is_continuous(f)
    assert f((0, 1, 0)) == X1
    with pytest.raises(InvalidInputError):
        SingularSimplex(square4, (X0, X2))


def test_faces_stay_in_the_basis(ring8):
    edges = set(enumerate_singular(ring8, 1))
    for sigma in enumerate_singular(ring8, 2):
        for i in range(3):
            assert apply_face(sigma, i) in edges
    sigma = SingularSimplex(ring8, ((0, 0), (1, 0), (0, 0)))
    assert apply_face(sigma, 1).values == ((0, 0), (0, 0))
    with pytest.raises(InvalidInputError):
        apply_face(SingularSimplex(ring8, ((0, 0),)), 0)


def test_dimension_limit(monkeypatch, square4):
    monkeypatch.setattr(config, 'MAX_CHAIN_DIM', 1)
    assert len(singular_basis(square4, 1)) == 12
    with pytest.raises(DimensionLimitError):
        singular_basis(square4, 2)


def test_empty_image_has_no_simplexes():
    empty = DigitalImage.from_points([], u=1, n=2)
    assert len(singular_basis(empty, 0)) == 0
    assert len(singular_basis(empty, 2)) == 0


def test_eta():
    eta = eta_map()
    assert is_continuous(eta)
    assert eta((1, 0)) == (0,) and eta((0, 1)) == (1,)
