import itertools
import random

import networkx as nx
import pytest

from core import DigitalImage, digital_interval, is_connected
from errors import InvalidInputError, ShapeMismatchError
from maps import (DigitalMap, DigitalPath, cartesian_product, compose, constant_loop,
                  constant_map, identity_map, inclusion_map, is_continuous,
                  is_continuous_by_subsets, is_trivial_extension,
                  is_trivial_extension_by_decomposition, path_as_map, path_product,
                  projection_map, psi, translation_map, trivial_extension_witness,
                  trivial_extensions, verify_homeomorphism)
from validation import random_continuous_map, random_corpus


def all_maps(domain, codomain):
    for values in itertools.product(codomain.points, repeat=len(domain)):
        yield DigitalMap(domain, codomain, values)


def loops(image, base, max_m):
    """Every loop at ``base`` with 1 <= m <= max_m."""
    found = []

    def extend(values, m):
        if len(values) == m + 1:
            if values[-1] == base:
                found.append(DigitalPath(image, tuple(values)))
            return
        last = values[-1]
        for p in (last,) + tuple(sorted(image.graph.adj[last])):
            extend(values + [p], m)

    for m in range(1, max_m + 1):
        extend([base], m)
    return found


def random_walk(rng, image, start, m):
    values = [start]
    for _ in range(m):
        last = values[-1]
        values.append(rng.choice((last,) + tuple(sorted(image.graph.adj[last]))))
    return DigitalPath(image, tuple(values))


def test_map_validation(square4, ring8):
    with pytest.raises(InvalidInputError):
        DigitalMap(square4, square4, ((0, 0),))
    with pytest.raises(InvalidInputError):
        DigitalMap(square4, square4, ((0, 0), (0, 0), (0, 0), (7, 7)))
    with pytest.raises(InvalidInputError):
        DigitalMap.from_table(square4, ring8, {(0, 0): (0, 0)})
    f = identity_map(square4)
    with pytest.raises(InvalidInputError):
        f((3, 3))


def test_identity_and_constant_are_continuous(ring8, square4):
    assert is_continuous(identity_map(ring8))
    assert is_continuous(constant_map(ring8, square4, (1, 1)))


def test_discontinuous_map(square4):
    x0, x1, x2, x3 = (0, 0), (1, 0), (1, 1), (0, 1)
    swap = DigitalMap.from_table(square4, square4, {x0: x0, x1: x2, x2: x1, x3: x3})
    # (0,0) ~ (1,0) is sent to (0,0), (1,1), which are not 4-adjacent.
    assert not is_continuous(swap)


def test_continuity_forms_agree(square4, square4_u2):
    two = DigitalImage.from_points([(0,), (1,), (3,)], u=1)
    for domain, codomain in [(two, square4), (square4, two), (square4_u2, square4)]:
        for f in all_maps(domain, codomain):
            assert is_continuous(f) == is_continuous_by_subsets(f)


def test_subset_continuity_is_capped(ring8):
    with pytest.raises(InvalidInputError):
        is_continuous_by_subsets(identity_map(ring8), limit=4)


def test_compose(square4, ring8):
    f = constant_map(square4, ring8, (2, 2))
    g = identity_map(ring8)
    assert compose(g, f) == f
    with pytest.raises(ShapeMismatchError):
        compose(f, f)


def test_composites_of_continuous_maps_are_continuous():
    rng = random.Random(21)
    images = random_corpus(seed=21, size=12, max_points=6)
    for _ in range(100):
        X, Y, Z = (rng.choice(images) for _ in range(3))
        f = random_continuous_map(rng, X, Y)
        g = random_continuous_map(rng, Y, Z)
        assert is_continuous(compose(g, f))


def test_translation_is_a_homeomorphism(square4):
    forward = translation_map(square4, (3, 4))
    backward = translation_map(forward.codomain, (-3, -4))
    assert verify_homeomorphism(forward, backward)


def test_non_bijection_is_not_a_homeomorphism(square4):
    f = constant_map(square4, square4, (0, 0))
    assert not verify_homeomorphism(f, f)


def test_eight_to_four_adjacency_is_not_a_homeomorphism(square4, square4_u2):
    f = DigitalMap(square4_u2, square4, square4_u2.points)
    g = DigitalMap(square4, square4_u2, square4.points)
    assert is_continuous(g)
    assert not verify_homeomorphism(f, g)


def test_path_validation(square4):
    with pytest.raises(InvalidInputError):
        DigitalPath(square4, ((0, 0),))
    with pytest.raises(InvalidInputError):
        DigitalPath(square4, ((0, 0), (1, 1)))
    path = DigitalPath(square4, ((0, 0), (0, 0), (1, 0)))
    assert path.m == 2
    assert not path.is_loop
    assert is_continuous(path_as_map(path))


def test_path_product(square4):
    f = DigitalPath(square4, ((0, 0), (1, 0)))
    g = DigitalPath(square4, ((1, 0), (1, 1), (0, 1)))
    product = path_product(f, g)
    assert product.values == ((0, 0), (1, 0), (1, 1), (0, 1))
    assert product.m == f.m + g.m
    with pytest.raises(InvalidInputError):
        path_product(g, f)


def test_path_product_is_associative(ring8, square4_u2):
    rng = random.Random(4)
    for image in (ring8, square4_u2):
        for _ in range(25):
            f = random_walk(rng, image, rng.choice(image.points), rng.randint(1, 4))
            g = random_walk(rng, image, f.values[-1], rng.randint(1, 4))
            h = random_walk(rng, image, g.values[-1], rng.randint(1, 4))
            left = path_product(path_product(f, g), h)
            right = path_product(f, path_product(g, h))
            assert left.values == right.values
            assert left.m == f.m + g.m + h.m
            assert left.values[0] == f.values[0] and left.values[-1] == h.values[-1]
            assert is_continuous(path_as_map(left))


def test_constant_loop(square4):
    e = constant_loop(square4, (1, 1), length=3)
    assert e.is_loop and e.is_trivial and e.m == 3


def test_trivial_extension_witness(square4):
    x0, x1, x2, x3 = (0, 0), (1, 0), (1, 1), (0, 1)
    f = DigitalPath(square4, (x0, x1, x2, x3, x0))
    g = DigitalPath(square4, (x0, x0, x1, x2, x2, x2, x3, x0))
    phi = trivial_extension_witness(f, g)
    assert phi == (0, 0, 1, 2, 2, 2, 3, 4)
    assert all(g.values[i] == f.values[phi[i]] for i in range(len(phi)))
    assert is_trivial_extension(f, g)
    assert not is_trivial_extension(g, f)
    backwards = DigitalPath(square4, (x0, x3, x2, x1, x0))
    assert not is_trivial_extension(f, backwards)


def test_trivial_extension_needs_loops_at_one_base(square4):
    f = DigitalPath(square4, ((0, 0), (1, 0)))
    with pytest.raises(InvalidInputError):
        is_trivial_extension(f, f)
    g = constant_loop(square4, (1, 1))
    with pytest.raises(InvalidInputError):
        is_trivial_extension(constant_loop(square4, (0, 0)), g)


def test_trivial_extension_conventions_agree_with_reindexing(square4):
    base = (0, 0)
    short = loops(square4, base, 3)
    long = loops(square4, base, 5)
    for f in short:
        for g in long:
            expected = trivial_extension_witness(f, g) is not None
            assert is_trivial_extension_by_decomposition(f, g) == expected
            if not f.is_trivial:
                assert is_trivial_extension_by_decomposition(
                    f, g, allow_constant_pieces=False) == expected


def test_trivial_extensions_enumeration(square4):
    f = DigitalPath(square4, ((0, 0), (1, 0), (0, 0)))
    extensions = trivial_extensions(f, 3)
    assert [e.values for e in extensions] == [
        ((0, 0), (0, 0), (1, 0), (0, 0)),
        ((0, 0), (1, 0), (0, 0), (0, 0)),
        ((0, 0), (1, 0), (1, 0), (0, 0)),
    ]
    assert all(is_trivial_extension(f, e) for e in extensions)
    assert trivial_extensions(f, 1) == []
    assert [e.values for e in trivial_extensions(f, 2)] == [f.values]


def test_cartesian_product_with_interval(two_points):
    interval = digital_interval(0, 1)
    product = cartesian_product(two_points, interval)
    assert product.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert product.is_explicit
    assert product.edge_count == 4
    assert not product.are_adjacent((0, 0), (1, 1))
    assert nx.is_isomorphic(product.graph, nx.cycle_graph(4))


def test_cartesian_product_differs_from_k_adjacency(square4):
    product = cartesian_product(square4, digital_interval(0, 1))
    assert nx.is_isomorphic(product.graph, nx.hypercube_graph(3))
    assert is_connected(product)


def test_psi_and_projection(square4):
    interval = digital_interval(0, 2)
    product = cartesian_product(square4, interval)
    bottom = psi(square4, interval, 0, product)
    top = psi(square4, interval, 2)
    assert bottom((1, 1)) == (1, 1, 0)
    assert top((1, 1)) == (1, 1, 2)
    assert is_continuous(bottom) and is_continuous(top)
    project = projection_map(product, square4)
    assert is_continuous(project)
    assert compose(project, bottom) == identity_map(square4)
    with pytest.raises(InvalidInputError):
        psi(square4, interval, 1)


def test_inclusion(square4, square4_u2):
    edge = DigitalImage.from_points([(0, 0), (1, 0)], u=1)
    assert is_continuous(inclusion_map(edge, square4))
    assert not is_continuous(DigitalMap(square4_u2, square4, square4_u2.points))
