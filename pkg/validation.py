import random

import pandas as pd
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from chains import boundary_matrix, verify_chain_commutes, verify_dd_zero
from core import DigitalImage, connected_components, lattice_point, subimage
from homology import (HomologyGroup, groups_isomorphic, homology, homology_generators,
                      induced_homology_map, verify_functoriality, verify_inclusion_mono)
from logger_setup import logger
from maps import DigitalMap, translation_map, verify_homeomorphism
from simplicial import singular_basis, verify_face_identity
from smith_form import smith_normal_form


def random_image(rng, max_points=6):
    n = rng.randint(1, 3)
    u = rng.randint(1, n)
    box = [tuple(p) for p in _box(n, 3 if n > 1 else 7)]
    count = rng.randint(1, min(max_points, len(box)))
    return DigitalImage.from_points(rng.sample(box, count), u)


def _box(n, side):
    if n == 0:
        yield ()
        return
    for rest in _box(n - 1, side):
        for c in range(side):
            yield rest + (c,)


def random_corpus(seed, size=25, max_points=6):
    rng = random.Random(seed)
    return [random_image(rng, max_points) for _ in range(size)]


def random_continuous_map(rng, domain, codomain):
    """Randomized backtracking; the constant maps guarantee success."""
    closed = codomain.closed_neighborhoods
    index = domain.index
    earlier = [[index[q] for q in domain.graph.adj[p] if index[q] < i]
               for i, p in enumerate(domain.points)]
    chosen = []

    def extend(i):
        if i == len(domain):
            return True
        candidates = set(range(len(codomain)))
        for j in earlier[i]:
            candidates &= closed[chosen[j]]
        order = sorted(candidates)
        rng.shuffle(order)
        for c in order:
            chosen.append(c)
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    extend(0)
    return DigitalMap(domain, codomain, tuple(codomain.points[c] for c in chosen))


def oracle_homology(image, n):
    """Betti number from rational ranks, torsion from sympy's invariant factors."""
    def rank_and_factors(matrix):
        if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
            return 0, ()
        dense = Matrix(matrix.to_dense())
        factors = tuple(abs(int(f)) for f in invariant_factors(dense, domain=ZZ) if f != 0)
        return dense.rank(), factors

    lower_rank = rank_and_factors(boundary_matrix(image, n))[0] if n > 0 else 0
    upper_rank, factors = rank_and_factors(boundary_matrix(image, n + 1))
    betti = len(singular_basis(image, n)) - lower_rank - upper_rank
    return HomologyGroup(betti, tuple(sorted(f for f in factors if f > 1)))


def compare_boundaries(corpus, max_dim=3):
    for image in corpus:
        for n in range(1, max_dim + 1):
            if not verify_dd_zero(image, n):
                logger.warning("Boundary of boundary is nonzero: n=%d, points=%s",
                               n, image.points)
                return False
    logger.info("Boundary of boundary vanishes on the corpus.")
    return True


def compare_face_identities(max_n=4):
    for n in range(1, max_n + 1):
        if not verify_face_identity(n):
            logger.warning("Face identity fails in dimension %d", n)
            return False
    logger.info("Face identities hold up to dimension %d.", max_n)
    return True


def compare_components(corpus):
    for image in corpus:
        group = homology(image, 0)
        components = len(connected_components(image))
        if group.betti != components or group.torsion:
            logger.warning("H_0 mismatch: %s vs %d components for %s",
                           group, components, image.points)
            return False
    logger.info("H_0 counts components on the corpus.")
    return True


def compare_oracle(corpus, max_dim=2):
    for image in corpus:
        for n in range(max_dim + 1):
            computed, expected = homology(image, n), oracle_homology(image, n)
            if computed != expected:
                logger.warning("H_%d mismatch for %s: Smith form %s, oracle %s",
                               n, image.points, computed, expected)
                return False
    logger.info("Smith-form homology agrees with the rank oracle.")
    return True


def compare_chain_maps(corpus, rng, max_dim=2):
    for domain, codomain in zip(corpus, corpus[1:]):
        f = random_continuous_map(rng, domain, codomain)
        for n in range(1, max_dim + 1):
            if not verify_chain_commutes(f, n):
                logger.warning("Chain map does not commute with the boundary: n=%d", n)
                return False
    logger.info("Induced chain maps commute with the boundary.")
    return True


def compare_functoriality(corpus, rng, max_dim=1):
    for X, Y, Z in zip(corpus, corpus[1:], corpus[2:]):
        f = random_continuous_map(rng, X, Y)
        g = random_continuous_map(rng, Y, Z)
        for n in range(max_dim + 1):
            if not verify_functoriality(f, g, n):
                return False
    logger.info("Induced homology maps are functorial on the corpus.")
    return True


def compare_translations(corpus, rng, max_dim=1):
    for image in corpus:
        vector = lattice_point(rng.randint(-3, 3) for _ in range(image.spec.n))
        forward = translation_map(image, vector)
        backward = translation_map(forward.codomain, tuple(-c for c in vector))
        if not verify_homeomorphism(forward, backward):
            logger.warning("Translation by %s is not a homeomorphism", vector)
            return False
        for n in range(max_dim + 1):
            if not groups_isomorphic(homology(image, n), homology(forward.codomain, n)):
                logger.warning("Translation changed H_%d of %s", n, image.points)
                return False
            induced = smith_normal_form(induced_homology_map(forward, n))
            generators = len(homology_generators(image, n))
            if induced.rank != generators or any(d != 1 for d in induced.invariant_factors):
                logger.warning("Translation does not induce an isomorphism on H_%d", n)
                return False
    logger.info("Homology is invariant under translation.")
    return True


def compare_dimension_axiom(max_ambient=3, max_dim=3):
    for n in range(1, max_ambient + 1):
        for u in range(1, n + 1):
            point = DigitalImage.from_points([(0,) * n], u)
            for k in range(max_dim + 1):
                expected = HomologyGroup(1 if k == 0 else 0)
                if homology(point, k) != expected:
                    logger.warning("Dimension axiom fails: Z^%d, u=%d, H_%d = %s",
                                   n, u, k, homology(point, k))
                    return False
    logger.info("Dimension axiom holds for one-point images.")
    return True


def compare_inclusions(corpus, rng, max_dim=2):
    for image in corpus:
        subset = rng.sample(image.points, rng.randint(1, len(image)))
        for n in range(max_dim + 1):
            if not verify_inclusion_mono(subimage(image, subset), image, n):
                logger.warning("Inclusion is not injective on %d-chains", n)
                return False
    logger.info("Inclusions are injective on chains.")
    return True


def run_theorem_suite(seed=7, size=25, max_points=6):
    """Every check over one seeded corpus, as a table with one row per check."""
    corpus = random_corpus(seed, size, max_points)
    rng = random.Random(seed)
    checks = [
        ('boundary_squared_zero', lambda: compare_boundaries(corpus)),
        ('face_identity', compare_face_identities),
        ('chain_commutation', lambda: compare_chain_maps(corpus, rng)),
        ('functoriality', lambda: compare_functoriality(corpus, rng)),
        ('translation_invariance', lambda: compare_translations(corpus, rng)),
        ('dimension_axiom', compare_dimension_axiom),
        ('inclusion_mono', lambda: compare_inclusions(corpus, rng)),
        ('h0_components', lambda: compare_components(corpus)),
        ('smith_vs_oracle', lambda: compare_oracle(corpus)),
    ]
    rows = []
    for name, check in checks:
        passed = check()
        rows.append({'check': name, 'passed': bool(passed)})
        if not passed:
            logger.warning("Check '%s' failed.", name)
    return pd.DataFrame(rows, columns=['check', 'passed'])
