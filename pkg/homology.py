"""Digital homology groups, generators, induced maps and theorem checks.

Ȟ_n = ker ∂_n / im ∂_{n+1}.  The group itself only needs two ranks and the
invariant factors of ∂_{n+1}.  Generators and induced maps need more: the
column transform of ∂_n gives a kernel basis, and a second Smith form of
∂_{n+1} written in that basis splits it into free and torsion parts.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import config
from chains import Chain, boundary_matrix, induced_chain_map
from core import DigitalImage, digital_interval
from errors import DimensionLimitError, InvalidInputError, ShapeMismatchError
from homotopy import Homotopy, homotopy_as_map, is_homotopy_valid, loops_equivalent
from integer_matrix import IntegerMatrix, SparseVector
from logger_setup import logger
from maps import (DigitalMap, DigitalPath, cartesian_product, compose, constant_loop,
                  identity_map, inclusion_map, is_continuous, path_as_map, path_product,
                  psi)
from simplicial import SingularSimplex, StandardSimplex, eta_map, singular_basis
from smith_form import smith_normal_form


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k with t_1 | t_2 | ... ."""
    betti: int
    torsion: Tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " (+) ".join(parts) if parts else "0"

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion


@dataclass(frozen=True)
class HomologyClassRep:
    """A cycle standing for its class z + B_n.  ``order`` is None for a
    free generator."""
    chain: Chain
    order: Optional[int] = None

    @property
    def is_free(self) -> bool:
        return self.order is None


def _check_dimension(n: int):
    if n < 0:
        raise InvalidInputError(f"homology dimension must be nonnegative, got {n}")
    if n + 1 > config.MAX_CHAIN_DIM:
        raise DimensionLimitError(
            f"H_{n} needs {n + 1}-simplexes; the configured maximum is {config.MAX_CHAIN_DIM}")


def homology(image: DigitalImage, n: int) -> HomologyGroup:
    _check_dimension(n)
    size = len(singular_basis(image, n))
    lower_rank = smith_normal_form(boundary_matrix(image, n)).rank if n > 0 else 0
    upper = smith_normal_form(boundary_matrix(image, n + 1))
    group = HomologyGroup(size - lower_rank - upper.rank, upper.torsion)
    logger.debug("H_%d of %d-point image: %s", n, len(image), group)
    return group


def groups_isomorphic(G: HomologyGroup, H: HomologyGroup) -> bool:
    return G == H


def format_homology_line(n: int, group: HomologyGroup) -> str:
    return f"H_{n} = {group}"


def homology_report(image: DigitalImage, max_dim: int) -> List[str]:
    return [format_homology_line(n, homology(image, n)) for n in range(max_dim + 1)]


@dataclass(frozen=True)
class _GeneratorBasis:
    image: DigitalImage
    n: int
    kernel_start: int
    col_inverse: IntegerMatrix
    # Row s gives the coordinate on generator s.
    quotient_transform: IntegerMatrix
    generators: Tuple[HomologyClassRep, ...]

    @property
    def orders(self) -> Tuple[Optional[int], ...]:
        return tuple(g.order for g in self.generators)

    def coordinates(self, cycle: SparseVector) -> List[int]:
        """Coordinates of a cycle on the generators, torsion ones reduced."""
        w = self.col_inverse.apply(cycle)
        local = {i - self.kernel_start: v for i, v in w.items() if i >= self.kernel_start}
        y = self.quotient_transform.apply(local)
        coords = []
        for slot, rep in enumerate(self.generators):
            value = y.get(slot, 0)
            coords.append(value if rep.order is None else value % rep.order)
        return coords


@lru_cache(maxsize=64)
def _generator_basis(image: DigitalImage, n: int) -> _GeneratorBasis:
    _check_dimension(n)
    lower = smith_normal_form(boundary_matrix(image, n), transforms=True)
    r = lower.rank
    kernel = lower.col_transform.column_slice(r)
    relations = (lower.col_inverse @ boundary_matrix(image, n + 1)).row_slice(r)
    quotient = smith_normal_form(relations, transforms=True)
    basis = kernel @ quotient.row_inverse

    # Smith basis order: unit factors, then torsion, then free columns.
    factors = quotient.invariant_factors
    units = sum(1 for d in factors if d == 1)
    free_slots = list(range(quotient.rank, basis.cols))
    torsion_slots = list(range(units, quotient.rank))
    generators = [HomologyClassRep(Chain.from_vector(image, n, basis.column(j)))
                  for j in free_slots]
    generators += [HomologyClassRep(Chain.from_vector(image, n, basis.column(j)), factors[j])
                   for j in torsion_slots]
    rows = quotient.row_transform.row_dicts()
    transform = IntegerMatrix.from_rows(
        quotient.row_transform.cols, [rows[j] for j in free_slots + torsion_slots])
    logger.debug("H_%d generators: %d free, %d torsion",
                 n, len(free_slots), len(torsion_slots))
    return _GeneratorBasis(image, n, r, lower.col_inverse, transform, tuple(generators))


def homology_generators(image: DigitalImage, n: int) -> List[HomologyClassRep]:
    return list(_generator_basis(image, n).generators)


def class_coordinates(chain: Chain) -> List[int]:
    """The class of a cycle written on the generators of its homology group."""
    if boundary_matrix(chain.image, chain.n).apply(chain.to_vector()):
        raise InvalidInputError("only cycles have homology classes")
    return _generator_basis(chain.image, chain.n).coordinates(chain.to_vector())


def _reduce_torsion_rows(matrix: IntegerMatrix, orders) -> IntegerMatrix:
    rows = matrix.row_dicts()
    for i, order in enumerate(orders):
        if order is not None:
            rows[i] = {j: v % order for j, v in rows[i].items()}
    return IntegerMatrix.from_rows(matrix.cols, rows)


def induced_homology_map(f: DigitalMap, n: int) -> IntegerMatrix:
    """f_* on the generator bases of Ȟ_n(X) and Ȟ_n(Y)."""
    chain_map = induced_chain_map(f, n)
    source = _generator_basis(f.domain, n)
    target = _generator_basis(f.codomain, n)
    columns = []
    for rep in source.generators:
        coords = target.coordinates(chain_map.apply(rep.chain.to_vector()))
        columns.append({i: v for i, v in enumerate(coords) if v})
    return IntegerMatrix(len(target.generators), len(source.generators), tuple(columns))


def verify_functoriality(f: DigitalMap, g: DigitalMap, n: int) -> bool:
    """(g ∘ f)_* = g_* f_* and id_* = 1."""
    gf = compose(g, f)
    target_orders = _generator_basis(g.codomain, n).orders
    product = _reduce_torsion_rows(induced_homology_map(g, n) @ induced_homology_map(f, n),
                                   target_orders)
    if induced_homology_map(gf, n) != product:
        logger.warning("Functoriality fails in dimension %d", n)
        return False
    for image in (f.domain, f.codomain, g.codomain):
        size = len(_generator_basis(image, n).generators)
        if induced_homology_map(identity_map(image), n) != IntegerMatrix.identity(size):
            logger.warning("Identity does not induce the identity in dimension %d", n)
            return False
    return True


@dataclass(frozen=True)
class PsiHomotopyReport:
    slices_recover_maps: bool
    hypothesis_holds: bool
    conclusion_holds: Optional[bool]

    @property
    def consistent(self) -> bool:
        """The theorem is only violated when the hypothesis holds and the
        conclusion does not."""
        return self.slices_recover_maps and (not self.hypothesis_holds or bool(self.conclusion_holds))


def verify_psi_homotopy_theorem(f: DigitalMap, g: DigitalMap, F: Homotopy,
                                n: int) -> PsiHomotopyReport:
    if not is_homotopy_valid(F, f, g):
        raise InvalidInputError("F is not a homotopy from f to g")
    X = f.domain
    interval = digital_interval(0, F.m)
    product = cartesian_product(X, interval)
    psi_0 = psi(X, interval, 0, product)
    psi_m = psi(X, interval, F.m, product)
    H = homotopy_as_map(F)
    slices = compose(H, psi_0) == f and compose(H, psi_m) == g

    hypothesis = induced_homology_map(psi_0, n) == induced_homology_map(psi_m, n)
    conclusion = None
    if hypothesis:
        conclusion = induced_homology_map(f, n) == induced_homology_map(g, n)
    else:
        logger.info("Slice maps differ on H_%d of the %d-point product; "
                    "conclusion not asserted", n, len(product))
    return PsiHomotopyReport(slices, hypothesis, conclusion)


def verify_inclusion_mono(A: DigitalImage, X: DigitalImage, n: int) -> bool:
    """The inclusion A -> X is injective on n-chains."""
    if not set(A.points) <= set(X.points):
        raise InvalidInputError("A is not a subset of X")
    if A.spec != X.spec:
        raise ShapeMismatchError("A and X must carry the same adjacency")
    inclusion = inclusion_map(A, X)
    if not is_continuous(inclusion):
        raise InvalidInputError("A does not carry the adjacency induced from X")
    matrix = induced_chain_map(inclusion, n)
    hit = set()
    for column in matrix.columns:
        if len(column) != 1:
            return False
        (row, value), = column.items()
        if value != 1 or row in hit:
            return False
        hit.add(row)
    return True


def hurewicz_h(loop: DigitalPath) -> Chain:
    """h(f) = f ∘ i ∘ η: the 1-simplex (f(0), f(1)).

    i is the inclusion [0,2]_Z -> [0,m]_Z, so the loop needs m >= 2.
    """
    if not loop.is_loop:
        raise InvalidInputError("h is defined on loops")
    if loop.m < 2:
        raise InvalidInputError(f"h needs a loop of length m >= 2, got m={loop.m}")
    if loop.m < 3:
        logger.warning("Loop of length %d is shorter than digital loop classes expect", loop.m)
    eta = eta_map()
    inclusion = inclusion_map(eta.codomain, digital_interval(0, loop.m))
    sigma = compose(path_as_map(loop), compose(inclusion, eta))
    simplex = StandardSimplex(1)
    return Chain.from_simplex(SingularSimplex(
        loop.target, (sigma(simplex.vertex(0)), sigma(simplex.vertex(1)))))


@dataclass(frozen=True)
class HurewiczReport:
    product_equals_g: bool
    loops_equivalent: bool
    images_differ: bool

    @property
    def all_hold(self) -> bool:
        return self.product_equals_g and self.loops_equivalent and self.images_differ


def hurewicz_counterexample() -> HurewiczReport:
    """Two equivalent loops on the 4-adjacency square with different h."""
    X = DigitalImage.from_points([(0, 0), (1, 0), (1, 1), (0, 1)], u=1)
    x0, x1, x2, x3 = (0, 0), (1, 0), (1, 1), (0, 1)
    f = DigitalPath(X, (x0, x1, x2, x3, x0))
    g = DigitalPath(X, (x0, x0, x1, x2, x3, x0))
    product = path_product(constant_loop(X, x0), f)
    report = HurewiczReport(
        product_equals_g=product.values == g.values,
        loops_equivalent=loops_equivalent(f, g, 5),
        images_differ=hurewicz_h(f) != hurewicz_h(g))
    logger.info("Hurewicz counterexample: %s", report)
    return report
