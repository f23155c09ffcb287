"""Boundary combinatorics of the group compactification at desk scale.

A subset I of the simple-root indices {1..l} picks a standard parabolic
pair (p_I, p_I^-) with shared Levi l_I.  The boundary orbit indexed by I
carries at its basepoint the fiber algebra: pairs in p_I x p_I^- whose
Levi components agree.  Translating that subalgebra by a pair of group
elements represents an arbitrary point of the orbit, and two points are
equal exactly when the translated subalgebras coincide.  All subspaces
are kept in canonical echelon form, so equality is literal.

Simple-root indices are 1-based in every public signature, matching the
orbit tables the command line prints.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .errors import ConstructionError, DomainError
from .exactlin import Mat, Subspace, Vector, kernel
from .liealg import Element, GroupElement, LieAlgebra, conjugate

__all__ = [
    "ParabolicData",
    "build_parabolic",
    "fiber_algebra",
    "stabilizer_algebra",
    "orbit_dim",
    "closure_contains",
    "OrbitRow",
    "OrbitPoset",
    "build_orbit_poset",
    "BoundaryPoint",
    "make_boundary_point",
    "translate_contains",
    "torus_fixed_fiber_points",
    "all_subsets",
]


def _check_subset(rank: int, I) -> frozenset[int]:
    out = frozenset(I)
    for i in out:
        if not isinstance(i, int) or not (1 <= i <= rank):
            raise DomainError(f"simple-root subset must lie in 1..{rank}, got {sorted(out)}")
    return out


def all_subsets(rank: int) -> list[frozenset[int]]:
    """Every subset of {1..rank}, smallest first, lexicographic within a size."""
    out = []
    for size in range(rank + 1):
        for combo in combinations(range(1, rank + 1), size):
            out.append(frozenset(combo))
    return out


class ParabolicData:
    """The standard parabolic pair attached to a set of simple roots.

    p_I is spanned by the Cartan, every positive root space, and the
    negative root spaces whose roots are supported on I.  l_I = p_I cap
    p_I_minus is the Levi, u_I and u_I_minus the nilradicals, z_l_I the
    center of the Levi, and derived_p_I = [p_I, p_I] the complement of
    z_l_I inside p_I used by the leaf projection.
    """

    __slots__ = (
        "algebra",
        "I",
        "p_I",
        "p_I_minus",
        "l_I",
        "u_I",
        "u_I_minus",
        "z_l_I",
        "derived_p_I",
        "_fiber",
        "_stabilizer",
        "_leaf_projector",
    )

    def __init__(self, algebra: LieAlgebra, I: frozenset[int]):
        self.algebra = algebra
        self.I = _check_subset(algebra.rank, I)
        n = algebra.dim
        rs = algebra.root_system
        zero_based = {i - 1 for i in self.I}

        def in_levi(alpha) -> bool:
            return all(m == 0 for j, m in enumerate(alpha) if j not in zero_based)

        levi_idx: list[int] = [algebra.idx_h(i) for i in range(algebra.rank)]
        u_idx: list[int] = []
        u_minus_idx: list[int] = []
        for k, alpha in enumerate(rs.positive_roots):
            if in_levi(alpha):
                levi_idx.append(algebra.idx_e(k))
                levi_idx.append(algebra.idx_f(k))
            else:
                u_idx.append(algebra.idx_e(k))
                u_minus_idx.append(algebra.idx_f(k))

        def unit_span(indices: list[int]) -> Subspace:
            return Subspace.from_vectors(
                n, [tuple(1 if j == idx else 0 for j in range(n)) for idx in indices]
            )

        self.l_I = unit_span(levi_idx)
        self.u_I = unit_span(u_idx)
        self.u_I_minus = unit_span(u_minus_idx)
        self.p_I = self.l_I.sum(self.u_I)
        self.p_I_minus = self.l_I.sum(self.u_I_minus)
        if self.p_I.dim != self.l_I.dim + self.u_I.dim:
            raise ConstructionError("parabolic is not the direct sum of Levi and nilradical")
        if self.p_I.intersect(self.p_I_minus) != self.l_I:
            raise ConstructionError("opposite parabolics do not meet in the Levi")

        levi_elems = [algebra.element(row) for row in self.l_I.basis.row_list()]
        self.z_l_I = self._levi_center(levi_elems)
        if self.z_l_I.dim != algebra.rank - len(self.I):
            raise ConstructionError("Levi center has the wrong dimension")

        self.derived_p_I = self._derived_subalgebra(
            [algebra.element(row) for row in self.p_I.basis.row_list()]
        )
        if (
            self.derived_p_I.sum(self.z_l_I) != self.p_I
            or self.derived_p_I.dim + self.z_l_I.dim != self.p_I.dim
        ):
            raise ConstructionError("derived algebra and Levi center do not split the parabolic")

        self._fiber: Subspace | None = None
        self._stabilizer: Subspace | None = None
        self._leaf_projector = None

    def _levi_center(self, levi_elems: list[Element]) -> Subspace:
        """Solutions x in l_I of [x, b] = 0 for every Levi basis vector b."""
        L = self.algebra
        n = L.dim
        m = len(levi_elems)
        rows: list[Vector] = []
        for b in levi_elems:
            cols = [L.bracket(c, b).coords for c in levi_elems]
            for r in range(n):
                rows.append(tuple(cols[j][r] for j in range(m)))
        coeff_space = kernel(Mat.from_rows(rows, cols=m))
        vectors = []
        for t in coeff_space.basis.row_list():
            x = L.zero()
            for tj, c in zip(t, levi_elems):
                x = x + c.scale(tj)
            vectors.append(x.coords)
        return Subspace.from_vectors(n, vectors)

    def _derived_subalgebra(self, elems: list[Element]) -> Subspace:
        L = self.algebra
        vectors = []
        for a, b in combinations(elems, 2):
            w = L.bracket(a, b)
            if not all(c == 0 for c in w.coords):
                vectors.append(w.coords)
        return Subspace.from_vectors(L.dim, vectors)

    def __repr__(self) -> str:
        return f"ParabolicData({self.algebra.descriptor}, I={sorted(self.I)})"


@lru_cache(maxsize=None)
def _build_parabolic_cached(algebra: LieAlgebra, I: frozenset[int]) -> ParabolicData:
    return ParabolicData(algebra, I)


def build_parabolic(algebra: LieAlgebra, I) -> ParabolicData:
    """Parabolic data for the subset I of {1..rank}, built once per pair."""
    return _build_parabolic_cached(algebra, _check_subset(algebra.rank, I))


def _pair_vector(left: Vector, right: Vector) -> Vector:
    return tuple(left) + tuple(right)


def fiber_algebra(p: ParabolicData) -> Subspace:
    """Pairs (u + x, v + x) with u in u_I, v in u_I_minus, x in l_I.

    A subalgebra of g x g of dimension dim g: the fiber of the boundary
    family at the basepoint of orbit I.
    """
    if p._fiber is not None:
        return p._fiber
    n = p.algebra.dim
    zero = (0,) * n
    vectors = [_pair_vector(row, zero) for row in p.u_I.basis.row_list()]
    vectors += [_pair_vector(zero, row) for row in p.u_I_minus.basis.row_list()]
    vectors += [_pair_vector(row, row) for row in p.l_I.basis.row_list()]
    fiber = Subspace.from_vectors(2 * n, vectors)
    if fiber.dim != n:
        raise ConstructionError("fiber algebra has the wrong dimension")
    p._fiber = fiber
    return fiber


def stabilizer_algebra(p: ParabolicData) -> Subspace:
    """Pairs (u + x, v + y) with x - y central in the Levi.

    Contains the fiber algebra with codimension zero and exceeds it by
    the central shifts (z, 0), z in z(l_I).
    """
    if p._stabilizer is not None:
        return p._stabilizer
    n = p.algebra.dim
    zero = (0,) * n
    extra = [_pair_vector(row, zero) for row in p.z_l_I.basis.row_list()]
    stab = fiber_algebra(p).sum(Subspace.from_vectors(2 * n, extra))
    if stab.dim != n + p.algebra.rank - len(p.I):
        raise ConstructionError("stabilizer algebra has the wrong dimension")
    p._stabilizer = stab
    return stab


def orbit_dim(p: ParabolicData) -> int:
    """2 codim(p_I) + dim of the semisimple part of the Levi."""
    n = p.algebra.dim
    return 2 * (n - p.p_I.dim) + (p.l_I.dim - p.z_l_I.dim)


def closure_contains(I, J) -> bool:
    """Does the closure of the orbit at I contain the orbit at J?"""
    return frozenset(J) <= frozenset(I)


class OrbitRow:
    __slots__ = ("I", "dim", "stabilizer_dim", "is_divisor")

    def __init__(self, I: frozenset[int], dim: int, stabilizer_dim: int, is_divisor: bool):
        self.I = I
        self.dim = dim
        self.stabilizer_dim = stabilizer_dim
        self.is_divisor = is_divisor

    def __repr__(self) -> str:
        return f"OrbitRow(I={sorted(self.I)}, dim={self.dim})"


class OrbitPoset:
    """All 2^rank orbits with dimensions and the closure order."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: LieAlgebra):
        self.algebra = algebra
        l = algebra.rank
        self.rows = []
        for I in all_subsets(l):
            p = build_parabolic(algebra, I)
            self.rows.append(
                OrbitRow(I, orbit_dim(p), stabilizer_algebra(p).dim, len(I) == l - 1)
            )
        full = frozenset(range(1, l + 1))
        if self.row(full).dim != algebra.dim:
            raise ConstructionError("open orbit does not have the dimension of the group")
        if sum(1 for r in self.rows if r.is_divisor) != l:
            raise ConstructionError("boundary divisor count is not the rank")

    def row(self, I) -> OrbitRow:
        key = frozenset(I)
        for r in self.rows:
            if r.I == key:
                return r
        raise DomainError(f"no orbit indexed by {sorted(key)}")

    def divisor_components(self) -> list[OrbitRow]:
        return [r for r in self.rows if r.is_divisor]


@lru_cache(maxsize=None)
def build_orbit_poset(algebra: LieAlgebra) -> OrbitPoset:
    return OrbitPoset(algebra)


class BoundaryPoint:
    """A point of the orbit at I, carried as a translated fiber algebra.

    Two points are the same exactly when their realized fibers agree as
    subspaces; the translating pair is kept only as a witness.
    """

    __slots__ = ("algebra", "I", "g1", "g2", "realized_fiber")

    def __init__(
        self,
        algebra: LieAlgebra,
        I: frozenset[int],
        g1: GroupElement,
        g2: GroupElement,
        realized_fiber: Subspace,
    ):
        self.algebra = algebra
        self.I = I
        self.g1 = g1
        self.g2 = g2
        self.realized_fiber = realized_fiber

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return self.realized_fiber == other.realized_fiber

    def __hash__(self) -> int:
        return hash(self.realized_fiber)

    def __repr__(self) -> str:
        return f"BoundaryPoint({self.algebra.descriptor}, I={sorted(self.I)})"


def make_boundary_point(p: ParabolicData, g1: GroupElement, g2: GroupElement) -> BoundaryPoint:
    """Translate the basepoint fiber of orbit I by (g1, g2)."""
    L = p.algebra
    n = L.dim
    vectors = []
    for row in fiber_algebra(p).basis.row_list():
        left = conjugate(g1, L.element(row[:n]))
        right = conjugate(g2, L.element(row[n:]))
        vectors.append(_pair_vector(left.coords, right.coords))
    realized = Subspace.from_vectors(2 * n, vectors)
    if realized.dim != n:
        raise ConstructionError("translated fiber lost dimension")
    return BoundaryPoint(L, p.I, g1, g2, realized)


def translate_contains(point: BoundaryPoint, pair: tuple[Element, Element]) -> bool:
    """Is the pair of algebra elements inside the point's realized fiber?"""
    xi1, xi2 = pair
    point.algebra._check_same(xi1.algebra)
    point.algebra._check_same(xi2.algebra)
    return point.realized_fiber.contains(_pair_vector(xi1.coords, xi2.coords))


def torus_fixed_fiber_points(xi: Element, diagonalizer: GroupElement) -> list[BoundaryPoint]:
    """Boundary points fixed by the maximal torus through xi.

    xi must be regular and carried into the Cartan subalgebra by the
    inverse of `diagonalizer`.  The enumeration walks every boundary
    orbit index (proper subsets of {1..rank}) and every pair of Weyl
    representatives, keeps the points whose realized fiber contains
    (xi, xi), and drops duplicates by fiber equality.
    """
    L = xi.algebra
    eta = conjugate(diagonalizer.inverse(), xi)
    if not L.cartan.contains(eta.coords):
        raise DomainError("diagonalizer does not carry the element into the Cartan")
    if not L.is_regular(eta):
        raise DomainError("torus-fixed point search needs a regular semisimple element")
    reps = L.weyl_representatives()
    pair = (xi, xi)
    found: list[BoundaryPoint] = []
    for I in all_subsets(L.rank):
        if len(I) == L.rank:
            continue
        p = build_parabolic(L, I)
        for w1, w2 in product(reps, reps):
            point = make_boundary_point(p, diagonalizer * w1, diagonalizer * w2)
            if translate_contains(point, pair) and all(point != q for q in found):
                found.append(point)
    return found
