"""Exact rational linear algebra: echelon forms, subspaces, projections.

Every expected value here is either computed by hand or forced by an
algebraic identity (rank-nullity, Grassmann, projector idempotence), so
the checks are exact with zero tolerance.
"""

from fractions import Fraction

import pytest

from ucz.errors import DecompositionError, DimensionError
from ucz.exactlin import (
    Mat,
    Projector,
    Subspace,
    kernel,
    project_along,
    rank,
    rref,
    solve,
    vec,
)
from ucz.rng import SplitMix64, stream


def random_mat(gen: SplitMix64, rows: int, cols: int) -> Mat:
    return Mat.from_rows(
        [tuple(gen.fraction() for _ in range(cols)) for _ in range(rows)], cols=cols
    )


def test_exact_field_roundtrip():
    gen = stream(7, "field")
    for _ in range(1000):
        a = gen.fraction()
        b = gen.nonzero_fraction()
        assert (a * b) / b == a


def test_rref_permutation():
    m = Mat.from_rows([(0, 1), (1, 0)], cols=2)
    assert rref(m) == Mat.identity(2)


def test_rref_dependent_rows():
    m = Mat.from_rows([(2, 4), (1, 2)], cols=2)
    assert rref(m) == Mat.from_rows([(1, 2), (0, 0)], cols=2)


def test_rref_idempotent_on_seeded_matrices():
    gen = stream(11, "rref")
    for _ in range(10):
        m = random_mat(gen, 5, 5)
        r = rref(m)
        assert rref(r) == r


def test_rank_nullity_on_seeded_matrices():
    gen = stream(13, "ranknullity")
    for _ in range(20):
        rows = gen.randint(1, 6)
        cols = gen.randint(1, 6)
        m = random_mat(gen, rows, cols)
        assert rank(m) + kernel(m).dim == cols


def test_kernel_identity_is_zero():
    assert kernel(Mat.identity(3)).dim == 0


def test_kernel_zero_map_is_everything():
    m = Mat.from_rows([(0, 0, 0), (0, 0, 0)], cols=3)
    assert kernel(m) == Subspace.full(3)


def test_kernel_single_relation():
    ker = kernel(Mat.from_rows([(1, 1, 0)], cols=3))
    assert ker.dim == 2
    assert ker.contains((1, -1, 0))
    assert ker.contains((0, 0, 1))
    assert not ker.contains((1, 1, 0))


def test_subspace_equality_is_canonical():
    a = Subspace.from_vectors(3, [(1, 1, 0), (0, 0, 2)])
    b = Subspace.from_vectors(3, [(0, 0, 1), (3, 3, 5), (1, 1, 1)])
    assert a == b
    assert a.basis == b.basis


def test_subspace_contains_space():
    big = Subspace.from_vectors(3, [(1, 0, 0), (0, 1, 0)])
    small = Subspace.from_vectors(3, [(1, 1, 0)])
    assert big.contains_space(small)
    assert not small.contains_space(big)


def test_subspace_coefficients_reconstruct():
    s = Subspace.from_vectors(4, [(1, 2, 0, 0), (0, 0, 1, 3)])
    v = (2, 4, -1, -3)
    coeffs = s.coefficients(v)
    rebuilt = [Fraction(0)] * 4
    for c, row in zip(coeffs, s.basis.row_list()):
        for j, r in enumerate(row):
            rebuilt[j] += c * r
    assert tuple(rebuilt) == vec(v)


def test_subspace_coefficients_outside_raises():
    s = Subspace.from_vectors(3, [(1, 0, 0)])
    with pytest.raises(DecompositionError):
        s.coefficients((0, 1, 0))


def test_intersect_and_sum_of_equal_spaces():
    s = Subspace.from_vectors(3, [(1, 2, 3), (0, 1, 1)])
    assert s.intersect(s) == s
    assert s.sum(s) == s


def test_intersect_of_complementary_lines():
    a = Subspace.from_vectors(2, [(1, 0)])
    b = Subspace.from_vectors(2, [(0, 1)])
    assert a.intersect(b).dim == 0
    assert a.sum(b) == Subspace.full(2)


def test_grassmann_identity_in_six_space():
    gen = stream(17, "grassmann")
    for _ in range(15):
        a = Subspace.from_vectors(
            6, [tuple(gen.fraction() for _ in range(6)) for _ in range(gen.randint(1, 4))]
        )
        b = Subspace.from_vectors(
            6, [tuple(gen.fraction() for _ in range(6)) for _ in range(gen.randint(1, 4))]
        )
        assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_ambient_mismatch_raises():
    a = Subspace.from_vectors(2, [(1, 0)])
    b = Subspace.from_vectors(3, [(1, 0, 0)])
    with pytest.raises(DimensionError):
        a.sum(b)
    with pytest.raises(DimensionError):
        a.intersect(b)
    with pytest.raises(DimensionError):
        a.contains((1, 0, 0))


def test_project_along_coordinate_split():
    onto = Subspace.from_vectors(4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    along = Subspace.from_vectors(4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert project_along((1, 2, 3, 4), onto, along) == vec((1, 2, 0, 0))


def test_project_along_fixes_onto_and_kills_along():
    gen = stream(19, "projector")
    onto = Subspace.from_vectors(5, [(1, 1, 0, 0, 0), (0, 0, 1, 0, 1)])
    along = Subspace.from_vectors(5, [(0, 1, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)])
    for _ in range(10):
        c1, c2 = gen.fraction(), gen.fraction()
        v_on = tuple(c1 * a + c2 * b for a, b in zip((1, 1, 0, 0, 0), (0, 0, 1, 0, 1)))
        assert project_along(v_on, onto, along) == vec(v_on)
        v_off = tuple(
            c1 * a + c2 * b for a, b in zip((0, 1, 0, 0, 0), (0, 0, 0, 1, 0))
        )
        assert project_along(v_off, onto, along) == vec((0,) * 5)


def test_project_along_needs_complement():
    onto = Subspace.from_vectors(3, [(1, 0, 0)])
    along = Subspace.from_vectors(3, [(0, 1, 0)])
    with pytest.raises(DecompositionError):
        project_along((1, 1, 1), onto, along)


def test_projector_matches_project_along():
    onto = Subspace.from_vectors(3, [(1, 2, 0)])
    along = Subspace.from_vectors(3, [(0, 1, 0), (0, 0, 1)])
    proj = Projector(onto, along)
    gen = stream(23, "projmat")
    for _ in range(10):
        v = tuple(gen.fraction() for _ in range(3))
        assert proj.apply(v) == project_along(v, onto, along)


def test_projector_is_idempotent():
    onto = Subspace.from_vectors(4, [(1, 1, 1, 1), (1, 0, 0, 0)])
    along = Subspace.from_vectors(4, [(0, 1, 0, 0), (0, 0, 1, 0)])
    proj = Projector(onto, along)
    gen = stream(29, "idem")
    for _ in range(10):
        v = tuple(gen.fraction() for _ in range(4))
        once = proj.apply(v)
        assert proj.apply(once) == once
        assert onto.contains(once)


def test_mat_inverse_roundtrip():
    gen = stream(31, "inverse")
    found = 0
    while found < 5:
        m = random_mat(gen, 4, 4)
        if m.det() == 0:
            continue
        found += 1
        assert m.inverse() * m == Mat.identity(4)
        assert m * m.inverse() == Mat.identity(4)


def test_mat_inverse_singular_raises():
    m = Mat.from_rows([(1, 2), (2, 4)], cols=2)
    with pytest.raises(DecompositionError):
        m.inverse()


def test_solve_reproduces_rhs():
    a = Mat.from_rows([(2, 1), (1, 3)], cols=2)
    b = vec((5, 10))
    x = solve(a, b)
    assert a.apply(x) == b


def test_solve_inconsistent_raises():
    a = Mat.from_rows([(1, 0), (1, 0)], cols=2)
    with pytest.raises(DecompositionError):
        solve(a, vec((1, 2)))
