"""Log charts, the two-form and its polynomial bivector, leaves, reduction.

Anchors checked by hand: the A1 rank table {(): 6, (1,): 4}, the pole
entry 1/z, the stratum rank law 2n - 2|S|, the A1 leaf examples around
h, and the conic centralizer element fixed by level-set normalization.
"""

from fractions import Fraction

import pytest

from ucz import algebra_from_descriptor
from ucz.errors import ConstructionError, DomainError, PoleError
from ucz.exactlin import Mat
from ucz.kostant import invariants_eval, slice_for, slice_from_invariants
from ucz.liealg import GroupElement, conjugate
from ucz.logsympl import (
    bivector_matrix,
    build_chart,
    casimir_check,
    leaf_label,
    leaf_sigma_values,
    level_set_contains,
    level_set_normalize,
    nxn_freeness,
    omega_matrix,
    same_leaf,
    stratum_rank,
)
from ucz.rng import stream
from ucz.suites import borel_sample, fiber_sample, positive_unipotent
from ucz.wonderful import all_subsets, build_parabolic


def test_chart_coordinate_bookkeeping(any_algebra):
    L = any_algebra
    for I in all_subsets(L.rank):
        chart = build_chart(L, I)
        assert 2 * chart.m + L.rank == L.dim
        assert chart.size == 2 * L.dim
        assert len(chart.labels) == 2 * L.dim
    assert build_chart(L, frozenset()) is build_chart(L, frozenset())


def test_chart_labels_a1(a1):
    chart = build_chart(a1, {1})
    assert chart.labels == ("x+1", "x-1", "z1", "a+1", "a-1", "s1")


def test_chart_rejects_bad_pole_sets(a1):
    with pytest.raises(DomainError):
        build_chart(a1, {2})
    chart = build_chart(a1, {1})
    with pytest.raises(DomainError):
        chart.point((0, 0, 0))


def test_omega_block_structure(a1):
    chart = build_chart(a1, {1})
    point = chart.basepoint()
    vals = list(point.values)
    vals[chart.z_index(1)] = Fraction(1)
    omega = omega_matrix(chart.point(vals))
    assert omega.transpose() == -omega
    assert omega.det() != 0
    from ucz.exactlin import rank as mat_rank

    assert mat_rank(omega) == 6
    assert omega[(chart.z_index(1), chart.sigma_index(1))] == 1


def test_omega_pole_coefficient(a1):
    chart = build_chart(a1, {1})
    vals = [Fraction(0)] * chart.size
    vals[chart.z_index(1)] = Fraction(1, 2)
    omega = omega_matrix(chart.point(vals))
    assert omega[(chart.z_index(1), chart.sigma_index(1))] == 2


def test_omega_has_a_pole_on_the_divisor(a1):
    chart = build_chart(a1, {1})
    with pytest.raises(PoleError):
        omega_matrix(chart.basepoint())


def test_omega_off_pole_set_ignores_z(a1):
    chart = build_chart(a1, frozenset())
    omega = omega_matrix(chart.basepoint())
    assert omega[(chart.z_index(1), chart.sigma_index(1))] == 1


def test_bivector_is_antisymmetric_and_inverse(any_algebra):
    L = any_algebra
    gen = stream(53, f"inv:{L.descriptor}")
    for I in all_subsets(L.rank):
        chart = build_chart(L, I)
        for _ in range(3):
            vals = [gen.fraction() for _ in range(chart.size)]
            for i in range(1, L.rank + 1):
                vals[chart.z_index(i)] = gen.nonzero_fraction()
            point = chart.point(vals)
            pi = bivector_matrix(point)
            assert pi.matrix.transpose() == -pi.matrix
            assert pi.matrix * omega_matrix(point) == Mat.identity(chart.size)


def test_bivector_entries_are_polynomial(a2):
    chart = build_chart(a2, {1, 2})
    pi = bivector_matrix(chart.basepoint()).matrix
    assert all(x.denominator == 1 for row in pi.row_list() for x in row)


def test_bivector_rank_drops_on_the_divisor(a1, a2):
    c1 = build_chart(a1, {1})
    assert bivector_matrix(c1.basepoint()).rank() == 4
    c2 = build_chart(a2, {1, 2})
    assert bivector_matrix(c2.basepoint()).rank() == 12


def test_stratum_rank_law(any_algebra):
    L = any_algebra
    n = L.dim
    for I in all_subsets(L.rank):
        chart = build_chart(L, I)
        for S in all_subsets(L.rank):
            if not S <= frozenset(I):
                continue
            assert stratum_rank(chart, S) == 2 * n - 2 * len(S)


def test_stratum_rank_a1_table(a1):
    chart = build_chart(a1, {1})
    assert stratum_rank(chart, frozenset()) == 6
    assert stratum_rank(chart, {1}) == 4


def test_stratum_must_lie_in_the_pole_set(a2):
    chart = build_chart(a2, {1})
    with pytest.raises(DomainError):
        stratum_rank(chart, {2})


def test_sigma_casimirs_vanish_on_strata(any_algebra):
    L = any_algebra
    for I in all_subsets(L.rank):
        chart = build_chart(L, I)
        for S in all_subsets(L.rank):
            if S <= frozenset(I):
                assert casimir_check(chart, S)


def test_leaf_label_shape_and_membership(any_algebra):
    L = any_algebra
    for I in all_subsets(L.rank):
        p = build_parabolic(L, I)
        label = leaf_label(p, L.zero())
        assert label == (Fraction(0),) * (L.rank - len(I))


def test_leaf_label_kills_the_derived_part(a1):
    p = build_parabolic(a1, frozenset())
    h, e = a1.h(0), a1.e(0)
    assert leaf_label(p, e) == (Fraction(0),)
    assert leaf_label(p, h + e.scale(3)) == leaf_label(p, h)
    assert leaf_label(p, h) != leaf_label(p, h.scale(2))


def test_leaf_label_needs_a_parabolic_point(a1):
    p = build_parabolic(a1, frozenset())
    with pytest.raises(DomainError):
        leaf_label(p, a1.f(0))


def test_leaf_label_on_the_open_orbit_is_empty(a2):
    p = build_parabolic(a2, {1, 2})
    assert leaf_label(p, a2.h(0)) == ()
    assert leaf_sigma_values(p, a2.h(0)) == ()


def test_same_leaf_a1_examples(a1):
    p = build_parabolic(a1, frozenset())
    h, e, f = a1.h(0), a1.e(0), a1.f(0)
    assert same_leaf(p, (h + e, h), (h + e.scale(3), h - f))
    assert not same_leaf(p, (h, h), (h.scale(2), h.scale(2)))
    assert same_leaf(p, (e, f), (e.scale(5), a1.zero()))
    with pytest.raises(DomainError):
        same_leaf(p, (h, -h), (h, h))


def test_same_leaf_matches_the_central_coordinates(any_algebra):
    L = any_algebra
    for I in all_subsets(L.rank):
        p = build_parabolic(L, I)
        gen = stream(59, f"leaf:{L.descriptor}:{sorted(I)}")
        for _ in range(10):
            x1, x2, c1 = fiber_sample(p, gen)
            y1, y2, c2 = fiber_sample(p, gen)
            assert same_leaf(p, (x1, x2), (y1, y2)) == (c1 == c2)


def test_sigma_values_separate_leaves(any_algebra):
    L = any_algebra
    for I in all_subsets(L.rank):
        p = build_parabolic(L, I)
        gen = stream(61, f"sigma:{L.descriptor}:{sorted(I)}")
        for _ in range(10):
            x1, x2, _ = fiber_sample(p, gen)
            y1, y2, _ = fiber_sample(p, gen)
            same = same_leaf(p, (x1, x2), (y1, y2))
            assert same == (leaf_sigma_values(p, x1) == leaf_sigma_values(p, y1))


def test_level_set_membership(a1):
    f, h = slice_for(a1).triple.f, a1.h(0)
    assert level_set_contains(f, f)
    assert not level_set_contains(h, f)
    assert not level_set_contains(f, h)


def test_nxn_freeness_on_the_level_set(type_a_algebra):
    L = type_a_algebra
    f = slice_for(L).triple.f
    assert nxn_freeness(f, f)
    gen = stream(67, f"free:{L.descriptor}")
    for _ in range(10):
        assert nxn_freeness(borel_sample(L, gen), borel_sample(L, gen))


def test_normalize_identity_on_slice_points(a1):
    ks = slice_for(a1)
    g, xi = level_set_normalize(a1.group_identity(), ks.triple.f)
    assert g == a1.group_identity()
    assert xi == ks.triple.f


def test_normalize_fixes_conic_centralizer(a1):
    ks = slice_for(a1)
    xi_s = ks.triple.f + a1.e(0)
    m = a1.realize(xi_s)
    a, b = Fraction(5, 4), Fraction(3, 4)
    gamma = GroupElement(Mat.identity(2).scale(a) + m.scale(b))
    assert conjugate(gamma, xi_s) == xi_s
    g_s, out = level_set_normalize(gamma, xi_s)
    assert g_s == gamma
    assert out == xi_s


def a2_centralizer_pair(a2):
    """A slice point with eigenvalues (1, 1, -2) and a unipotent fixing it."""
    ks = slice_for(a2)
    xi_s = slice_from_invariants(ks, (Fraction(3), Fraction(-2)))
    m = a2.realize(xi_s)
    one = Mat.identity(3)
    nil = (m - one) * (m + one.scale(2))
    assert not nil.is_zero()
    assert (nil * nil).is_zero()
    gamma = GroupElement(one + nil)
    assert conjugate(gamma, xi_s) == xi_s
    return xi_s, gamma


def test_normalize_roundtrip_recovers_the_datum(a1, a2):
    for L, make in ((a1, None), (a2, a2_centralizer_pair)):
        ks = slice_for(L)
        if make is None:
            xi_s = ks.triple.f + L.e(0)
            m = L.realize(xi_s)
            gamma = GroupElement(Mat.identity(2).scale(Fraction(5, 4)) + m.scale(Fraction(3, 4)))
        else:
            xi_s, gamma = make(L)
        gen = stream(71, f"round:{L.descriptor}")
        for _ in range(10):
            n1 = positive_unipotent(L, gen)
            n2 = positive_unipotent(L, gen)
            g_in = n1 * (gamma * n2.inverse())
            xi_in = conjugate(n2, xi_s)
            g_out, xi_out = level_set_normalize(g_in, xi_in)
            assert g_out == gamma
            assert xi_out == xi_s


def test_normalize_preserves_invariants(a2):
    gen = stream(73, "normsinv")
    xi_s, gamma = a2_centralizer_pair(a2)
    n2 = positive_unipotent(a2, gen)
    xi_in = conjugate(n2, xi_s)
    _, xi_out = level_set_normalize(gamma, xi_s)
    assert invariants_eval(xi_out) == invariants_eval(xi_s)
    assert invariants_eval(xi_in) == invariants_eval(xi_s)


def test_normalize_rejects_points_off_the_level_set(a1):
    f = slice_for(a1).triple.f
    with pytest.raises(DomainError):
        level_set_normalize(a1.group_identity(), a1.h(0))
    t = a1.torus_element((2, Fraction(1, 2)))
    with pytest.raises(DomainError):
        level_set_normalize(t, f)
