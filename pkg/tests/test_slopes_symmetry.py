import itertools
import math

import numpy as np
import pytest

from mgk import slopes_symmetry as ss
from mgk.deformation import (
    FillingSpec,
    GKSignature,
    dehn_coefficients,
    residuals,
    solve_complete,
    uv,
)
from mgk.hyptrig import DomainError

from conftest import random_filled_points, solved_point


def test_slope_canonicalization_and_primitivity():
    assert ss.Slope.of(-3, 1) == ss.Slope(3, -1)
    assert ss.Slope.of(0, -1) == ss.Slope(0, 1)
    with pytest.raises(DomainError):
        ss.Slope(4, 2)
    with pytest.raises(DomainError):
        ss.Slope(-1, 0)


def test_slope_lengths():
    assert ss.slope_length(ss.Slope(1, 0)) == 1.0
    assert abs(ss.slope_length(ss.Slope(2, 1)) - math.sqrt(3)) < 1e-15
    assert abs(ss.slope_length(ss.Slope.of(19, 11)) - math.sqrt(273)) < 1e-13
    assert abs(ss.slope_length(ss.Slope.of(16, -1)) - math.sqrt(273)) < 1e-13


def test_d6_generator_formulas():
    r, s = ss.D6Element(1), ss.D6Element(0, True)
    assert ss.d6_act(r, ss.Slope(7, 2)) == ss.Slope(5, 7)
    assert ss.d6_act(r, ss.Slope.of(19, 11)) == ss.Slope(8, 19)
    assert ss.d6_act(s, ss.Slope(7, 2)) == ss.Slope.of(5, -2)


def test_d6_group_law():
    r, s = ss.D6Element(1), ss.D6Element(0, True)
    assert s.compose(s) == ss.D6Element.identity()
    e = ss.D6Element.identity()
    for _ in range(6):
        e = r.compose(e)
    assert e == ss.D6Element.identity()
    # s r s = r^-1
    assert s.compose(r).compose(s) == r.inverse()
    # matrix representation respects composition
    for a, b in itertools.product(
        [ss.D6Element(m, f) for m in range(6) for f in (False, True)], repeat=2
    ):
        assert np.array_equal(a.compose(b).matrix(), a.matrix() @ b.matrix())


def test_r_orbit_of_meridian():
    r = ss.D6Element(1)
    orbit = set()
    s = ss.Slope(1, 0)
    for _ in range(6):
        orbit.add(s)
        s = ss.d6_act(r, s)
    assert orbit == {ss.Slope(1, 0), ss.Slope(1, 1), ss.Slope(0, 1)}


def test_length_preserved_exactly():
    # integer identity p^2 + q^2 - pq invariant under both generators,
    # asserted on all primitive pairs up to 100
    elems = [ss.D6Element(m, f) for m in range(6) for f in (False, True)]
    mats = [e.matrix() for e in elems]
    for p in range(-100, 101):
        for q in range(-100, 101):
            if math.gcd(abs(p), abs(q)) != 1:
                continue
            lsq = p * p + q * q - p * q
            for m in mats:
                pp, qq = m @ (p, q)
                assert pp * pp + qq * qq - pp * qq == lsq


def test_classify_short_slopes():
    table = dict(ss.classify_slopes(7))
    assert len(table[1]) == 1 and len(table[1][0]) == 3
    assert len(table[3]) == 1 and len(table[3][0]) == 3
    assert set(table[3][0]) == {ss.Slope.of(1, -1), ss.Slope(1, 2), ss.Slope(2, 1)}
    assert len(table[7]) == 1 and len(table[7][0]) == 6
    # no slopes of squared length 2, 4, 5, 6
    assert set(table) == {1, 3, 7}


def test_classify_273_two_orbits():
    table = dict(ss.classify_slopes(273))
    orbits = table[273]
    assert len(orbits) == 2
    members = [set(o) for o in orbits]
    s1, s2 = ss.Slope.of(19, 11), ss.Slope.of(16, -1)
    assert any(s1 in m for m in members)
    assert any(s2 in m for m in members)
    assert not any(s1 in m and s2 in m for m in members)
    assert all(len(m) == 6 for m in members)


def test_orbit_sizes_up_to_400():
    for lsq, orbits in ss.classify_slopes(400):
        for orb in orbits:
            if lsq in (1, 3):
                assert len(orb) == 3
            else:
                assert len(orb) == 6
            # rotation-only orbits have size 3 for generic slopes
            c6 = ss.c6_orbit(orb[0])
            assert len(c6) == 3


def test_hyperbolic_filling_check():
    assert not ss.hyperbolic_filling_check(FillingSpec.from_pairs(1, [(2.0, 1.0)]))
    assert ss.hyperbolic_filling_check(FillingSpec.from_pairs(1, [(3.0, 1.0)]))
    assert ss.hyperbolic_filling_check(FillingSpec.unfilled(2))
    # real pairs compare against the threshold directly
    assert ss.hyperbolic_filling_check(FillingSpec.from_pairs(1, [(2.7, 0.1)]))
    assert not ss.hyperbolic_filling_check(FillingSpec.from_pairs(1, [(2.5, 0.1)]))


def test_slope_sets_equivalent_identity_and_rotation():
    a = ss.make_slope_set(2, {0: (7, 2)})
    w = ss.slope_sets_equivalent(a, a)
    assert w is not None and w.apply(a) == a
    b = ss.make_slope_set(2, {0: (5, 7)})
    w = ss.slope_sets_equivalent(a, b)
    assert w is not None and w.orientation_preserving
    assert w.apply(a) == b


def test_slope_sets_respect_empty_tori():
    a = ss.make_slope_set(2, {0: (3, 1)})
    b = ss.make_slope_set(2, {1: (3, 1)})
    w = ss.slope_sets_equivalent(a, b)
    assert w is not None and w.perm[0] == 1
    c = ss.make_slope_set(2, {0: (3, 1), 1: (3, 1)})
    assert ss.slope_sets_equivalent(a, c) is None


def test_inequivalent_273_pair():
    a = ss.make_slope_set(1, {0: (19, 11)})
    b = ss.make_slope_set(1, {0: (16, -1)})
    assert ss.slope_sets_equivalent(a, b, orientation_preserving=True) is None
    assert ss.slope_sets_equivalent(a, b, orientation_preserving=False) is None


def test_reflection_needs_reflection_witness():
    a = ss.make_slope_set(1, {0: (7, 2)})
    refl = ss.make_slope_set(1, {0: ss.d6_act(ss.D6Element(0, True), ss.Slope(7, 2))})
    assert ss.slope_sets_equivalent(a, refl, orientation_preserving=True) is None
    w = ss.slope_sets_equivalent(a, refl, orientation_preserving=False)
    assert w is not None and not w.orientation_preserving


def test_equivalence_witness_invertible():
    a = ss.make_slope_set(3, {0: (3, 1), 1: (5, 1)})
    b = ss.make_slope_set(3, {1: ss.d6_act(ss.D6Element(1), ss.Slope(3, 1)), 2: (5, 1)})
    w = ss.slope_sets_equivalent(a, b)
    assert w is not None and w.apply(a) == b
    assert w.inverse().apply(b) == a
    w_back = ss.slope_sets_equivalent(b, a)
    assert w_back is not None and w_back.apply(b) == a


def test_enumerate_matches_membership():
    a = ss.make_slope_set(2, {0: (3, 1), 1: (5, 1)})
    orbit = ss.enumerate_equivalent_sets(a)
    assert a in orbit
    for b in orbit:
        assert ss.slope_sets_equivalent(a, b) is not None
    # a reflected set lies outside the orientation-preserving orbit
    refl = ss.make_slope_set(
        2, {0: ss.d6_act(ss.D6Element(0, True), ss.Slope(3, 1)), 1: (5, 1)}
    )
    assert refl not in orbit


def test_enumerate_single_cusp_count():
    a = ss.make_slope_set(1, {0: (3, 1)})
    assert len(ss.enumerate_equivalent_sets(a)) == 3
    empty = ss.make_slope_set(1, {})
    assert ss.enumerate_equivalent_sets(empty) == [empty]


# --- symmetries acting on the variety ---------------------------------------


def test_generator_transformation_laws():
    sig = GKSignature(2, 1)
    for x in random_filled_points(sig, 3, seed=23):
        u, v = uv(x, 0)
        ur, vr = uv(ss.phi_r(x, 0), 0)
        assert abs(ur + v) < 1e-10 and abs(vr - (u + v)) < 1e-10
        us, vs = uv(ss.phi_s(x, 0), 0)
        assert abs(us + u.conjugate()) < 1e-10
        assert abs(vs - (u.conjugate() + v.conjugate())) < 1e-10
        p, q = dehn_coefficients(x, 0)
        pr, qr = dehn_coefficients(ss.phi_r(x, 0), 0)
        assert abs(pr - (p - q)) < 1e-9 and abs(qr - p) < 1e-9
        ps, qs = dehn_coefficients(ss.phi_s(x, 0), 0)
        assert abs(ps - (p - q)) < 1e-9 and abs(qs + q) < 1e-9


def test_symmetries_preserve_residuals():
    # Equation-set invariance, probed off the variety: the tetra swap and
    # cusp relabelling permute residual entries outright; apex
    # permutations permute every entry except the two sigma difference
    # rows, which transform unimodularly because the underlying
    # sine-product triple is what gets permuted.
    from mgk.deformation import _sine_product

    sig = GKSignature(3, 2)
    x = solved_point(sig, [(5.0, 1.0), (8.0, 3.0)]) + 1e-3  # push off the variety too
    base = np.sort(np.abs(residuals(sig, x)))
    for y in (ss.tetra_swap(x, 0), ss.cusp_permutation(x, [1, 0])):
        assert np.allclose(np.sort(np.abs(residuals(sig, y))), base, atol=1e-13)
    k = sig.k
    non_sigma = list(range(8 * k)) + [10 * k]
    base_ns = np.sort(np.abs(residuals(sig, x)[non_sigma]))
    for y in (
        ss.phi_r(x, 0),
        ss.phi_s(x, 1),
        ss.apex_permutation(x, 0, (1, 0, 2)),
    ):
        assert np.allclose(np.sort(np.abs(residuals(sig, y)[non_sigma])), base_ns, atol=1e-13)
        for c in range(k):
            before = sorted(_sine_product(x, c, j) for j in range(3))
            after = sorted(_sine_product(y, c, j) for j in range(3))
            assert np.allclose(before, after, atol=1e-15)


def test_sym_act_coefficient_equivariance():
    sig = GKSignature(3, 2)
    x = solved_point(sig, [(5.0, 1.0), (8.0, 3.0)])
    psi = ss.SlopeSetIsometry(
        perm=(1, 0), local=(ss.D6Element(2, False), ss.D6Element(1, True))
    )
    y = ss.sym_act(psi, x)
    d = [np.array(dehn_coefficients(x, c)) for c in range(2)]
    dy = [np.array(dehn_coefficients(y, c)) for c in range(2)]
    for i in range(2):
        expected = psi.local[i].matrix() @ d[i]
        assert np.max(np.abs(dy[psi.perm[i]] - expected)) < 1e-9


def test_sym_act_identity():
    sig = GKSignature(2, 1)
    x = solved_point(sig, [(5.0, 1.0)])
    ident = ss.SlopeSetIsometry(perm=(0,), local=(ss.D6Element.identity(),))
    assert np.array_equal(ss.sym_act(ident, x), x)
