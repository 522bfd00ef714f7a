import math

import numpy as np
import pytest

from mgk import commensurability_xk as cx
from mgk.deformation import (
    FillingSpec,
    GKSignature,
    residuals,
    solve_complete,
    solve_filling,
    varsigma_point,
)
from mgk.hyptrig import DomainError


def test_signature_validation():
    assert cx.XkSignature(3).gk == GKSignature(4, 3)
    with pytest.raises(DomainError):
        cx.XkSignature(2)
    with pytest.raises(DomainError):
        cx.XkSignature(-1)


def test_edge_cycle_shape():
    sig1 = cx.XkSignature(1)
    cycle = cx.edge_angle_cycle(sig1)
    assert len(cycle) == 12 == 6 * sig1.g
    sig3 = cx.XkSignature(3)
    assert len(cx.edge_angle_cycle(sig3)) == 24 == 6 * sig3.g
    # one beta in the first run, two in the second, three in the third
    b = 12 * sig3.k
    assert cx.edge_angle_cycle(sig3).count(b) == 6


def test_edge_cycle_sums_to_2pi():
    sig = cx.XkSignature(3)
    x = solve_filling(sig.gk, FillingSpec.from_pairs(3, [(7.0, 2.0), None, None]))
    total = sum(x[i] for i in cx.edge_angle_cycle(sig))
    assert abs(total - 2 * math.pi) < 1e-10


def test_abc_at_complete():
    sig = cx.XkSignature(3)
    sol = solve_complete(sig.gk)
    inv = cx.abc(sol.x0, sig)
    expected = 2 * sig.k * sol.alpha_bar
    assert abs(inv.a - expected) < 1e-12
    assert abs(inv.b - expected) < 1e-12
    assert abs(inv.c - expected) < 1e-12


def test_abc_sum_identity():
    sig = cx.XkSignature(3)
    x = solve_filling(sig.gk, FillingSpec.from_pairs(3, [(5.0, 1.0), (8.0, 3.0), None]))
    inv = cx.abc(x, sig)
    assert abs(inv.a + inv.b + inv.c + 6 * x[-1] - 2 * math.pi) < 1e-10


def test_theta_r_table_and_order():
    sig = cx.XkSignature(3)
    x = solve_filling(sig.gk, FillingSpec.from_pairs(3, [(7.0, 2.0), None, None]))
    y = cx.theta_r(x, sig)
    yy = cx.theta_r(y, sig)
    for i in range(3):
        base = cx.abc_per_cusp(x, sig, i)
        once = cx.abc_per_cusp(y, sig, i)
        twice = cx.abc_per_cusp(yy, sig, i)
        assert abs(once.a - base.c) < 1e-14 and abs(twice.a - base.b) < 1e-14
        assert abs(once.b - base.a) < 1e-14 and abs(twice.b - base.c) < 1e-14
        assert abs(once.c - base.b) < 1e-14 and abs(twice.c - base.a) < 1e-14
    z = x
    for _ in range(6):
        z = cx.theta_r(z, sig)
    assert np.array_equal(z, x)
    # fixed point: the complete solution
    sol = solve_complete(sig.gk)
    assert np.allclose(cx.theta_r(sol.x0, sig), sol.x0, atol=1e-15)
    # stays on the variety
    assert np.max(np.abs(residuals(sig.gk, y))) < 1e-10


def test_tau_13():
    sig = cx.XkSignature(3)
    x = solve_filling(sig.gk, FillingSpec.from_pairs(3, [(7.0, 2.0), None, None]))
    t = cx.tau_13(x, sig)
    assert np.array_equal(cx.tau_13(t, sig), x)
    assert abs(cx.abc_per_cusp(t, sig, 0).a - cx.abc_per_cusp(x, sig, 2).a) < 1e-15
    assert abs(cx.abc_per_cusp(t, sig, 2).b - cx.abc_per_cusp(x, sig, 0).b) < 1e-15
    assert abs(cx.abc_per_cusp(t, sig, 1).c - cx.abc_per_cusp(x, sig, 1).c) < 1e-15
    iv, it = cx.abc(x, sig), cx.abc(t, sig)
    assert abs(iv.a - it.a) < 1e-14 and abs(iv.b - it.b) < 1e-14 and abs(iv.c - it.c) < 1e-14
    with pytest.raises(DomainError):
        cx.tau_13(x, cx.XkSignature(1))


def test_theta_r_rotates_coefficients():
    # the rotation acts on every cusp's Dehn coefficients by an exact
    # integer rotation matrix of order six
    from mgk.deformation import dehn_coefficients
    from mgk.slopes_symmetry import D6Element

    sig = cx.XkSignature(3)
    x = solve_filling(
        sig.gk, FillingSpec.from_pairs(3, [(7.0, 2.0), (5.0, 1.0), (8.0, 3.0)])
    )
    y = cx.theta_r(x, sig)
    m = np.linalg.matrix_power(D6Element(1).matrix(), 5)
    for c in range(3):
        d = np.array(dehn_coefficients(x, c))
        dy = np.array(dehn_coefficients(y, c))
        assert np.max(np.abs(dy - m @ d)) < 1e-9


def test_commensurable_dichotomy():
    sig = cx.XkSignature(3)
    y = varsigma_point(sig.gk, 0.05)
    assert cx.commensurable(y, y, sig) is True
    rotated = cx.theta_r(y, sig)
    assert cx.commensurable(y, rotated, sig) is False
    swapped = cx.tau_13(y, sig)
    assert cx.commensurable(y, swapped, sig) is True


def test_commensurable_indeterminate_band():
    sig = cx.XkSignature(1)
    sol = solve_complete(sig.gk)
    x1 = sol.x0.copy()
    x2 = sol.x0.copy()
    x2[0] += 3e-8  # shifts a by 3e-8: inside (tol, 10 tol)
    assert cx.commensurable(x1, x2, sig, tol=1e-8) is None
