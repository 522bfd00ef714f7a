"""Per-structure invariants: holonomy dilations, cusp moduli, complex
lengths of core geodesics, the shortest-return-path length, and the two
integer invariants (first-homology rank, Heegaard genus)."""

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .deformation import GKSignature, cusps_of, gamma_index, uv
from .hyptrig import DomainError

HEXAGONAL_MODULUS = complex(0.5, math.sqrt(3.0) / 2.0)


class IncompleteCuspError(DomainError):
    """The requested quantity is only defined at a complete cusp."""


@dataclass(frozen=True)
class HolonomyDilation:
    a: complex
    b: complex


def holonomy_dilations(x, cusp: int) -> HolonomyDilation:
    """Dilation components (a, b) of the holonomies of the two marked
    peripheral curves, computed directly from the gamma angles (an
    independent path from exp of `deformation.uv`)."""
    k = cusps_of(x)
    if not 0 <= cusp < k:
        raise DomainError("cusp index %d out of range" % cusp)
    lA, lB = 2 * cusp, 2 * cusp + 1
    gA = [x[gamma_index(lA, j)] for j in range(3)]
    gB = [x[gamma_index(lB, j)] for j in range(3)]
    a = (math.sin(gA[0]) * math.sin(gB[1]) / (math.sin(gA[1]) * math.sin(gB[0]))) * cmath.exp(
        1j * (gA[2] - gB[2])
    )
    b = (math.sin(gA[1]) * math.sin(gB[2]) / (math.sin(gA[2]) * math.sin(gB[1]))) * cmath.exp(
        1j * (gA[0] - gB[0])
    )
    return HolonomyDilation(a=a, b=b)


def canonicalize_modulus(tau: complex, tol: float = 1e-12) -> complex:
    """Reduce a modulus in the upper half-plane to the standard
    fundamental domain |Re| <= 1/2, |tau| >= 1, resolving its boundary so
    that the regular hexagonal lattice is represented by exp(i*pi/3)."""
    if not tau.imag > 0:
        raise DomainError("modulus %r is not in the upper half-plane" % (tau,))
    for _ in range(256):
        tau = complex(tau.real - round(tau.real), tau.imag)
        if abs(tau) < 1.0 - 1e-15:
            tau = -1.0 / tau
        else:
            break
    if tau.real < -0.5 + tol:
        tau += 1.0
    if abs(abs(tau) - 1.0) < tol and tau.real < -tol:
        tau = -1.0 / tau
    return tau


def cusp_modulus(x, cusp: int, complete_tol: float = 1e-8) -> complex:
    """Similarity class of the Euclidean structure on a complete cusp
    torus, canonicalized to the modular fundamental domain.

    The torus is two Euclidean triangles with the gamma angles of the
    cusp's tetrahedron pair, glued along corresponding sides; the first
    develops with positive orientation, the second with negative (the
    face gluings reverse orientation).  The returned value is the ratio
    of the translations of the two marked curves.  Raises on an
    incomplete cusp, where the structure is affine rather than metric.
    """
    u, _ = uv(x, cusp)
    if abs(u) > complete_tol:
        raise IncompleteCuspError(
            "cusp %d is incomplete (|u| = %.3g)" % (cusp, abs(u))
        )
    lA, lB = 2 * cusp, 2 * cusp + 1
    g = [x[gamma_index(lA, j)] for j in range(3)]
    h = [x[gamma_index(lB, j)] for j in range(3)]
    # first triangle: corners C0 = 0, C1 = 1 (the side crossing face 2);
    # second triangle attached across it with corners 0 and 1 exchanged,
    # in the lower half-plane.
    s = math.sin(h[0]) / math.sin(h[2])
    t_mu = 1.0 + 0.0j
    t_lambda = -s * cmath.exp(-1j * h[1])
    return canonicalize_modulus(t_lambda / t_mu)


def _bezout(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def complex_length(x, cusp: int, pq: Tuple[int, int], complete_tol: float = 1e-9) -> complex:
    """Complex length of the geodesic added by filling `cusp` along the
    integer coefficients (p, q): r*u + s*v for integers with
    p*s - q*r = -gcd(p, q), reduced mod 2*pi*i and sign-normalized to
    positive real part."""
    p, q = pq
    if p != int(p) or q != int(q):
        raise DomainError("complex length needs integer coefficients")
    p, q = int(p), int(q)
    if (p, q) == (0, 0):
        raise DomainError("(0, 0) is not a slope")
    u, v = uv(x, cusp)
    if abs(u) < complete_tol:
        raise IncompleteCuspError("cusp %d is unfilled; no added geodesic" % cusp)
    _, a, b = _bezout(p, q)
    # p*(-a) - q*b = -(p*a + q*b) = -gcd
    s_int, r_int = -a, b
    w = r_int * u + s_int * v
    if w.real < 0:
        w = -w
    im = math.remainder(w.imag, 2.0 * math.pi)
    if im <= -math.pi:
        im += 2.0 * math.pi
    return complex(w.real, im)


def return_path_length(x) -> float:
    """Length of the compact edge, the shortest return path: arccosh of
    c/(c-1) with c = cos(beta)/(1-cos(beta)).  Defined for beta < pi/3."""
    beta = float(x[-1])
    if not 0.0 < beta < math.pi / 3.0:
        raise DomainError("beta=%r outside (0, pi/3): no compact edge" % beta)
    c = math.cos(beta) / (1.0 - math.cos(beta))
    return math.acosh(c / (c - 1.0))


def homology_rank(sig: GKSignature, filled: int) -> int:
    """Rank of the first homology after filling `filled` cusps."""
    if not 0 <= filled <= sig.k:
        raise DomainError("filled count %d outside 0..k" % filled)
    return sig.g + sig.k - filled


def heegaard_genus(sig: GKSignature) -> int:
    """Heegaard genus of the manifold and of all its hyperbolic fillings."""
    return sig.g + 1
