"""Boundary-holonomy trace computations certifying that deformations
along the distinguished curve bend the geodesic boundary at second order.

The holonomy of the chosen boundary loop is a product of two isometries
A(lambda, theta) of the upper half-plane, each moving the base geodesic
segment of length log(lambda) and turning by theta.  Along the curve the
first derivatives of lambda and of both turning angles vanish, so the
second derivative of the trace has a two-term closed form in the second
derivatives of the angles; whether the two terms cancel depends on a
combinatorial bit delta of the triangulation, and both branches are
covered here.
"""

import math
from dataclasses import dataclass

import numpy as np

from .deformation import GKSignature, solve_complete, varsigma_derivatives
from .hyptrig import DomainError


@dataclass(frozen=True)
class TraceInput:
    lambda0: float       # exp of the boundary-edge length, > 1
    eta0: float          # first turning angle at t = 0, in (0, 2*pi)
    zeta0: float         # second turning angle at t = 0, in (0, 2*pi)
    eta_dd: float        # second derivative of eta at 0
    zeta_dd: float       # second derivative of zeta at 0
    delta: int           # combinatorial bit, 0 or 1

    def __post_init__(self):
        if not self.lambda0 > 1.0:
            raise DomainError("lambda0 must exceed 1")
        for name, th in (("eta0", self.eta0), ("zeta0", self.zeta0)):
            if not 0.0 < th < 2.0 * math.pi:
                raise DomainError("%s=%r outside (0, 2*pi)" % (name, th))
        if self.delta not in (0, 1):
            raise DomainError("delta must be 0 or 1")


def mobius_A(lam: float, theta: float) -> np.ndarray:
    """The isometry taking the upward half-geodesic at i to the
    half-geodesic leaving lambda*i at angle theta from the downward
    return direction; determinant one by construction."""
    if not lam > 1.0:
        raise DomainError("lambda=%r must exceed 1" % lam)
    if not 0.0 < theta < 2.0 * math.pi:
        raise DomainError("theta=%r outside (0, 2*pi)" % theta)
    rl = math.sqrt(lam)
    s, c = math.sin(theta / 2.0), math.cos(theta / 2.0)
    return np.array([[rl * s, -rl * c], [c / rl, s / rl]])


def trace_gamma(lam: float, eta: float, zeta: float) -> float:
    """Trace of A(lam, eta) A(lam, zeta); equals +-2 cosh(L/2) for the
    boundary geodesic of length L it represents.  Symmetric in the two
    angles."""
    m = mobius_A(lam, eta) @ mobius_A(lam, zeta)
    return float(m[0, 0] + m[1, 1])


def trace_second_derivative(inp: TraceInput) -> float:
    """Second t-derivative at 0 of the trace along a path with stationary
    lambda, eta, zeta (their first derivatives vanish):

      2 tr'' = eta''*((lam + 1/lam) cos(eta/2) sin(zeta/2)
                       + 2 sin(eta/2) cos(zeta/2))
             + zeta''*((lam + 1/lam) sin(eta/2) cos(zeta/2)
                       + 2 cos(eta/2) sin(zeta/2)).
    """
    lam, eta, zeta = inp.lambda0, inp.eta0, inp.zeta0
    lpl = lam + 1.0 / lam
    se, ce = math.sin(eta / 2.0), math.cos(eta / 2.0)
    sz, cz = math.sin(zeta / 2.0), math.cos(zeta / 2.0)
    term_eta = lpl * ce * sz + 2.0 * se * cz
    term_zeta = lpl * se * cz + 2.0 * ce * sz
    return 0.5 * (inp.eta_dd * term_eta + inp.zeta_dd * term_zeta)


def delta0_trace_second_derivative(inp: TraceInput) -> float:
    """The delta = 0 closed form (zeta'' = -eta''):
    tr'' = (eta''/2) (lam + 1/lam - 2) sin((zeta - eta)/2)."""
    if inp.delta != 0:
        raise DomainError("closed form applies to the delta = 0 branch")
    lam = inp.lambda0
    return (
        0.5
        * inp.eta_dd
        * (lam + 1.0 / lam - 2.0)
        * math.sin((inp.zeta0 - inp.eta0) / 2.0)
    )


def stima_inequality(lambda0: float, eta0: float, zeta0: float) -> bool:
    """Positivity of the eta''-coefficient in the trace second derivative,
    the estimate that settles the delta = 1 branch."""
    lpl = lambda0 + 1.0 / lambda0
    val = lpl * math.cos(eta0 / 2.0) * math.sin(zeta0 / 2.0) + 2.0 * math.sin(
        eta0 / 2.0
    ) * math.cos(zeta0 / 2.0)
    return val > 0.0


def varsigma_trace_data(sig: GKSignature, delta: int, r0: float) -> TraceInput:
    """Trace data at t = 0 along the distinguished curve.

    The loop's two segments are boundary edges, so lambda0 is exp of the
    boundary-edge length; eta0 = 2*alpha_bar; zeta0 adds the remaining
    truncation-triangle turning 4*alpha_bar plus delta*2*alpha_bar plus
    the combinatorial angle sum r0 of the surrounding blocks (an input:
    it is constant to second order along the curve, so only its value at
    0 matters); eta'' is the sum of the two apex-2 second derivatives and
    zeta'' follows the delta rule (-eta'' or 0).
    """
    if delta not in (0, 1):
        raise DomainError("delta must be 0 or 1")
    cs = solve_complete(sig)
    a = cs.alpha_bar
    # boundary edge length: arccosh(cos(beta)/(1-cos(beta))); the compact
    # edge (return path) is the hexagon-rule composition of three of them
    cb = math.cos(cs.beta_bar)
    lam = math.exp(math.acosh(cb / (1.0 - cb)))
    eta0 = 2.0 * a
    zeta0 = 4.0 * a + delta * 2.0 * a + r0
    if not 0.0 < zeta0 < 2.0 * math.pi:
        raise DomainError("r0=%r puts zeta0 outside (0, 2*pi)" % r0)
    _, second = varsigma_derivatives(sig)
    eta_dd = second[2] + second[8]
    zeta_dd = -eta_dd if delta == 0 else 0.0
    return TraceInput(
        lambda0=lam, eta0=eta0, zeta0=zeta0, eta_dd=eta_dd, zeta_dd=zeta_dd, delta=delta
    )
