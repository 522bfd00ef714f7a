"""The deformation variety of the (g, k) family.

A point is a vector x in R^{12k+1} of dihedral angles, laid out as

    alpha_l^j -> x[6*l + j]        l = 0..2k-1 (tetrahedron), j = 0..2 (apex)
    gamma_l^j -> x[6*l + 3 + j]
    beta      -> x[12*k]

where tetrahedra 2c and 2c+1 are the pair incident to cusp c, alpha sits
on the compact-face edges, gamma on the edges at the ideal vertex, and
beta is the common angle of the g-k compact regular tetrahedra.

The structure equations split into 10k+1 residuals:

    6k  boundary-edge length matching (all compact hexagons regular and
        isometric): per (l, c), the truncation-triangle side built from
        (gamma_l^c, alpha_l^{c+1}, alpha_l^{c+2}) must have the cosh
        cos(beta)/(1-cos(beta)) of the compact tetrahedra's sides;
    2k  ideal-vertex sums gamma_l^0+gamma_l^1+gamma_l^2 - pi;
    2k  sine-product matching across the exceptional hexagons of each
        cusp pair (Pi^0 - Pi^1, Pi^1 - Pi^2 with
        Pi^j = sin a_2c^j sin a_2c+1^j sin g_2c^j sin g_2c+1^j);
     1  total angle 2pi along the compact edge.

Their common zero set is smooth of dimension 2k near the symmetric
complete solution; completeness or filling conditions on the per-cusp
log-holonomies (u, v) cut it down to isolated points, which a damped
Newton iteration with coefficient continuation locates.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from .hyptrig import DomainError

SQRT7 = math.sqrt(7.0)

# working margin keeping iterates strictly inside (0, pi)
_CLIP = 1e-8


class ConvergenceError(RuntimeError):
    """Newton iteration failed to reach the requested residual norm."""


class ContinuationError(ConvergenceError):
    """Continuation step underflow; `last_good_t` is the smallest scale
    multiplier at which a solution was still found."""

    def __init__(self, message, last_good_t):
        super().__init__(message)
        self.last_good_t = last_good_t


@dataclass(frozen=True)
class GKSignature:
    g: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.g, int) and isinstance(self.k, int)):
            raise DomainError("g, k must be integers")
        if not self.g > self.k >= 1:
            raise DomainError("signature requires g > k >= 1")

    @property
    def n_coords(self) -> int:
        return 12 * self.k + 1

    @property
    def n_residuals(self) -> int:
        return 10 * self.k + 1


def alpha_index(l: int, j: int) -> int:
    return 6 * l + j


def gamma_index(l: int, j: int) -> int:
    return 6 * l + 3 + j


def beta_index(k: int) -> int:
    return 12 * k


def cusps_of(x: np.ndarray) -> int:
    k, rem = divmod(len(x) - 1, 12)
    if rem != 0 or k < 1:
        raise DomainError("coordinate vector length %d is not 12k+1" % len(x))
    return k


def check_coords(sig: GKSignature, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (sig.n_coords,):
        raise DomainError(
            "expected %d coordinates, got %r" % (sig.n_coords, x.shape)
        )
    if not (np.all(x > 0.0) and np.all(x < math.pi)):
        raise DomainError("coordinates must lie in (0, pi)")
    return x


# ---------------------------------------------------------------------------
# complete solution


@dataclass(frozen=True)
class CompleteSolution:
    alpha_bar: float
    beta_bar: float
    x0: np.ndarray


def _beta_of_alpha(sig: GKSignature, a: float) -> float:
    return (2.0 * math.pi - 6.0 * sig.k * a) / (6.0 * (sig.g - sig.k))


def solve_complete(sig: GKSignature) -> CompleteSolution:
    """The unique symmetric solution of the structure plus completeness
    equations: all gamma = pi/3, all alpha equal, reduced to

        cos(beta) = (2 cos^2(alpha) + 1)/3,
        6 (g-k) beta + 6 k alpha = 2 pi.

    The reduced scalar equation is strictly monotone on (0, pi/(3g)], so
    bracketing cannot fail; the root is polished to machine precision.
    """

    def f(a):
        return math.cos(_beta_of_alpha(sig, a)) - (2.0 * math.cos(a) ** 2 + 1.0) / 3.0

    def length_residual(a):
        # the actual matching residual at the symmetric point; its scale
        # grows like 2/beta^2 for small beta, so polishing against it
        # (not against f) puts the assembled residual at the noise floor
        return (math.cos(a) ** 2 + 0.5) / math.sin(a) ** 2 - _edge_rhs(
            _beta_of_alpha(sig, a)
        )

    hi = math.pi / (3.0 * sig.g)
    a = brentq(f, 1e-12, hi, xtol=1e-15, rtol=8.8817841970012523e-16)
    h = 1e-7
    for _ in range(4):
        r = length_residual(a)
        dr = (length_residual(a + h) - length_residual(a - h)) / (2.0 * h)
        step = r / dr
        if not abs(step) < 1e-8:
            break
        a -= step
        if step == 0.0:
            break
    b = _beta_of_alpha(sig, a)
    x0 = np.empty(sig.n_coords)
    for l in range(2 * sig.k):
        for j in range(3):
            x0[alpha_index(l, j)] = a
            x0[gamma_index(l, j)] = math.pi / 3.0
    x0[beta_index(sig.k)] = b
    sol = CompleteSolution(alpha_bar=a, beta_bar=b, x0=x0)
    res = residuals(sig, x0)
    # the length rows cannot beat the evaluation noise of their own scale
    gate = max(1e-12, 64.0 * np.finfo(float).eps * abs(_edge_rhs(b)))
    if np.max(np.abs(res)) > gate:
        raise ConvergenceError("complete solution residual %g" % np.max(np.abs(res)))
    if not (a < b < 2.0 * a <= math.pi / 3.0 + 1e-15):
        raise ConvergenceError("complete solution violates the angle inequalities")
    return sol


# ---------------------------------------------------------------------------
# residual system


def _edge_rhs(beta: float) -> float:
    return math.cos(beta) / (1.0 - math.cos(beta))


def residuals(sig: GKSignature, x) -> np.ndarray:
    """The 10k+1 structure residuals at x (layout in the module docstring)."""
    x = check_coords(sig, x)
    k = sig.k
    beta = x[beta_index(k)]
    rhs = _edge_rhs(beta)
    out = np.empty(sig.n_residuals)
    pos = 0
    # boundary-edge length matching, indexed by (tetrahedron l, gamma apex c)
    for l in range(2 * k):
        for c in range(3):
            a1 = x[alpha_index(l, (c + 1) % 3)]
            a2 = x[alpha_index(l, (c + 2) % 3)]
            g = x[gamma_index(l, c)]
            out[pos] = (math.cos(a1) * math.cos(a2) + math.cos(g)) / (
                math.sin(a1) * math.sin(a2)
            ) - rhs
            pos += 1
    # ideal-vertex angle sums
    for l in range(2 * k):
        out[pos] = (
            x[gamma_index(l, 0)] + x[gamma_index(l, 1)] + x[gamma_index(l, 2)] - math.pi
        )
        pos += 1
    # sine-product matching per cusp
    for c in range(k):
        pi_j = [_sine_product(x, c, j) for j in range(3)]
        out[pos] = pi_j[0] - pi_j[1]
        out[pos + 1] = pi_j[1] - pi_j[2]
        pos += 2
    # total angle along the compact edge
    alpha_sum = sum(
        x[alpha_index(l, j)] for l in range(2 * k) for j in range(3)
    )
    out[pos] = 6.0 * (sig.g - k) * beta + alpha_sum - 2.0 * math.pi
    return out


def _sine_product(x, c: int, j: int) -> float:
    lA, lB = 2 * c, 2 * c + 1
    return (
        math.sin(x[alpha_index(lA, j)])
        * math.sin(x[alpha_index(lB, j)])
        * math.sin(x[gamma_index(lA, j)])
        * math.sin(x[gamma_index(lB, j)])
    )


def jacobian(sig: GKSignature, x) -> np.ndarray:
    """Analytic Jacobian of `residuals` (elementary trig derivatives)."""
    x = check_coords(sig, x)
    k = sig.k
    n = sig.n_coords
    bidx = beta_index(k)
    beta = x[bidx]
    J = np.zeros((sig.n_residuals, n))
    row = 0
    for l in range(2 * k):
        for c in range(3):
            i1 = alpha_index(l, (c + 1) % 3)
            i2 = alpha_index(l, (c + 2) % 3)
            ig = gamma_index(l, c)
            a1, a2, g = x[i1], x[i2], x[ig]
            s1, s2 = math.sin(a1), math.sin(a2)
            J[row, i1] = -(math.cos(a2) + math.cos(a1) * math.cos(g)) / (s1 * s1 * s2)
            J[row, i2] = -(math.cos(a1) + math.cos(a2) * math.cos(g)) / (s2 * s2 * s1)
            J[row, ig] = -math.sin(g) / (s1 * s2)
            J[row, bidx] = math.sin(beta) / (1.0 - math.cos(beta)) ** 2
            row += 1
    for l in range(2 * k):
        for j in range(3):
            J[row, gamma_index(l, j)] = 1.0
        row += 1
    for c in range(k):
        lA, lB = 2 * c, 2 * c + 1
        grads = []
        for j in range(3):
            idx = [
                alpha_index(lA, j),
                alpha_index(lB, j),
                gamma_index(lA, j),
                gamma_index(lB, j),
            ]
            vals = [x[i] for i in idx]
            prod = math.prod(math.sin(v) for v in vals)
            grads.append({i: prod / math.tan(v) for i, v in zip(idx, vals)})
        for i, d in grads[0].items():
            J[row, i] += d
        for i, d in grads[1].items():
            J[row, i] -= d
        for i, d in grads[1].items():
            J[row + 1, i] += d
        for i, d in grads[2].items():
            J[row + 1, i] -= d
        row += 2
    for l in range(2 * k):
        for j in range(3):
            J[row, alpha_index(l, j)] = 1.0
    J[row, bidx] = 6.0 * (sig.g - k)
    return J


# ---------------------------------------------------------------------------
# log-holonomies and Dehn coefficients


def uv(x, cusp: int) -> Tuple[complex, complex]:
    """Log-dilations (u, v) of the two marked peripheral curves of `cusp`
    (0-based), read off the gamma angles of its tetrahedron pair."""
    k = cusps_of(x)
    if not 0 <= cusp < k:
        raise DomainError("cusp index %d out of range" % cusp)
    lA, lB = 2 * cusp, 2 * cusp + 1
    gA = [x[gamma_index(lA, j)] for j in range(3)]
    gB = [x[gamma_index(lB, j)] for j in range(3)]
    u = complex(
        math.log(math.sin(gA[0]) * math.sin(gB[1]) / (math.sin(gA[1]) * math.sin(gB[0]))),
        gA[2] - gB[2],
    )
    v = complex(
        math.log(math.sin(gA[1]) * math.sin(gB[2]) / (math.sin(gA[2]) * math.sin(gB[1]))),
        gA[0] - gB[0],
    )
    return u, v


def dehn_coefficients(x, cusp: int, complete_tol: float = 1e-9):
    """The real pair (p, q) with p*u + q*v = 2*pi*i at `cusp`, or None when
    the cusp is complete (u = 0).  Raises if u, v are real-proportional,
    which happens only far from the complete solution."""
    u, v = uv(x, cusp)
    if abs(u) < complete_tol:
        return None
    det = u.real * v.imag - u.imag * v.real
    if abs(det) <= 1e-12 * abs(u) * abs(v):
        raise DomainError(
            "u and v are real-proportional at cusp %d; coefficients undefined" % cusp
        )
    two_pi = 2.0 * math.pi
    return (-two_pi * v.real / det, two_pi * u.real / det)


# ---------------------------------------------------------------------------
# filling specifications


def slope_length_pair(p: float, q: float) -> float:
    """Euclidean length of p*mu + q*lambda on the hexagonal torus."""
    return math.sqrt(p * p + q * q - p * q)


@dataclass(frozen=True)
class FillingSpec:
    """Per-cusp filling targets: None leaves the cusp complete, a real
    pair (p, q) != (0, 0) imposes p*u + q*v = 2*pi*i.

    Integer coprime pairs are the genuine Dehn fillings; the solver also
    accepts arbitrary real pairs (the coefficient map is real-valued),
    which is what continuation paths and coefficient-ray studies use.
    `parse` — the user-facing syntax — insists on coprime integers.
    """

    pairs: tuple

    def __post_init__(self):
        for pq in self.pairs:
            if pq is None:
                continue
            p, q = pq
            if p == 0 and q == 0:
                raise DomainError("filling coefficient (0, 0) is not a slope")

    @classmethod
    def unfilled(cls, k: int) -> "FillingSpec":
        return cls((None,) * k)

    @classmethod
    def from_pairs(cls, k: int, pairs) -> "FillingSpec":
        pairs = tuple(None if pq is None else (float(pq[0]), float(pq[1])) for pq in pairs)
        if len(pairs) != k:
            raise DomainError("expected %d cusp entries, got %d" % (k, len(pairs)))
        return cls(pairs)

    @classmethod
    def parse(cls, text: str, k: int) -> "FillingSpec":
        """Parse "p/q" or "inf" entries, comma-separated, one per cusp.
        Integer pairs must be coprime."""
        items = [t.strip() for t in text.split(",")]
        if len(items) != k:
            raise DomainError("expected %d comma-separated entries, got %d" % (k, len(items)))
        pairs = []
        for it in items:
            if it.lower() in ("inf", "infinity", "-"):
                pairs.append(None)
                continue
            if "/" not in it:
                raise DomainError("cannot parse filling entry %r (want p/q or inf)" % it)
            ps, qs = it.split("/", 1)
            try:
                p, q = int(ps), int(qs)
            except ValueError:
                raise DomainError("cannot parse filling entry %r" % it) from None
            if (p, q) == (0, 0):
                raise DomainError("(0, 0) is not a slope")
            if math.gcd(abs(p), abs(q)) != 1:
                raise DomainError("filling coefficients %d/%d are not coprime" % (p, q))
            pairs.append((float(p), float(q)))
        return cls(tuple(pairs))

    def canonicalized(self) -> "FillingSpec":
        """Normalize each pair's sign to p > 0, or p = 0 and q > 0; the
        two signs describe the same unoriented slope."""
        pairs = []
        for pq in self.pairs:
            if pq is None:
                pairs.append(None)
            else:
                p, q = pq
                if p < 0 or (p == 0 and q < 0):
                    p, q = -p, -q
                pairs.append((p, q))
        return FillingSpec(tuple(pairs))

    @property
    def filled_count(self) -> int:
        return sum(1 for pq in self.pairs if pq is not None)

    def min_filled_length(self) -> Optional[float]:
        lengths = [slope_length_pair(*pq) for pq in self.pairs if pq is not None]
        return min(lengths) if lengths else None


# ---------------------------------------------------------------------------
# Newton solver with coefficient continuation


def _extended_residuals(sig: GKSignature, x, targets) -> np.ndarray:
    base = residuals(sig, x)
    extra = np.empty(2 * sig.k)
    for c, pq in enumerate(targets):
        u, v = uv(x, c)
        if pq is None:
            extra[2 * c] = u.real
            extra[2 * c + 1] = u.imag
        else:
            p, q = pq
            w = p * u + q * v
            extra[2 * c] = w.real
            extra[2 * c + 1] = w.imag - 2.0 * math.pi
    return np.concatenate([base, extra])


def _uv_gradient_rows(x, cusp: int, n: int):
    """Gradients of (Re u, Im u, Re v, Im v) at `cusp` as dense rows."""
    lA, lB = 2 * cusp, 2 * cusp + 1
    rows = np.zeros((4, n))
    gA = [gamma_index(lA, j) for j in range(3)]
    gB = [gamma_index(lB, j) for j in range(3)]
    cot = lambda i: 1.0 / math.tan(x[i])
    # Re u
    rows[0, gA[0]] += cot(gA[0]); rows[0, gB[1]] += cot(gB[1])
    rows[0, gA[1]] -= cot(gA[1]); rows[0, gB[0]] -= cot(gB[0])
    # Im u
    rows[1, gA[2]] += 1.0; rows[1, gB[2]] -= 1.0
    # Re v
    rows[2, gA[1]] += cot(gA[1]); rows[2, gB[2]] += cot(gB[2])
    rows[2, gA[2]] -= cot(gA[2]); rows[2, gB[1]] -= cot(gB[1])
    # Im v
    rows[3, gA[0]] += 1.0; rows[3, gB[0]] -= 1.0
    return rows


def _extended_jacobian(sig: GKSignature, x, targets) -> np.ndarray:
    n = sig.n_coords
    Jbase = jacobian(sig, x)
    Jext = np.zeros((2 * sig.k, n))
    for c, pq in enumerate(targets):
        rows = _uv_gradient_rows(x, c, n)
        if pq is None:
            Jext[2 * c] = rows[0]
            Jext[2 * c + 1] = rows[1]
        else:
            p, q = pq
            Jext[2 * c] = p * rows[0] + q * rows[2]
            Jext[2 * c + 1] = p * rows[1] + q * rows[3]
    return np.vstack([Jbase, Jext])


def _clip(x: np.ndarray) -> np.ndarray:
    return np.clip(x, _CLIP, math.pi - _CLIP)


def _newton(sig: GKSignature, x0: np.ndarray, targets, tol: float, max_iter: int = 25):
    """Damped Newton on the square system; backtracks on the residual
    sup-norm and clips iterates into the open angle box."""
    x = _clip(np.array(x0, dtype=float))
    r = _extended_residuals(sig, x, targets)
    norm = np.max(np.abs(r))
    for _ in range(max_iter):
        if norm < tol:
            return x
        J = _extended_jacobian(sig, x, targets)
        try:
            step = np.linalg.solve(J, r)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError("singular Jacobian: %s" % exc) from None
        lam = 1.0
        for _ in range(30):
            xn = _clip(x - lam * step)
            rn = _extended_residuals(sig, xn, targets)
            nn = np.max(np.abs(rn))
            if nn < norm or nn < tol:
                break
            lam *= 0.5
        else:
            raise ConvergenceError("line search stalled at residual %g" % norm)
        x, r, norm = xn, rn, nn
    if norm < tol:
        return x
    raise ConvergenceError("no convergence: residual %g after %d iterations" % (norm, max_iter))


def solve_filling(
    sig: GKSignature,
    spec: FillingSpec,
    *,
    l_safe: float = 20.0,
    tol: float = 1e-10,
    min_length: float = SQRT7,
    check_length: bool = True,
) -> np.ndarray:
    """Solve the square 12k+1 system: structure residuals plus, per cusp,
    p*u + q*v = 2*pi*i (filled) or u = 0 (complete).

    Filled coefficients are continued from the far-filled regime: the
    scaled targets (t*p, t*q) are solved for t stepping geometrically
    down from T0 = max(1, l_safe / min slope length) to 1, warm-starting
    each step, with the step ratio relaxed on Newton failure.  Fails
    loudly (ContinuationError) if the path cannot reach t = 1.
    """
    if len(spec.pairs) != sig.k:
        raise DomainError("spec has %d cusps, signature has %d" % (len(spec.pairs), sig.k))
    spec = spec.canonicalized()
    complete = solve_complete(sig)
    if spec.filled_count == 0:
        return complete.x0.copy()
    lmin = spec.min_filled_length()
    if check_length and lmin < min_length - 1e-12:
        raise DomainError(
            "slope of length %.6g below the hyperbolicity threshold sqrt(7)" % lmin
        )

    def targets_at(t):
        return [None if pq is None else (t * pq[0], t * pq[1]) for pq in spec.pairs]

    t0 = max(1.0, l_safe / lmin)
    x = _newton(sig, complete.x0, targets_at(t0), tol)
    t_good = t0
    rho = 1.5
    while t_good > 1.0:
        t_next = max(1.0, t_good / rho)
        try:
            x_next = _newton(sig, x, targets_at(t_next), tol)
        except ConvergenceError:
            rho = 1.0 + (rho - 1.0) / 2.0
            if t_good - max(1.0, t_good / rho) < 1e-4:
                raise ContinuationError(
                    "continuation step underflow at t=%g" % t_good, t_good
                ) from None
            continue
        x, t_good = x_next, t_next
    return x


# ---------------------------------------------------------------------------
# tangent space and the boundary-bending curve


def tangent_basis(sig: GKSignature) -> np.ndarray:
    """Closed-form basis (2 vectors per cusp) of the tangent space of the
    variety at the complete solution: per cusp block,

        sqrt(3) cos(a) x_i = sin(a) x_{i+3}   (i = 1, 2, 3),
        x_i + x_{i+6} = 0                     (i = 1..6),
        x_1 + x_2 + x_3 = 0,

    and last coordinate zero."""
    cs = solve_complete(sig)
    t = math.sqrt(3.0) * math.cos(cs.alpha_bar) / math.sin(cs.alpha_bar)
    basis = np.zeros((2 * sig.k, sig.n_coords))
    for c in range(sig.k):
        for m, (x1, x2) in enumerate(((1.0, 0.0), (0.0, 1.0))):
            x3 = -x1 - x2
            block = [x1, x2, x3, t * x1, t * x2, t * x3,
                     -x1, -x2, -x3, -t * x1, -t * x2, -t * x3]
            basis[2 * c + m, 12 * c:12 * c + 12] = block
    return basis


def varsigma_derivatives(sig: GKSignature) -> Tuple[np.ndarray, np.ndarray]:
    """First and second derivative vectors at t=0 of the distinguished
    curve through the complete solution (normalization: the second
    derivatives of coordinates 0 and 6 agree).  Both are supported on the
    first cusp block; the second derivative of the last coordinate and of
    every other block vanishes."""
    cs = solve_complete(sig)
    s, c = math.sin(cs.alpha_bar), math.cos(cs.alpha_bar)
    r3 = math.sqrt(3.0)
    first = np.zeros(sig.n_coords)
    first[0:12] = [2 * s, -s, -s, 2 * r3 * c, -r3 * c, -r3 * c,
                   -2 * s, s, s, -2 * r3 * c, r3 * c, r3 * c]
    second = np.zeros(sig.n_coords)
    motif = [8 * c * s, -4 * c * s, -4 * c * s, 2 * r3, -r3, -r3]
    second[0:6] = motif
    second[6:12] = motif
    return first, second


def varsigma_point(sig: GKSignature, t: float, *, tol: float = 1e-12) -> np.ndarray:
    """Solve for the point at parameter t on the constrained curve

        { x_2 = x_3,  per-cusp blocks 2..k complete } on the variety,

    parameterized by x_1 - x_7 = 4 sin(alpha_bar) t, which pins the
    reparameterization freedom so that the second derivative satisfies
    the x_1/x_7 normalization of `varsigma_derivatives`."""
    cs = solve_complete(sig)
    first, second = varsigma_derivatives(sig)
    n = sig.n_coords
    k = sig.k
    rows = []
    # x_2 = x_3 (0-based coords 1, 2)
    r = np.zeros(n); r[1], r[2] = 1.0, -1.0
    rows.append(r)
    for c in range(1, k):
        r = np.zeros(n); r[12 * c + 0], r[12 * c + 1] = 1.0, -1.0
        rows.append(r)
        r = np.zeros(n); r[12 * c + 1], r[12 * c + 2] = 1.0, -1.0
        rows.append(r)
    rpin = np.zeros(n); rpin[0], rpin[6] = 1.0, -1.0
    rows.append(rpin)
    C = np.array(rows)
    target = np.zeros(len(rows))
    target[-1] = 4.0 * math.sin(cs.alpha_bar) * t

    x = _clip(cs.x0 + t * first + 0.5 * t * t * second)
    for _ in range(50):
        r_full = np.concatenate([residuals(sig, x), C @ x - target])
        norm = np.max(np.abs(r_full))
        if norm < tol:
            return x
        J = np.vstack([jacobian(sig, x), C])
        x = _clip(x - np.linalg.solve(J, r_full))
    raise ConvergenceError("curve point at t=%g did not converge (residual %g)" % (t, norm))
