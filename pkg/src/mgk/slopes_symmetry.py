"""Exact integer layer: slopes on the hexagonal torus, the dihedral
isometry group action, slope-set equivalence, and the transport of those
isometries to symmetries of the deformation variety.

A slope is the class +-(p, q) of a primitive vector in the marked basis
(mu, lambda) of a cusp torus, realized as p + q*exp(2*pi*i/3) in the
hexagonal lattice, so its length is sqrt(p^2 + q^2 - p*q).  The isometry
group of the torus is dihedral of order 12, generated by the rotation
r (angle pi/3) and the reflection s fixing the mu-axis; on coefficient
pairs these act by the integer matrices

    r: (p, q) -> (p - q, p),      s: (p, q) -> (p - q, -q).

On the variety side, each cusp carries symmetries generated by apex
permutations of its tetrahedron pair and the swap of the pair; `phi_r`
and `phi_s` are the two generators whose transported action on Dehn
coefficients is exactly r and s above, and cusp permutations transport
to relabelling of the tori.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .deformation import FillingSpec, alpha_index, cusps_of, gamma_index
from .hyptrig import DomainError

SQRT7 = math.sqrt(7.0)

MAX_BRUTE_FORCE_K = 8


# ---------------------------------------------------------------------------
# slopes


@dataclass(frozen=True, order=True)
class Slope:
    """Canonicalized primitive class +-(p, q): p > 0, or p = 0 and q = 1."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise DomainError("(%d, %d) is not primitive" % (self.p, self.q))
        if not (self.p > 0 or (self.p == 0 and self.q > 0)):
            raise DomainError("(%d, %d) is not in canonical sign form" % (self.p, self.q))

    @classmethod
    def of(cls, p: int, q: int) -> "Slope":
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def length_sq(self) -> int:
        return self.p * self.p + self.q * self.q - self.p * self.q


def slope_length(s: Slope) -> float:
    return math.sqrt(s.length_sq)


# ---------------------------------------------------------------------------
# the dihedral group of order 12

_R_MATRIX = np.array([[1, -1], [1, 0]], dtype=int)
_S_MATRIX = np.array([[1, -1], [0, -1]], dtype=int)


@dataclass(frozen=True)
class D6Element:
    """r^rot s^refl in the dihedral group of order 12 (s applied first)."""

    rot: int
    refl: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rot", self.rot % 6)

    @classmethod
    def identity(cls) -> "D6Element":
        return cls(0, False)

    def matrix(self) -> np.ndarray:
        m = np.linalg.matrix_power(_R_MATRIX, self.rot)
        if self.refl:
            m = m @ _S_MATRIX
        return m

    def compose(self, other: "D6Element") -> "D6Element":
        # (self * other): apply `other` first
        rot = self.rot + (-other.rot if self.refl else other.rot)
        return D6Element(rot, self.refl ^ other.refl)

    def inverse(self) -> "D6Element":
        if self.refl:
            return self
        return D6Element(-self.rot, False)


def d6_act(e: D6Element, s: Slope) -> Slope:
    p, q = e.matrix() @ (s.p, s.q)
    return Slope.of(int(p), int(q))


def d6_orbit(s: Slope):
    """The full dihedral orbit of a slope, as a sorted tuple."""
    out = {d6_act(D6Element(m, refl), s) for m in range(6) for refl in (False, True)}
    return tuple(sorted(out))


def c6_orbit(s: Slope):
    """Orbit under rotations only (the orientation-preserving classes);
    on unoriented slopes rotations act through their quotient by the
    half-turn, so the orbit has at most 3 elements."""
    return tuple(sorted({d6_act(D6Element(m), s) for m in range(6)}))


def classify_slopes(max_len_sq: int):
    """All slopes with squared length <= max_len_sq, grouped into
    dihedral orbits.  Returns a list of (length_sq, orbits) pairs in
    increasing length order, each orbit a sorted tuple of slopes."""
    if max_len_sq < 1:
        raise DomainError("max_len_sq must be >= 1")
    bound = int(math.isqrt(4 * max_len_sq // 3)) + 2
    slopes = set()
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            if p == 0 and q != 1:
                continue
            if p > 0 or (p == 0 and q > 0):
                if math.gcd(abs(p), abs(q)) != 1:
                    continue
                s = Slope(p, q)
                if s.length_sq <= max_len_sq:
                    slopes.add(s)
    by_len = {}
    seen = set()
    for s in sorted(slopes):
        if s in seen:
            continue
        orbit = d6_orbit(s)
        seen.update(orbit)
        by_len.setdefault(s.length_sq, []).append(orbit)
    return [(lsq, tuple(sorted(orbs))) for lsq, orbs in sorted(by_len.items())]


def hyperbolic_filling_check(spec: FillingSpec) -> bool:
    """True iff every filled slope clears the length-sqrt(7) threshold,
    so the filled manifold is hyperbolic.  Exact for integer pairs."""
    for pq in spec.pairs:
        if pq is None:
            continue
        p, q = pq
        if float(p).is_integer() and float(q).is_integer():
            p, q = int(p), int(q)
            if p * p + q * q - p * q < 7:
                return False
        elif p * p + q * q - p * q < 7.0 - 1e-12:
            return False
    return True


# ---------------------------------------------------------------------------
# slope sets on k marked tori

SlopeSet = Tuple[Optional[Slope], ...]


def make_slope_set(k: int, entries) -> SlopeSet:
    """Slope set from {torus_index (0-based): (p, q)} or a k-sequence."""
    if isinstance(entries, dict):
        out = [None] * k
        for i, pq in entries.items():
            if not 0 <= i < k:
                raise DomainError("torus index %d out of range" % i)
            out[i] = pq if isinstance(pq, Slope) else Slope.of(*pq)
        return tuple(out)
    entries = list(entries)
    if len(entries) != k:
        raise DomainError("expected %d entries" % k)
    return tuple(
        None if e is None else (e if isinstance(e, Slope) else Slope.of(*e))
        for e in entries
    )


@dataclass(frozen=True)
class SlopeSetIsometry:
    """perm[i] is the image torus of torus i; local[i] acts on torus i
    before the relabelling."""

    perm: Tuple[int, ...]
    local: Tuple[D6Element, ...]

    @property
    def orientation_preserving(self) -> bool:
        return not any(e.refl for e in self.local)

    def apply(self, sset: SlopeSet) -> SlopeSet:
        k = len(sset)
        out = [None] * k
        for i, s in enumerate(sset):
            if s is not None:
                out[self.perm[i]] = d6_act(self.local[i], s)
        return tuple(out)

    def inverse(self) -> "SlopeSetIsometry":
        k = len(self.perm)
        inv_perm = [0] * k
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
        inv_local = tuple(self.local[inv_perm[j]].inverse() for j in range(k))
        return SlopeSetIsometry(tuple(inv_perm), inv_local)


def _local_candidates(orientation_preserving: bool):
    # rotations act on unoriented slopes through the order-3 quotient;
    # with reflections there are six effective classes
    rots = [D6Element(m) for m in range(3)]
    if orientation_preserving:
        return rots
    return rots + [D6Element(m, True) for m in range(3)]


def slope_sets_equivalent(
    a: SlopeSet, b: SlopeSet, orientation_preserving: bool = True
) -> Optional[SlopeSetIsometry]:
    """Search the marked-torus isometry group (permutations semidirect
    local dihedral/rotation factors) for a witness taking `a` onto `b`.
    Exhaustive and exact; returns None if no witness exists."""
    k = len(a)
    if len(b) != k:
        raise DomainError("slope sets live on different numbers of tori")
    if k > MAX_BRUTE_FORCE_K:
        raise DomainError("brute-force search capped at k=%d" % MAX_BRUTE_FORCE_K)
    cands = _local_candidates(orientation_preserving)
    for perm in itertools.permutations(range(k)):
        locals_per_torus = []
        ok = True
        for i in range(k):
            src, dst = a[i], b[perm[i]]
            if (src is None) != (dst is None):
                ok = False
                break
            if src is None:
                locals_per_torus.append(D6Element.identity())
                continue
            match = next((e for e in cands if d6_act(e, src) == dst), None)
            if match is None:
                ok = False
                break
            locals_per_torus.append(match)
        if ok:
            return SlopeSetIsometry(perm, tuple(locals_per_torus))
    return None


def enumerate_equivalent_sets(a: SlopeSet):
    """Full orbit of a slope set under the orientation-preserving group,
    by brute force; sorted for reproducibility."""
    k = len(a)
    if k > MAX_BRUTE_FORCE_K:
        raise DomainError("brute-force enumeration capped at k=%d" % MAX_BRUTE_FORCE_K)
    rots = _local_candidates(orientation_preserving=True)
    orbit = set()
    for perm in itertools.permutations(range(k)):
        for locs in itertools.product(rots, repeat=k):
            orbit.add(SlopeSetIsometry(perm, locs).apply(a))
    return sorted(orbit, key=lambda ss: tuple((s.p, s.q) if s else (0, 0) for s in ss))


# ---------------------------------------------------------------------------
# symmetries of the deformation variety

# apex 3-cycle used by the rotation generator: sigma(0)=2, sigma(1)=0, sigma(2)=1
_SIGMA_R = (2, 0, 1)
_SIGMA_S = (1, 0, 2)


def _inverse_perm(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def apex_permutation(x, cusp: int, sigma: Sequence[int]) -> np.ndarray:
    """Permute the three apices of both tetrahedra of `cusp` by sigma
    (new angle at apex j = old angle at apex sigma^{-1}(j))."""
    k = cusps_of(x)
    if not 0 <= cusp < k:
        raise DomainError("cusp index out of range")
    inv = _inverse_perm(tuple(sigma))
    y = np.array(x, dtype=float)
    for l in (2 * cusp, 2 * cusp + 1):
        for j in range(3):
            y[alpha_index(l, j)] = x[alpha_index(l, inv[j])]
            y[gamma_index(l, j)] = x[gamma_index(l, inv[j])]
    return y


def tetra_swap(x, cusp: int) -> np.ndarray:
    """Exchange the roles of the two tetrahedra of `cusp`."""
    k = cusps_of(x)
    if not 0 <= cusp < k:
        raise DomainError("cusp index out of range")
    y = np.array(x, dtype=float)
    lA, lB = 2 * cusp, 2 * cusp + 1
    for j in range(3):
        y[alpha_index(lA, j)], y[alpha_index(lB, j)] = x[alpha_index(lB, j)], x[alpha_index(lA, j)]
        y[gamma_index(lA, j)], y[gamma_index(lB, j)] = x[gamma_index(lB, j)], x[gamma_index(lA, j)]
    return y


def cusp_permutation(x, kappa: Sequence[int]) -> np.ndarray:
    """Relabel cusps by kappa (new block i = old block kappa^{-1}(i))."""
    k = cusps_of(x)
    if sorted(kappa) != list(range(k)):
        raise DomainError("kappa is not a permutation of 0..k-1")
    inv = _inverse_perm(tuple(kappa))
    y = np.array(x, dtype=float)
    for i in range(k):
        y[12 * i:12 * i + 12] = x[12 * inv[i]:12 * inv[i] + 12]
    return y


def phi_r(x, cusp: int) -> np.ndarray:
    """Variety symmetry transporting to the pi/3 rotation on the cusp
    torus: u -> -v, v -> u + v, Dehn coefficients (p,q) -> (p-q, p)."""
    return apex_permutation(tetra_swap(x, cusp), cusp, _SIGMA_R)


def phi_s(x, cusp: int) -> np.ndarray:
    """Variety symmetry transporting to the reflection fixing the mu-axis:
    u -> -conj(u), v -> conj(u) + conj(v), (p,q) -> (p-q, -q)."""
    return apex_permutation(x, cusp, _SIGMA_S)


def apply_local(x, cusp: int, e: D6Element) -> np.ndarray:
    """Apply the variety symmetry corresponding to a local torus isometry
    (reflection first, then rotations, matching r^rot s^refl)."""
    y = np.array(x, dtype=float)
    if e.refl:
        y = phi_s(y, cusp)
    for _ in range(e.rot):
        y = phi_r(y, cusp)
    return y


def sym_act(psi: SlopeSetIsometry, x) -> np.ndarray:
    """Apply the variety symmetry corresponding to a marked-tori isometry:
    local pieces first, then the cusp relabelling; Dehn coefficients
    transform by the corresponding pushforward."""
    k = cusps_of(x)
    if len(psi.perm) != k:
        raise DomainError("isometry is for %d tori, point has %d cusps" % (len(psi.perm), k))
    y = np.array(x, dtype=float)
    for i in range(k):
        y = apply_local(y, i, psi.local[i])
    return cusp_permutation(y, psi.perm)
