import numpy as np

from mgk.deformation import FillingSpec, GKSignature, solve_filling


def solved_point(sig: GKSignature, pairs):
    """Solve the structure with the given per-cusp coefficient pairs
    (None = complete); plain wrapper used all over the suite."""
    return solve_filling(sig, FillingSpec.from_pairs(sig.k, pairs))


def random_filled_points(sig: GKSignature, count, seed, min_len=12.0, max_len=40.0):
    """Solved structures with random real coefficient pairs on every
    cusp, uniformly spread in direction with slope length in range."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        pairs = []
        for _ in range(sig.k):
            ang = rng.uniform(0.0, 2.0 * np.pi)
            ln = rng.uniform(min_len, max_len)
            p, q = np.cos(ang), np.sin(ang)
            scale = ln / np.sqrt(p * p + q * q - p * q)
            pairs.append((p * scale, q * scale))
        out.append(solved_point(sig, pairs))
    return out
