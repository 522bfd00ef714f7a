"""Commensurability of fillings of the chain manifold (odd k).

For the odd-k chain manifold the commensurability class of a filling is
decided exactly by three numbers: the sums (a, b, c) of dihedral angles
arranged around the unique compact edge, one sum per apex.  Rotating the
filling slopes by pi/3 cycles (a, b, c), giving triples of geometrically
similar but pairwise non-commensurable manifolds; exchanging cusps 1 and
3 moves the filled cusp without changing the sums, giving similar
commensurable non-homeomorphic pairs.
"""

import math

from mgk import varsigma_point
from mgk.commensurability_xk import XkSignature, abc, commensurable, tau_13, theta_r

print(__doc__)
sig = XkSignature(3)

print("Deform the k=3 chain manifold along the boundary-bending curve")
print("(cusp 1 fills, cusps 2 and 3 stay complete):")
y = varsigma_point(sig.gk, 0.06)
names = ["y", "rot y", "rot^2 y"]
points = [y, theta_r(y, sig), theta_r(theta_r(y, sig), sig)]
for name, p in zip(names, points):
    inv = abc(p, sig)
    print("  %-7s (a, b, c) = (%.9f, %.9f, %.9f)   a+b+c+6beta-2pi = %.1e"
          % (name, inv.a, inv.b, inv.c, inv.a + inv.b + inv.c + 6 * p[-1] - 2 * math.pi))

print()
for i in range(3):
    for j in range(i + 1, 3):
        print("  %s vs %s commensurable: %s"
              % (names[i], names[j], commensurable(points[i], points[j], sig)))

print()
swapped = tau_13(y, sig)
inv_y, inv_s = abc(y, sig), abc(swapped, sig)
print("Exchanging cusps 1 and 3 (fills cusp 3 instead of cusp 1):")
print("  (a, b, c) before: (%.9f, %.9f, %.9f)" % (inv_y.a, inv_y.b, inv_y.c))
print("  (a, b, c) after:  (%.9f, %.9f, %.9f)" % (inv_s.a, inv_s.b, inv_s.c))
print("  commensurable: %s  (non-homeomorphic: different cusp filled)"
      % commensurable(y, swapped, sig))
