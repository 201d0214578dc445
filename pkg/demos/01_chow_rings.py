"""Chow-ring arithmetic on the variety catalog.

Every intersection number in the package is computed in a finitely presented
graded ring: degree-one generators, monomial rewrite rules, and a degree map
on the top graded piece.  This script walks the presets and a few classical
degree computations.
"""

from instanton_lab import integrate, multiply, preset_ring

# The flag 3-fold: two rulings h1, h2 with h1^3 = h2^3 = 0 and the incidence
# relation h1^2 = h1 h2 - h2^2.  The anticanonical degree is six.
flag = preset_ring("flag3")
h1, h2 = flag.gen("h1"), flag.gen("h2")
h = h1 + h2
print("flag 3-fold:")
print("  h1^2           =", multiply(h1, h1))
print("  (h1+h2)^3      =", integrate(h**3))
print("  h1^2 h2        =", integrate(h1 * h1 * h2))
print("  h1^3           =", integrate(h1**3))

# The triple product of lines: three square-zero rulings, degree six again.
triple = preset_ring("triple_p1")
g1, g2, g3 = triple.gens()
print("triple product:")
print("  h2^2           =", multiply(g2, g2))
print("  (h1+h2+h3)^3   =", integrate((g1 + g2 + g3) ** 3))

# A 3-dimensional scroll of degree d: h^3 = d, f h^2 = 1, f^2 = 0.
scroll = preset_ring("scroll(3,3)")
hs, fs = scroll.gen("h"), scroll.gen("f")
print("scroll(3,3):")
print("  h^3            =", integrate(hs**3))
print("  f h^2          =", integrate(fs * hs * hs))
print("  (h+f) h^2      =", integrate((hs + fs) * hs * hs))

# Projective space and the quadric share the cyclic model Z[H]/(H^(n+1)),
# with top degrees 1 and 2.
print("P^3:  H^3 =", integrate(preset_ring("projective_space(3)").gen("H") ** 3))
print("Q^3:  H^3 =", integrate(preset_ring("quadric(3)").gen("H") ** 3))
