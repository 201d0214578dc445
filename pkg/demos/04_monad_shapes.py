"""Monad shapes attached to instanton bundles.

On projective space the Beilinson theorem pins the three terms of the
defining monad; on aCM varieties the outer terms are forced and the middle
term is an aCM bundle subject to integer constraints.  On quadrics and low
scrolls the known aCM/Ulrich bundles make the middle term explicit.
"""

from instanton_lab import catalog, monad_acm, monad_pn, monad_quadric_ordinary, monads, rr

# Ordinary rank-two instantons on P^3 with quantum number k have
# chi = 2 - 2k and the symmetric linear monad below.
for k in (0, 1, 2, 3):
    shape = monad_pn(3, 0, k, 2 - 2 * k)
    print(f"P^3, k = {k}:  {shape.render()}   (rank {shape.cohomology_rank()})")

# The non-ordinary shape carries the two twisted differentials; its
# alternating first Chern class reproduces the Chern-polynomial value.
shape = monad_pn(3, 1, 1, 0, h0E=2, hnE=2)
print("non-ordinary P^3:", shape.render())
print("  alternating c1 =", shape.alternating_c1(), "=", rr.chern_poly_instanton_pn(3, 2 * (0 + 3 * 1), 1, 1)[0])

# aCM monads: with defect 0 the outer terms are an Ulrich-dual pair and the
# constraint values force the middle term to be Ulrich.
acm = monad_acm(catalog.quadric(3), 0, 2)
print("quadric aCM monad:", acm.render())
for c in acm.constraints:
    print(f"  {c.name} = {c.value}")

# On the 3-quadric the Ulrich middle term is spinorial: s = k + 1 copies.
for k in range(0, 5):
    print(f"quadric n=3, rank 2, k={k}: s = {monad_quadric_ordinary(3, 2, k).total}")
print("quadric n=5, rank 2, k=1: s =", monad_quadric_ordinary(5, 2, 1).total)

# Quasi-linear monads of non-ordinary bundles on P^n: b0 = r/2 + k + a.
q = monads.monad_space_nonordinary(3, 2, 2, 0, 0)
print("quasi-linear P^3:", q.render())

# Low scrolls: the filtration multiplicities of the Ulrich middle term.
rep = monads.monad_scroll3(3, 2, 1, (0, 0, 0))
print("scroll(deg 3) multiplicities:", rep.multiplicities, "|", rep.relation)
