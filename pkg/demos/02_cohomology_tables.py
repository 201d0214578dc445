"""Exact line-bundle cohomology across the catalog.

Each variety family has its own closed-form engine: binomials and Bott's
formula on projective space, the ambient restriction on quadrics, Kunneth on
products, Borel-Weil-Bott on the flag 3-fold, symmetric powers on scrolls.
A cohomology table collects the vectors of one bundle over a twist window.
"""

from instanton_lab import (
    bott_pn,
    build_table,
    coh_flag3,
    coh_product,
    coh_projective_space,
    coh_quadric,
    coh_scroll_p1,
    flag3,
    projective_space,
    triple_p1,
)

print("O(2) on P^3:          ", coh_projective_space(3, 2).dims)
print("Omega^1(1) on P^3:    ", bott_pn(3, 1, 1).dims, " (zero: Bott vanishing)")
print("Omega^1 on P^3:       ", bott_pn(3, 1, 0).dims, " (a single middle class)")
print("O(1) on the 3-quadric:", coh_quadric(3, 1).dims)
print("O(0,1,-2) on (P^1)^3: ", coh_product([(1, 0), (1, 1), (1, -2)]).dims)

# Borel-Weil-Bott: the dotted Weyl orbit of (a1+1, a2+1) either meets a wall
# (everything vanishes) or contributes one Weyl dimension in one degree.
print("flag O(-2 h1 + 2 h2): ", coh_flag3(-2, 2).dims)
print("flag O(h1 + h2):      ", coh_flag3(1, 1).dims)

# Scrolls over P^1: pushing forward O(t h + a f) splits into line bundles
# indexed by degree-t multisets of the split degrees; the window
# 1 - n <= t <= -1 is cohomology-free.
print("scroll(1,1,1) O(h):   ", coh_scroll_p1((1, 1, 1), 1, 0).dims)
print("scroll(1,1,1) O(-h+5f):", coh_scroll_p1((1, 1, 1), -1, 5).dims)

# Tables: the raw material of the instanton checker.
table = build_table(triple_p1(), (-1, 1, 3), (-4, 1))
print("\ntable of O(-1,1,3) on the triple product:")
for t in table.twists():
    print(f"  t = {t:+d}:  {table.row(t).dims}   chi = {table.chi_at(t)}")
print("JSON:", table.to_json()["window"], "rank", table.to_json()["rank"])
