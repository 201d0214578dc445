"""Brute-force classification against the closed-form families.

The enumeration runs the full condition list through the exact engines on
every line bundle in a lattice box and compares with the closed families,
surfacing the a = 0 boundary members explicitly.  The cyclic decision
procedure and the stability case analysis replay exact integer arithmetic.
"""

from instanton_lab import (
    classify_cyclic_lines,
    classify_flag_lines,
    classify_segre_lines,
    cyclic_rank2_stability_cases,
    fano_instanton_bridge,
)

print(classify_flag_lines(box=6, defect=0).to_markdown())
print()
print(classify_flag_lines(box=6, defect=1).to_markdown())
print()
print(classify_segre_lines(box=6, defect=1).to_markdown())
print()

# The cyclic trichotomy: only three shapes of (variety, polarization, defect)
# carry instanton line bundles at all.
for n, u, v, defect in ((3, 1, -4, 0), (3, 2, -4, 1), (3, 1, -3, 1), (4, 2, -5, 0)):
    decision = classify_cyclic_lines(n, u, v, defect)
    print(f"(n={n}, h={u}H, omega={v}H, defect={defect}) -> assertion {decision.assertion}")
    for step in decision.steps:
        print("   ", step)

# Rank-two stability on cyclic n-folds: the guarantees and their exceptions.
print()
for n, u, v, defect, label in (
    (3, 1, -4, 0, "P^3 ordinary"),
    (3, 1, -4, 1, "P^3 non-ordinary"),
    (3, 2, -4, 1, "(P^3, O(2)) non-ordinary"),
    (3, 1, -3, 1, "quadric non-ordinary"),
):
    rep = cyclic_rank2_stability_cases(n, u, v, defect)
    print(
        f"{label}: semistable {rep.semistable_guaranteed}"
        + (f" [{rep.exception_semistable}]" if rep.exception_semistable else "")
        + f", stable {rep.stable_guaranteed}"
        + (f" [{rep.exception_stable}]" if rep.exception_stable else "")
    )

# Bridging with the classical instanton definition on Fano 3-folds.
print()
for i_X in (1, 2, 3, 4):
    rep = fano_instanton_bridge(i_X, 0, 1 if i_X % 2 else 0)
    print(
        f"index {i_X}: q_X^eps = {rep.q_eps}, t_norm = {rep.t_norm},"
        f" forward {rep.forward_case}, backward {rep.backward_case}"
    )
