"""Sums of ideals in disjoint variables.

Each summand alone has resurgence 1, but the sum does not contain its
fifth symbolic power in its fourth power.
"""

from fractions import Fraction

from monores import (check_containment, detect_blocks, disjoint_sum, evaluate_max_sup,
                     family_F, iterated_sum_bound, scan, sharp_sum_bound, symbolic_power,
                     symbolic_power_blockwise)
from monores.serialize import emit_text, format_fraction

P = disjoint_sum(family_F(1), family_F(2, ("t", "u", "v")))
print("P =", P)

blocks = detect_blocks(P)
for s in range(1, 5):
    same = symbolic_power_blockwise(blocks, s) == symbolic_power(P, s)
    print(f"s={s}: blockwise expansion agrees with the direct computation: {same}")

for n in (2, 3, 4):
    print(emit_text(check_containment(P, n, n - 1)))
print(emit_text(scan(P, 5, 4)))

print(emit_text(sharp_sum_bound(Fraction(3, 2), 1)))
print(emit_text(sharp_sum_bound(2, 1)))
enum, closed = evaluate_max_sup(Fraction(4, 3), Fraction(5, 4), 40)
print("enumerated sup", format_fraction(enum), "closed form", format_fraction(closed))
print("iterated sums of a resurgence-1 ideal:",
      ", ".join(format_fraction(v) for v in iterated_sum_bound(1, 6)))
