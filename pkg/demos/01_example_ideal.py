"""A three-generator ideal whose second symbolic power is strictly larger
than its square, yet whose resurgence is exactly 1."""

from monores import (associated_primes, check_containment, parse_ideal, power,
                     primary_decomposition, scan, symbolic_power)
from monores.serialize import emit_text

I = parse_ideal("x,y,z", "(x^3, x*y^2, y^3*z)")
print("I            =", I)
print("components   =", ", ".join(str(q) for q in primary_decomposition(I)))
print("primes       =", ", ".join(str(p) for p in associated_primes(I)))

S2 = symbolic_power(I, 2)
print("I^(2)        =", S2)
print("I^2          =", power(I, 2))

# The extra generator of I^(2) is the witness against I^(2) ⊆ I^2.
print(emit_text(check_containment(I, 2, 2)))

# Scanning a small grid: every non-containment sits on or above the diagonal,
# so the best ratio found is 1.
print(emit_text(scan(I, 6, 6)))
