"""Star configurations and the three-block ideal P_2."""

from monores import (Monomial, pm_ideal, power, product_witness, rho_a_star_configuration,
                     star_ideal, symbolic_power)
from monores.families import rename, star_primes
from monores.ideal import contains_monomial, intersect_all
from monores.serialize import emit_text, format_fraction

for m, d in ((2, 3), (2, 4), (3, 5)):
    I = star_ideal(m, d)
    same = intersect_all(star_primes(m, d, I.ring)) == I
    print(f"I_{m},{d}: {I.ngens} generators, equals the intersection of its primes: {same}, "
          f"asymptotic reference {format_fraction(rho_a_star_configuration(m, d))}")

star = star_ideal(2, 3)
f = Monomial(star.ring, (1, 1, 1))
print(f"{f} in I^(2): {contains_monomial(symbolic_power(star, 2), f)}, "
      f"in I^2: {contains_monomial(power(star, 2), f)}")

parts = []
for k in (1, 2, 3):
    I = rename(star, k)
    parts.append((I, 2, 2, Monomial(I.ring, f.exponents)))
cert = product_witness(parts)
print("P_2 =", cert.ideal)
print("equals pm_ideal(2):", cert.ideal == pm_ideal(2))
print(emit_text(cert), "ratio", format_fraction(cert.ratio))
