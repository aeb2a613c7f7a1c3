"""The family F_d = (x^{2d+1}, x^{2d-1} y^2, y^{2d+1} z).

Its symbolic powers agree with the ordinary ones up to n = d, then pick up
the shift (x^d y)^{2d+1}.
"""

from monores import family_F, fd_symbolic_closed_form, power, symbolic_power
from monores.families import fd_shift
from monores.ideal import contains_monomial

for d in (1, 2, 3):
    F = family_F(d)
    equal_up_to = max(n for n in range(1, 7) if all(
        symbolic_power(F, k) == power(F, k) for k in range(1, n + 1)))
    closed = all(symbolic_power(F, n) == fd_symbolic_closed_form(d, n) for n in range(1, 7))
    f = fd_shift(d)
    print(f"d={d}: F = {F}")
    print(f"     I^(n) = I^n for n <= {equal_up_to}; closed form matches for n <= 6: {closed}")
    print(f"     {f} in I^({d + 1}): {contains_monomial(symbolic_power(F, d + 1), f)}, "
          f"in I^{d + 1}: {contains_monomial(power(F, d + 1), f)}")
