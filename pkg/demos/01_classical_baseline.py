"""
The classical Bohr radius 1/3
=============================

For an analytic self-map of the disk with ``|f| < 1`` the majorant
``sum |a_n| r^n`` stays below 1 up to ``r = 1/3``.  The disk automorphisms

    phi_a(z) = (a - z) / (1 - a z)

are the extremal family.  Their majorant has the closed form
``a + (1 - a^2) r / (1 - a r)``, which crosses 1 at ``r = 1/(1 + 2a)``.
As ``a -> 1`` that radius decreases to 1/3.
"""

# %%
import numpy as np

from bohr import majorant_sum, phi_a_coeffs, solve

# %%
# Coefficients: a, then -(1 - a^2) a^(n-1).
c = phi_a_coeffs(0.5, order=8)
print(np.round(c.real, 6))

# %%
# The majorant computed from 64 coefficients against the closed form.
for a in (0.1, 0.5, 0.9):
    r = 1 / (1 + 2 * a)
    print(f"a={a}: radius {r:.6f}  series majorant {majorant_sum(phi_a_coeffs(a), r):.12f}")

# %%
# The same radius from the bisection solver.
for a in (0.1, 0.3, 0.5, 0.7, 0.9):
    res = solve("classical_phi", a=a)
    print(f"{res.label:<22} root {res.computed_root:.12f}   closed form {res.closed_form:.12f}")

# %%
# Pushing a toward 1 shows the limit.
a = np.array([0.9, 0.99, 0.999, 0.9999])
print(1 / (1 + 2 * a))
