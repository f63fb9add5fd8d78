"""
Concave wedges
==============

``F(z) = ((1+z)/(1-z))^alpha`` maps the disk onto the sector
``|arg w| < alpha pi / 2``.  Its coefficients ``A_n`` are positive for
``alpha`` in [1, 2], so the Bohr sum is ``F(r) - 1``.  With an extra
``beta`` the radius becomes

    r = ((2 - beta)^(1/alpha) - 1) / ((2 - beta)^(1/alpha) + 1).
"""

# %%
import numpy as np

from bohr import closed_form_radius, solve, wedge_coeffs
from bohr.verify import check_wedge

# %%
print(wedge_coeffs(1.0, 6).real)  # half-plane: 1, 2, 2, 2, ...
print(wedge_coeffs(2.0, 6).real)  # slit plane: 1, 4n
print(np.round(wedge_coeffs(1.5, 6).real, 6))

# %%
for alpha in (1.0, 1.25, 1.5, 1.75, 2.0):
    print(f"alpha={alpha}: r = {closed_form_radius('wedge', alpha=alpha):.10f}")

# %%
# beta eats into the budget; past beta = 1 nothing is left.
for beta in (0.0, 0.25, 0.5, 0.9, 1.0, 1.5):
    r = closed_form_radius("wedge_improved", alpha=1.5, beta=beta)
    print(f"beta={beta}: r = {r:.10f}")

print(solve("wedge_improved", alpha=1.0, beta=0.0).computed_root)

# %%
for alpha, beta in ((1.0, 0.0), (1.5, 0.5), (2.0, 0.25), (1.5, 1.0)):
    rep = check_wedge(alpha, beta)
    print(rep.check_id, rep.passed, rep.notes[-1])
