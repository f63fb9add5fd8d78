"""
Subordinates of the Koebe function
==================================

If ``g = k o phi`` with ``k(z) = z/(1-z)^2`` and ``phi`` a Schwarz function,
then ``|b_n| <= n`` and the majorant of ``g`` is controlled by the distance
1/4 from the origin to the boundary of ``k(D)``.  With a weight ``beta`` on
``|g'(0)|`` the bound

    beta + r/(1-r)^2 <= 1/4

holds up to ``r_beta = (1 - 4 beta) / (3 - 4 beta + sqrt(8 (1 - 2 beta)))``.
"""

# %%
import math

from bohr import closed_form_radius, solve
from bohr.verify import schwarz_samples, subordination_fuzz

# %%
# r_beta at the tabulated weights, with the printed approximations.
for beta in (0.0, 0.125, 0.1875, 0.21875):
    res = solve("subord_beta", beta=beta)
    print(f"beta={beta:<8} r={res.computed_root:.10f}  closed {res.closed_form:.10f}  printed {res.paper_value}")

print("3 - sqrt 8  =", 3 - math.sqrt(8))
print("5 - 2 sqrt 6 =", 5 - 2 * math.sqrt(6))

# %%
# The radius shrinks to zero as beta -> 1/4.
for beta in (0.24, 0.249, 0.2499):
    print(beta, closed_form_radius("subord_beta", beta=beta))

# %%
# The Schwarz functions used for fuzzing: a few forced edge cases
# (identity, c = 0, |c| = 0.95) and then seeded random c.
for s in schwarz_samples(seed=1, count=3):
    print(s.description)

# %%
# 200 random subordinates at three weights.  The identity case is the Koebe
# function itself, for which the bound is attained.
for beta in (0.0, 0.125, 0.1875):
    rep = subordination_fuzz(seed=1, count=200, beta=beta)
    print(rep.check_id, "passed" if rep.passed else "FAILED")
    for note in rep.notes[1:]:
        print("   ", note)
