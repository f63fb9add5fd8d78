"""
Radii for starlike log-harmonic mappings
========================================

The extremal log-harmonic Koebe function is ``f0 = z h0 conj(g0)`` with

    h0 = exp(sum (2 + 1/n) z^n),   g0 = exp(sum (2 - 1/n) z^n).

Each radius below solves a transcendental equation ``lhs(r) = target``
whose target is the distance from 0 to the boundary of the image:
1/(2e) for ``z h0``, 2/e for ``z g0`` and 1/e^2 for ``f0``.

Four of the printed approximations do not solve their own equations.  The
audit at the end prints how far off each one is.
"""

# %%
from bohr import list_problems, get_problem, solve
from bohr.problems import DISCREPANT
from bohr.verify import check_sharpness, series_lhs

LOG_HARMONIC = [p for p in list_problems() if p.startswith(("ali_", "thm2_"))]

# %%
# The equations, as stored.
for pid in LOG_HARMONIC:
    print(f"{pid:<10} {get_problem(pid).equation}")

# %%
# Roots by bisection (tolerance 1e-12).
print(f"\n{'id':<10} {'root':>16} {'printed':>9}")
for pid in LOG_HARMONIC:
    res = solve(pid)
    print(f"{pid:<10} {res.computed_root:16.12f} {res.paper_value:9}")

# %%
# Sharpness from the coefficient side: rebuild each lhs from the first 64
# exponent coefficients and evaluate it at the root.
for pid in ("thm2_7", "thm2_8_G", "thm2_11"):
    r = solve(pid).computed_root
    print(pid, abs(series_lhs(pid, r) - get_problem(pid).target))

# %%
# Discrepancy audit.  The computed root satisfies the equation to machine
# precision; the printed value does not.
print()
for pid in DISCREPANT:
    p = get_problem(pid)
    res = solve(pid)
    at_printed = p.lhs(res.paper_value)
    print(f"{pid}: root {res.computed_root:.6f}, printed {res.paper_value}, "
          f"deviation {res.deviation:.4f}")
    print(f"    lhs(root) - target    = {p.lhs(res.computed_root) - p.target:+.2e}")
    print(f"    lhs(printed) - target = {at_printed - p.target:+.2e}")

# %%
# Two problems carry caveats about their derivation.
for pid in ("thm2_10", "thm2_12_H"):
    print(pid, "->", check_sharpness(pid).notes[0])
