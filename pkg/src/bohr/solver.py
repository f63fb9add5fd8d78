"""Bisection for increasing functions.

Every radius in the catalog is the unique solution of ``f(r) = target`` for an
increasing ``f`` on (0, 1).  Plain bisection is used on purpose: it is
deterministic, needs no derivatives, and its error after ``k`` steps is known
in advance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketError, DomainError, NumericError

DEFAULT_TOL = 1e-12
DEFAULT_LO = 1e-9
DEFAULT_HI = 1.0 - 1e-6


@dataclass(frozen=True)
class Bracket:
    """Interval with ``f_lo < target <= f_hi``."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    iterations: int = 0

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return self.lo + 0.5 * (self.hi - self.lo)


def _value(f, r: float) -> float:
    v = float(f(r))
    # +inf is an honest overflow of an increasing function and compares fine
    if math.isnan(v) or v == -math.inf:
        raise NumericError(f"function value at r={r!r} is {v!r}")
    return v


def bisect(f, target: float, lo: float = DEFAULT_LO, hi: float = DEFAULT_HI,
           tol: float = DEFAULT_TOL, max_iter: int = 200) -> Bracket:
    """Shrink ``[lo, hi]`` around the crossing ``f(r) = target`` to width ``<= tol``."""
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    f_lo, f_hi = _value(f, lo), _value(f, hi)
    if not (f_lo < target <= f_hi):
        raise BracketError(
            f"no crossing of {target!r} on [{lo!r}, {hi!r}]: "
            f"f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
    it = 0
    while hi - lo > tol:
        if it >= max_iter:
            raise NumericError(f"bisection did not reach tol={tol!r} in {max_iter} steps")
        mid = lo + 0.5 * (hi - lo)
        if mid <= lo or mid >= hi:
            break  # interval is a single ulp wide
        f_mid = _value(f, mid)
        if f_mid < target:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        it += 1
    return Bracket(lo, hi, f_lo, f_hi, it)


def solve_increasing(f, target: float, lo: float = DEFAULT_LO,
                     hi: float = DEFAULT_HI, tol: float = DEFAULT_TOL) -> float:
    """Midpoint of the final bisection bracket for ``f(r) = target``."""
    return bisect(f, target, lo, hi, tol).midpoint
