"""Named extremal functions of the unit disk and their coefficients.

The catalog covers the disk automorphism ``phi_a(z) = (a - z)/(1 - a z)``, the
Koebe function ``z/(1-z)^2``, the log-harmonic Koebe factors

    h0(z) = exp(2z/(1-z)) / (1 - z) = exp(sum (2 + 1/n) z^n)
    g0(z) = (1 - z) exp(2z/(1-z))   = exp(sum (2 - 1/n) z^n)

together with ``H0 = z h0``, ``G0 = z g0``, the non-analytic
``f0 = z h0 conj(g0)``, and the wedge maps ``F_{alpha,t} = t ((1+z)/(1-z))^alpha``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import (
    DEFAULT_ORDER,
    CoeffSeries,
    exp_series,
    mul_series,
)


class MapKind(str, enum.Enum):
    PHI_A = "PhiA"
    KOEBE = "Koebe"
    H0_FACTOR = "H0factor"
    G0_FACTOR = "G0factor"
    H0 = "H0"
    G0 = "G0"
    F0 = "F0"
    WEDGE = "Wedge"


ANALYTIC_KINDS = frozenset(MapKind) - {MapKind.F0}


def check_a(a: float):
    if not (0.0 <= a < 1.0):
        raise DomainError(f"a must lie in [0, 1), got {a!r}")


def check_alpha(alpha: float):
    if not (1.0 <= alpha <= 2.0):
        raise DomainError(f"alpha must lie in [1, 2], got {alpha!r}")


@dataclass(frozen=True)
class ExtremalMap:
    """An extremal function with its parameters.

    ``rotation`` pre-rotates the argument: the map evaluated is ``f(e^{i rotation} z)``.
    """

    kind: MapKind
    a: float = 0.0
    alpha: float = 1.0
    t: float = 1.0
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", MapKind(self.kind))
        if self.kind is MapKind.PHI_A:
            check_a(self.a)
        if self.kind is MapKind.WEDGE:
            check_alpha(self.alpha)
            if not self.t > 0:
                raise DomainError(f"t must be positive, got {self.t!r}")

    @property
    def analytic(self) -> bool:
        return self.kind in ANALYTIC_KINDS

    def __call__(self, z):
        return eval_map(self, z)

    def coeffs(self, order: int = DEFAULT_ORDER) -> CoeffSeries:
        return map_coeffs(self, order)


def exponent_coeff(kind, n: int) -> float:
    """n-th coefficient of ``log h0`` (``2 + 1/n``) or ``log g0`` (``2 - 1/n``)."""
    kind = MapKind(kind)
    if n < 1:
        raise DomainError(f"exponent coefficients start at n = 1, got {n}")
    if kind is MapKind.H0_FACTOR:
        return 2.0 + 1.0 / n
    if kind is MapKind.G0_FACTOR:
        return 2.0 - 1.0 / n
    raise DomainError(f"{kind.value} has no exponent representation")


def exponent_series(kind, order: int = DEFAULT_ORDER) -> CoeffSeries:
    """``[0, a_1, ..., a_N]`` for ``kind`` in {H0factor, G0factor}."""
    c = [0.0] + [exponent_coeff(kind, n) for n in range(1, order + 1)]
    return CoeffSeries(c)


def f0_exponent_series(order: int = DEFAULT_ORDER, t: float = 0.0) -> CoeffSeries:
    """``a_n + e^{it} b_n`` from the exponents of ``h0`` and ``g0``.

    These are the coefficients in the Bohr functional of ``f0``; the
    verifier only uses ``t = 0``, where they reduce to ``4``.
    """
    a = exponent_series(MapKind.H0_FACTOR, order).coeffs
    b = exponent_series(MapKind.G0_FACTOR, order).coeffs
    return CoeffSeries(a + np.exp(1j * t) * b)


def _check_disk(z):
    z = np.asarray(z, dtype=np.complex128)
    if np.any(~(np.abs(z) < 1.0)):
        raise DomainError("point must lie in the open unit disk")
    return z


def _finish(w):
    return complex(w) if np.ndim(w) == 0 else w


def eval_map(m: ExtremalMap, z):
    """Closed-form value of ``m`` at ``z`` (scalar or array, ``|z| < 1``)."""
    z = _check_disk(z)
    if m.rotation:
        z = z * np.exp(1j * m.rotation)
    k = m.kind
    with np.errstate(over="ignore", invalid="ignore"):
        if k is MapKind.PHI_A:
            w = (m.a - z) / (1.0 - m.a * z)
        elif k is MapKind.KOEBE:
            w = z / (1.0 - z) ** 2
        elif k is MapKind.H0_FACTOR:
            w = np.exp(2.0 * z / (1.0 - z)) / (1.0 - z)
        elif k is MapKind.G0_FACTOR:
            w = (1.0 - z) * np.exp(2.0 * z / (1.0 - z))
        elif k is MapKind.H0:
            w = z * np.exp(2.0 * z / (1.0 - z)) / (1.0 - z)
        elif k is MapKind.G0:
            w = z * (1.0 - z) * np.exp(2.0 * z / (1.0 - z))
        elif k is MapKind.F0:
            w = z * (1.0 - np.conj(z)) / (1.0 - z) * np.exp(np.real(4.0 * z / (1.0 - z)))
        elif k is MapKind.WEDGE:
            # principal branch; Re((1+z)/(1-z)) > 0 on the disk
            w = m.t * ((1.0 + z) / (1.0 - z)) ** m.alpha
        else:  # pragma: no cover
            raise DomainError(f"unknown map kind {k!r}")
    return _finish(w)


def phi_a_coeffs(a: float, order: int = DEFAULT_ORDER) -> CoeffSeries:
    """Taylor coefficients of ``(a - z)/(1 - a z)``."""
    check_a(a)
    c = np.empty(order + 1)
    c[0] = a
    c[1:] = -(1.0 - a * a) * a ** np.arange(order)
    return CoeffSeries(c)


def koebe_coeffs(order: int = DEFAULT_ORDER) -> CoeffSeries:
    return CoeffSeries(np.arange(order + 1, dtype=float))


def binomial_coeffs(alpha: float, order: int, sign: float = 1.0) -> CoeffSeries:
    """Coefficients of ``(1 + sign*z)^alpha`` from the ratio recurrence."""
    c = np.empty(order + 1)
    c[0] = 1.0
    for n in range(1, order + 1):
        c[n] = c[n - 1] * (alpha - n + 1) / n * sign
    return CoeffSeries(c)


def wedge_coeffs(alpha: float, order: int = DEFAULT_ORDER) -> CoeffSeries:
    """``A_0 = 1, A_1, ...`` of ``((1+z)/(1-z))^alpha`` as a product of two binomial series."""
    check_alpha(alpha)
    return mul_series(
        binomial_coeffs(alpha, order),
        binomial_coeffs(-alpha, order, sign=-1.0),
    )


def map_coeffs(m: ExtremalMap, order: int = DEFAULT_ORDER) -> CoeffSeries:
    """Taylor coefficients of an analytic catalog map, rotation applied."""
    k = m.kind
    if k is MapKind.PHI_A:
        s = phi_a_coeffs(m.a, order)
    elif k is MapKind.KOEBE:
        s = koebe_coeffs(order)
    elif k in (MapKind.H0_FACTOR, MapKind.G0_FACTOR):
        s = exp_series(exponent_series(k, order))
    elif k is MapKind.H0:
        s = exp_series(exponent_series(MapKind.H0_FACTOR, order)).shift()
    elif k is MapKind.G0:
        s = exp_series(exponent_series(MapKind.G0_FACTOR, order)).shift()
    elif k is MapKind.WEDGE:
        s = wedge_coeffs(m.alpha, order).scale(m.t)
    else:
        raise DomainError("f0 is not analytic and has no Taylor series")
    return s.rotate(m.rotation) if m.rotation else s


class Family(str, enum.Enum):
    H = "H"
    G = "G"
    F = "F"


_DISTANCE = {
    Family.H: 1.0 / (2.0 * math.e),
    Family.G: 2.0 / math.e,
    Family.F: math.exp(-2.0),
}


@dataclass(frozen=True)
class DistanceConstant:
    family: Family
    lower: float
    upper: float = 1.0


def distance_constant(family) -> float:
    """Sharp lower bound on the distance from 0 to the image boundary.

    ``H = z h``: 1/(2e); ``G = z g``: 2/e; ``f = z h conj(g)``: 1/e^2.
    """
    return _DISTANCE[Family(family)]


def distance_bounds(family) -> DistanceConstant:
    fam = Family(family)
    return DistanceConstant(fam, _DISTANCE[fam])
