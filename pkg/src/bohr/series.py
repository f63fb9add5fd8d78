"""Truncated power series with dense complex coefficients.

A :class:`CoeffSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N``.  Every binary operation requires both operands to have the
same order and returns a series of that order; terms above ``N`` are dropped.

Truncated majorant sums can be certified with :func:`tail_bound`: if every
discarded coefficient satisfies ``|c_n| <= C`` then the neglected part of
``sum |c_n| r**n`` is at most ``C * r**(N+1) / (1 - r)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OrderMismatchError

DEFAULT_ORDER = 64


class CoeffSeries:
    """Coefficients ``c[0..N]`` of a power series truncated at degree ``N``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128).reshape(-1)
        if c.size == 0:
            raise DomainError("a series needs at least the constant coefficient")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def zeros(cls, order: int) -> "CoeffSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def monomial(cls, degree: int, order: int, value=1.0) -> "CoeffSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        if degree <= order:
            c[degree] = value
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    @property
    def real(self) -> np.ndarray:
        return self._c.real

    def __len__(self):
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self):
        return f"CoeffSeries(order={self.order}, coeffs={self._c!r})"

    def __eq__(self, other):
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def _check(self, other: "CoeffSeries"):
        if not isinstance(other, CoeffSeries):
            raise TypeError(f"expected CoeffSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, CoeffSeries):
            self._check(other)
            return CoeffSeries(self._c + other._c)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CoeffSeries):
            self._check(other)
            return CoeffSeries(self._c - other._c)
        return NotImplemented

    def __neg__(self):
        return CoeffSeries(-self._c)

    def scale(self, s) -> "CoeffSeries":
        return CoeffSeries(self._c * s)

    def __mul__(self, other):
        if isinstance(other, CoeffSeries):
            return mul_series(self, other)
        if np.isscalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return self.scale(other)
        return NotImplemented

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` by Horner's rule."""
        acc = np.zeros_like(np.asarray(z, dtype=np.complex128))
        for c in self._c[::-1]:
            acc = acc * z + c
        return acc

    def rotate(self, theta: float) -> "CoeffSeries":
        """Coefficients of ``f(e^{i theta} z)``."""
        n = np.arange(self._c.size)
        return CoeffSeries(self._c * np.exp(1j * theta * n))

    def shift(self) -> "CoeffSeries":
        """Coefficients of ``z * f(z)``, still truncated at the same order."""
        c = np.zeros_like(self._c)
        c[1:] = self._c[:-1]
        return CoeffSeries(c)


def as_series(c, order: int | None = None) -> CoeffSeries:
    """Coerce a sequence to :class:`CoeffSeries`, zero-padding to ``order``."""
    if isinstance(c, CoeffSeries) and (order is None or c.order == order):
        return c
    arr = np.asarray(c.coeffs if isinstance(c, CoeffSeries) else c,
                     dtype=np.complex128).reshape(-1)
    if order is not None:
        out = np.zeros(order + 1, dtype=np.complex128)
        m = min(order + 1, arr.size)
        out[:m] = arr[:m]
        arr = out
    return CoeffSeries(arr)


def mul_series(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order + 1
    return CoeffSeries(np.convolve(a.coeffs, b.coeffs)[:n])


def exp_series(c: CoeffSeries) -> CoeffSeries:
    """Taylor coefficients of ``exp(sum c_n z^n)`` for a series with ``c[0] = 0``.

    Uses ``b_0 = 1`` and ``m b_m = sum_{k=1..m} k c_k b_{m-k}``, which follows
    from ``B' = C' B``.
    """
    c = as_series(c)
    if c[0] != 0:
        raise DomainError(f"exp_series needs a zero constant term, got {c[0]!r}")
    n_max = c.order
    kc = np.arange(n_max + 1) * c.coeffs
    b = np.zeros(n_max + 1, dtype=np.complex128)
    b[0] = 1.0
    for m in range(1, n_max + 1):
        # kc[1..m] against b[m-1..0]
        b[m] = np.dot(kc[1:m + 1], b[m - 1::-1]) / m
    return CoeffSeries(b)


def log_series(b: CoeffSeries) -> CoeffSeries:
    """Inverse of :func:`exp_series`: coefficients of ``log B`` with ``B(0) = 1``."""
    b = as_series(b)
    if b[0] != 1:
        raise DomainError(f"log_series needs B(0) = 1, got {b[0]!r}")
    n_max = b.order
    bc = b.coeffs
    c = np.zeros(n_max + 1, dtype=np.complex128)
    for m in range(1, n_max + 1):
        k = np.arange(1, m)
        c[m] = bc[m] - np.dot(k * c[1:m], bc[m - 1:0:-1]) / m
    return CoeffSeries(c)


def compose_series(f: CoeffSeries, phi: CoeffSeries) -> CoeffSeries:
    """Truncated composition ``f(phi(z))``; requires ``phi(0) = 0``."""
    f._check(phi)
    if phi[0] != 0:
        raise DomainError(f"compose_series needs phi(0) = 0, got {phi[0]!r}")
    n = f.order + 1
    p = phi.coeffs
    acc = np.zeros(n, dtype=np.complex128)
    for fk in f.coeffs[::-1]:
        acc = np.convolve(acc, p)[:n]
        acc[0] += fk
    return CoeffSeries(acc)


def _check_radius(r: float):
    if not (0.0 < r < 1.0):
        raise DomainError(f"radius must lie in (0, 1), got {r!r}")


def majorant_sum(c: CoeffSeries, r: float) -> float:
    """Truncated majorant series ``sum_{n<=N} |c_n| r^n``."""
    _check_radius(r)
    c = as_series(c)
    powers = float(r) ** np.arange(c.order + 1)
    return float(np.sum(np.abs(c.coeffs) * powers))


@dataclass(frozen=True)
class TailBound:
    coefficient_cap: float
    radius: float
    order: int
    value: float


def tail_bound(coefficient_cap: float, r: float, order: int) -> TailBound:
    """Bound on ``sum_{n>N} |c_n| r^n`` given ``|c_n| <= coefficient_cap``."""
    _check_radius(r)
    if coefficient_cap < 0:
        raise DomainError("coefficient cap must be nonnegative")
    if order < 0:
        raise DomainError("order must be nonnegative")
    value = coefficient_cap * r ** (order + 1) / (1.0 - r)
    return TailBound(float(coefficient_cap), float(r), int(order), float(value))
