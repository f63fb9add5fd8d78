"""Catalog of Bohr-radius problems.

Each problem is an equation ``lhs(r) = target`` whose unique root in (0, 1) is
a Bohr radius.  The left-hand sides are stored in the elementary closed forms
to which the coefficient sums reduce; :mod:`bohr.verify` rebuilds them from
coefficient series independently.

``log_lhs`` gives the logarithm of the same quantity without overflow, which is
what the monotonicity checks use near ``r = 1`` where several forms exceed the
double range.

Printed approximations are kept as metadata only.  Four of them
(``thm2_8_H``, ``thm2_9_G``, ``thm2_12_H``, ``thm2_12_G``) do not solve their
own equations; :func:`solve` reports the deviation instead of hiding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from . import solver
from .catalog import check_a, check_alpha
from .errors import DomainError, UnknownProblemError

E = math.e
INV_2E = 1.0 / (2.0 * E)
TWO_OVER_E = 2.0 / E
INV_E2 = math.exp(-2.0)


def _u(r):
    return r / (1.0 - r)


def _lm(r):
    # log(1 - r)
    return np.log1p(-r)


def check_subord_beta(beta: float):
    if not (0.0 <= beta < 0.25):
        raise DomainError(f"beta must lie in [0, 1/4), got {beta!r}")


def check_wedge_beta(beta: float):
    if not (0.0 <= beta < 2.0):
        raise DomainError(f"wedge beta must lie in [0, 2), got {beta!r}")


@dataclass(frozen=True)
class RadiusProblem:
    id: str
    equation: str
    lhs: Callable
    log_lhs: Callable
    target: float
    params: tuple = ()
    closed_form: Optional[Callable] = None
    paper_values: Mapping = field(default_factory=dict)
    family: Optional[str] = None
    validators: Mapping = field(default_factory=dict)
    notes: tuple = ()

    def check_params(self, params: Mapping) -> dict:
        unknown = set(params) - set(self.params)
        if unknown:
            raise DomainError(f"{self.id} takes no parameter(s) {sorted(unknown)}")
        missing = [p for p in self.params if p not in params]
        if missing:
            raise DomainError(f"{self.id} needs parameter(s) {missing}")
        out = {p: float(params[p]) for p in self.params}
        for p, check in self.validators.items():
            check(out[p])
        return out

    def paper_value(self, params: Mapping | None = None) -> Optional[float]:
        key = tuple(float(params[p]) for p in self.params) if self.params else ()
        return self.paper_values.get(key)

    def label(self, params: Mapping | None = None) -> str:
        if not self.params:
            return self.id
        inner = ",".join(f"{p}={float(params[p])!r}" for p in self.params)
        return f"{self.id}({inner})"


def _np(fn):
    def wrapped(r, **kw):
        with np.errstate(over="ignore"):
            out = fn(np.asarray(r, dtype=float), **kw)
        return out if np.ndim(out) else float(out)
    return wrapped


def _thm2_12_log(r, sign):
    a = 2.0 * _u(r) - sign * _lm(r)
    return np.log(r) + np.logaddexp(np.log(a), a)


_PROBLEMS = [
    RadiusProblem(
        "classical_phi", "a + (1-a^2) r/(1-a r) = 1",
        _np(lambda r, a: a + (1 - a * a) * r / (1 - a * r)),
        _np(lambda r, a: np.log(a + (1 - a * a) * r / (1 - a * r))),
        1.0, ("a",),
        closed_form=lambda a: 1.0 / (1.0 + 2.0 * a),
        validators={"a": check_a},
    ),
    RadiusProblem(
        "subord_beta", "4 (beta + r/(1-r)^2) = 1",
        _np(lambda r, beta: 4.0 * (beta + r / (1 - r) ** 2)),
        _np(lambda r, beta: np.log(4.0 * (beta + r / (1 - r) ** 2))),
        1.0, ("beta",),
        # (3-4b-sqrt(8)sqrt(1-2b))/(1-4b), rationalized to avoid cancellation near b=1/4
        closed_form=lambda beta: (1 - 4 * beta) / (3 - 4 * beta + math.sqrt(8.0) * math.sqrt(1 - 2 * beta)),
        paper_values={(0.0,): 0.17157, (0.125,): 0.10102,
                      (0.1875,): 0.05572, (0.21875,): 0.02943},
        validators={"beta": check_subord_beta},
    ),
    RadiusProblem(
        "ali_H", "r/(1-r) exp(2r/(1-r)) = 1/(2e)",
        _np(lambda r: _u(r) * np.exp(2 * _u(r))),
        _np(lambda r: np.log(r) - _lm(r) + 2 * _u(r)),
        INV_2E, paper_values={(): 0.1222}, family="H",
    ),
    RadiusProblem(
        "ali_G", "r(1-r) exp(2r/(1-r)) = 2/e",
        _np(lambda r: r * (1 - r) * np.exp(2 * _u(r))),
        _np(lambda r: np.log(r) + _lm(r) + 2 * _u(r)),
        TWO_OVER_E, paper_values={(): 0.3659}, family="G",
    ),
    RadiusProblem(
        "ali_f", "r exp(4r/(1-r)) = 1/e^2",
        _np(lambda r: r * np.exp(4 * _u(r))),
        _np(lambda r: np.log(r) + 4 * _u(r)),
        INV_E2, paper_values={(): 0.09078}, family="F",
    ),
    RadiusProblem(
        "thm2_7", "r/(1-r) exp(4r/(1-r)) = 1/e^2",
        _np(lambda r: _u(r) * np.exp(4 * _u(r))),
        _np(lambda r: np.log(r) - _lm(r) + 4 * _u(r)),
        INV_E2, paper_values={(): 0.08528}, family="F",
    ),
    RadiusProblem(
        "thm2_8_H", "r/(1-r)^2 exp(2r/(1-r)) = 1/(2e)",
        _np(lambda r: r / (1 - r) ** 2 * np.exp(2 * _u(r))),
        _np(lambda r: np.log(r) - 2 * _lm(r) + 2 * _u(r)),
        INV_2E, paper_values={(): 0.09735}, family="H",
    ),
    RadiusProblem(
        "thm2_8_G", "r exp(2r/(1-r)) = 2/e",
        _np(lambda r: r * np.exp(2 * _u(r))),
        _np(lambda r: np.log(r) + 2 * _u(r)),
        TWO_OVER_E, paper_values={(): 0.30539}, family="G",
    ),
    RadiusProblem(
        "thm2_9_H", "e r/(1-r) exp(2r/(1-r)) = 1/(2e)",
        _np(lambda r: E * _u(r) * np.exp(2 * _u(r))),
        _np(lambda r: 1.0 + np.log(r) - _lm(r) + 2 * _u(r)),
        INV_2E, paper_values={(): 0.0566}, family="H",
    ),
    RadiusProblem(
        "thm2_9_G", "e r(1-r) exp(2r/(1-r)) = 2/e",
        _np(lambda r: E * r * (1 - r) * np.exp(2 * _u(r))),
        _np(lambda r: 1.0 + np.log(r) + _lm(r) + 2 * _u(r)),
        TWO_OVER_E, paper_values={(): 0.1764}, family="G",
    ),
    RadiusProblem(
        "thm2_10", "e r exp(4r/(1-r)) = 1/e^2",
        _np(lambda r: E * r * np.exp(4 * _u(r))),
        _np(lambda r: 1.0 + np.log(r) + 4 * _u(r)),
        INV_E2, paper_values={(): 0.04181}, family="F",
        notes=("sharpness uses f0, whose factors do not satisfy |h|+|g|<=1; "
               "only the defining-equation identity is checked",),
    ),
    RadiusProblem(
        "thm2_11", "r (1 + exp(4r/(1-r))) = 1/e^2",
        _np(lambda r: r * (1 + np.exp(4 * _u(r)))),
        _np(lambda r: np.log(r) + np.logaddexp(0.0, 4 * _u(r))),
        INV_E2, paper_values={(): 0.0592}, family="F",
    ),
    RadiusProblem(
        "thm2_12_H", "r (2r/(1-r) - log(1-r) + exp(2r/(1-r))/(1-r)) = 1/(2e)",
        _np(lambda r: r * (2 * _u(r) - _lm(r) + np.exp(2 * _u(r)) / (1 - r))),
        _np(lambda r: _thm2_12_log(r, 1.0)),
        INV_2E, paper_values={(): 0.1073}, family="H",
        notes=("the bound |H(z)| <= |z| sum |a_n||z|^n used to derive this "
               "equation does not follow from H = z exp(sum a_n z^n); "
               "the equation is taken as the definition",),
    ),
    RadiusProblem(
        "thm2_12_G", "r (2r/(1-r) + log(1-r) + (1-r) exp(2r/(1-r))) = 2/e",
        _np(lambda r: r * (2 * _u(r) + _lm(r) + (1 - r) * np.exp(2 * _u(r)))),
        _np(lambda r: _thm2_12_log(r, -1.0)),
        TWO_OVER_E, paper_values={(): 0.3063}, family="G",
        notes=("the bound |G(z)| <= |z| sum |b_n||z|^n used to derive this "
               "equation does not follow from G = z exp(sum b_n z^n); "
               "the equation is taken as the definition",),
    ),
    RadiusProblem(
        "wedge", "((1+r)/(1-r))^alpha - 1 = 1",
        _np(lambda r, alpha: np.expm1(alpha * (np.log1p(r) - _lm(r)))),
        _np(lambda r, alpha: np.log(np.expm1(alpha * (np.log1p(r) - _lm(r))))),
        1.0, ("alpha",),
        closed_form=lambda alpha: (2 ** (1 / alpha) - 1) / (2 ** (1 / alpha) + 1),
        paper_values={(1.0,): 1.0 / 3.0},
        validators={"alpha": check_alpha},
    ),
    RadiusProblem(
        "wedge_improved", "((1+r)/(1-r))^alpha - 1 + beta = 1",
        _np(lambda r, alpha, beta: np.expm1(alpha * (np.log1p(r) - _lm(r))) + beta),
        _np(lambda r, alpha, beta: np.log(np.expm1(alpha * (np.log1p(r) - _lm(r))) + beta)),
        1.0, ("alpha", "beta"),
        # the formula turns negative for beta > 1; no positive radius exists there
        closed_form=lambda alpha, beta: max(
            0.0, ((2 - beta) ** (1 / alpha) - 1) / ((2 - beta) ** (1 / alpha) + 1)),
        paper_values={(1.0, 0.0): 1.0 / 3.0},
        validators={"alpha": check_alpha, "beta": check_wedge_beta},
    ),
]

PROBLEMS = {p.id: p for p in _PROBLEMS}

# Parameter values exercised by the verifier, table and figures; the
# subordination and wedge values are those with printed approximations.
INSTANCES = (
    [("classical_phi", {"a": a}) for a in (0.1, 0.3, 0.5, 0.7, 0.9)]
    + [("subord_beta", {"beta": b}) for b in (0.0, 0.125, 0.1875, 0.21875)]
    + [(pid, {}) for pid in PROBLEMS if not PROBLEMS[pid].params]
    + [("wedge", {"alpha": a}) for a in (1.0, 1.5, 2.0)]
    + [("wedge_improved", {"alpha": a, "beta": b})
       for a, b in ((1.0, 0.0), (1.5, 0.5), (2.0, 0.25))]
)

DISCREPANT = ("thm2_8_H", "thm2_9_G", "thm2_12_H", "thm2_12_G")


def list_problems() -> list[str]:
    return list(PROBLEMS)


def get_problem(problem_id: str) -> RadiusProblem:
    try:
        return PROBLEMS[problem_id]
    except KeyError:
        raise UnknownProblemError(f"unknown problem id {problem_id!r}") from None


def default_instances(problem_id: str) -> list[dict]:
    get_problem(problem_id)
    return [dict(p) for pid, p in INSTANCES if pid == problem_id]


def _check_r(r):
    arr = np.asarray(r, dtype=float)
    if np.any(~((arr > 0.0) & (arr < 1.0))):
        raise DomainError("r must lie in (0, 1)")


def defining_lhs(problem_id: str, r, **params):
    """Left-hand side of the defining equation at ``r`` (scalar or array)."""
    p = get_problem(problem_id)
    kw = p.check_params(params)
    _check_r(r)
    return p.lhs(r, **kw)


def defining_log_lhs(problem_id: str, r, **params):
    p = get_problem(problem_id)
    kw = p.check_params(params)
    _check_r(r)
    return p.log_lhs(r, **kw)


def target(problem_id: str) -> float:
    return get_problem(problem_id).target


def closed_form_radius(problem_id: str, **params) -> float:
    p = get_problem(problem_id)
    if p.closed_form is None:
        raise DomainError(f"{problem_id} has no closed-form radius")
    kw = p.check_params(params)
    return float(p.closed_form(**kw))


@dataclass(frozen=True)
class RadiusResult:
    id: str
    params: dict
    computed_root: float
    bracket_width: float
    bracket: solver.Bracket
    closed_form: Optional[float] = None
    paper_value: Optional[float] = None
    deviation: Optional[float] = None

    @property
    def label(self) -> str:
        return get_problem(self.id).label(self.params)


def solve(problem_id: str, tol: float = solver.DEFAULT_TOL,
          lo: float = solver.DEFAULT_LO, hi: float = solver.DEFAULT_HI,
          **params) -> RadiusResult:
    """Root of the defining equation by bisection, with closed form and printed value."""
    p = get_problem(problem_id)
    kw = p.check_params(params)
    br = solver.bisect(lambda r: p.lhs(r, **kw), p.target, lo, hi, tol)
    root = br.midpoint
    cf = float(p.closed_form(**kw)) if p.closed_form else None
    pv = p.paper_value(kw)
    dev = abs(root - pv) if pv is not None else None
    return RadiusResult(problem_id, kw, root, br.width, br, cf, pv, dev)
