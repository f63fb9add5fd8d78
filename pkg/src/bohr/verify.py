"""Executable checks for every radius in the catalog.

The checks fall into a few groups:

* sweeps: the defining inequality holds on a grid below the computed radius
  and fails on a grid above it;
* sharpness: the left-hand side rebuilt from the extremal function's
  coefficients (not from the closed form) hits the target at the radius;
* monotonicity of each defining left-hand side, which is what makes the root
  unique;
* coefficient identities for the extremal functions, the subordination chain
  for random Schwarz functions, wedge-coefficient positivity, and the
  classical ``phi_a`` criterion.

Every check returns a :class:`VerificationReport`; nothing raises on a failed
inequality.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import problems as P
from .catalog import (
    MapKind,
    exponent_coeff,
    exponent_series,
    eval_map,
    ExtremalMap,
    koebe_coeffs,
    phi_a_coeffs,
    wedge_coeffs,
)
from .errors import DomainError
from .series import (
    DEFAULT_ORDER,
    CoeffSeries,
    compose_series,
    exp_series,
    log_series,
    majorant_sum,
    mul_series,
    tail_bound,
)
from .solver import DEFAULT_TOL

SWEEP_TOL = 1e-12
SHARPNESS_TOL = 1e-9
# distance from f(0) to the boundary of the Koebe image, attained in the 1/4 lemma
KOEBE_DISTANCE = 0.25


@dataclass
class VerificationReport:
    check_id: str
    passed: bool
    grid_size: int
    worst_margin: float
    tolerance: float
    notes: list = field(default_factory=list)
    problem: Optional[str] = None
    root: Optional[float] = None
    closed_form: Optional[float] = None
    paper_value: Optional[float] = None
    deviation: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _deviation_notes(res: P.RadiusResult) -> list:
    notes = []
    if res.deviation is not None and res.deviation > 1e-4:
        notes.append(
            f"printed value {res.paper_value!r} differs from the root of the "
            f"equation as written ({res.computed_root:.10f}) by {res.deviation:.3e}"
        )
    return notes


def _report(check_id, passed, grid_size, worst, tol, notes, res=None):
    rep = VerificationReport(check_id, bool(passed), int(grid_size), float(worst),
                             float(tol), list(notes))
    if res is not None:
        rep.problem = res.label
        rep.root = res.computed_root
        rep.closed_form = res.closed_form
        rep.paper_value = res.paper_value
        rep.deviation = res.deviation
    return rep


# ---------------------------------------------------------------------------
# series-built left-hand sides


def _exponents(order):
    a = exponent_series(MapKind.H0_FACTOR, order)
    b = exponent_series(MapKind.G0_FACTOR, order)
    return a.real, b.real


def series_lhs(problem_id: str, r: float, order: int = DEFAULT_ORDER,
               m: int = 1, **params) -> float:
    """Left-hand side assembled from extremal coefficients at order ``order``.

    For the log-harmonic problems this is ``r exp(sum c_n r^n)`` (plus the
    extra terms of each inequality) with ``c_n`` formed from the exponent
    coefficients of ``h0`` and ``g0``; the factors ``|h|^m`` and
    ``|h| + |g|`` are replaced by their bound 1.
    """
    prob = P.get_problem(problem_id)
    kw = prob.check_params(params)
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    n = np.arange(order + 1, dtype=float)
    n[0] = 1.0  # avoids 0/0 in the weights; the n = 0 entries are zero anyway
    a, b = _exponents(order)

    def M(c):
        return majorant_sum(CoeffSeries(c), r)

    pid = problem_id
    if pid == "classical_phi":
        return majorant_sum(phi_a_coeffs(kw["a"], order), r)
    if pid == "subord_beta":
        return (kw["beta"] + majorant_sum(koebe_coeffs(order), r)) / KOEBE_DISTANCE
    if pid in ("wedge", "wedge_improved"):
        A = wedge_coeffs(kw["alpha"], order)
        return kw.get("beta", 0.0) + majorant_sum(A, r) - abs(A[0])
    if pid == "ali_H":
        return r * math.exp(M(a))
    if pid == "ali_G":
        return r * math.exp(M(b))
    if pid == "ali_f":
        return r * math.exp(M(a + b))
    if pid == "thm2_7":
        return r * math.exp(M(a + b + n / (4 * n * n - 1) * a * b))
    if pid == "thm2_8_H":
        return r * math.exp(M(a + n / (2 * n + 1) ** 2 * a * a))
    if pid == "thm2_8_G":
        return r * math.exp(M(b + n / (2 * n - 1) ** 2 * b * b))
    if pid == "thm2_9_H":
        return r * math.exp(1.0 ** m) * math.exp(M(a))
    if pid == "thm2_9_G":
        return r * math.exp(1.0 ** m) * math.exp(M(b))
    if pid == "thm2_10":
        return r * math.exp(1.0) * math.exp(M(a + b))
    if pid == "thm2_11":
        return r * 1.0 + r * math.exp(M(a + b))
    if pid == "thm2_12_H":
        return r * M(a) + r * math.exp(M(a))
    if pid == "thm2_12_G":
        return r * M(b) + r * math.exp(M(b))
    raise DomainError(f"no series form for {problem_id}")  # pragma: no cover


# ---------------------------------------------------------------------------
# per-problem checks


def sweep_inequality(problem_id: str, grid_points: int = 1000,
                     tol: float = DEFAULT_TOL, **params) -> VerificationReport:
    """``lhs <= target`` on a grid of (0, r*] and ``lhs > target`` on (r* + 10 tol, 0.999]."""
    if grid_points < 2:
        raise DomainError("grid_points must be at least 2")
    prob = P.get_problem(problem_id)
    res = P.solve(problem_id, tol=tol, **params)
    kw = res.params
    # the lower bracket end satisfies lhs < target strictly
    r_lo = res.bracket.lo
    below = r_lo * np.arange(1, grid_points + 1) / grid_points
    start = res.computed_root + 10 * tol
    above = np.linspace(start, 0.999, grid_points) if start < 0.999 else np.array([])
    m_below = float(np.min(prob.target - prob.lhs(below, **kw)))
    m_above = float(np.min(prob.lhs(above, **kw) - prob.target)) if above.size else math.inf
    passed = m_below >= -SWEEP_TOL and m_above > 0
    notes = [f"below-radius margin {m_below:.3e}", f"above-radius margin {m_above:.3e}"]
    notes += _deviation_notes(res)
    return _report(f"sweep:{res.label}", passed, below.size + above.size,
                   min(m_below, m_above), SWEEP_TOL, notes, res)


def check_sharpness(problem_id: str, tol: float = SHARPNESS_TOL,
                    order: int = DEFAULT_ORDER, offset: float = 1e-3,
                    solver_tol: float = DEFAULT_TOL, **params) -> VerificationReport:
    """Series-built lhs equals the target at the radius and exceeds it at radius + offset."""
    prob = P.get_problem(problem_id)
    res = P.solve(problem_id, tol=solver_tol, **params)
    r = res.computed_root
    ms = (1, 2, 5) if problem_id.startswith("thm2_9") else (1,)
    notes = list(prob.notes)
    errs, ups = [], []
    for m in ms:
        at = series_lhs(problem_id, r, order, m=m, **res.params)
        up = series_lhs(problem_id, r + offset, order, m=m, **res.params)
        errs.append(abs(at - prob.target))
        ups.append(up - prob.target)
    if len(ms) > 1:
        verdicts = {(e <= tol, u > 0) for e, u in zip(errs, ups)}
        notes.append(f"m in {ms}: {'identical' if len(verdicts) == 1 else 'differing'} verdicts")
    err, up = max(errs), min(ups)
    passed = err <= tol and up > 0
    notes.append(f"|series lhs - target| at radius = {err:.3e}")
    notes += _deviation_notes(res)
    return _report(f"sharpness:{res.label}", passed, 2 * len(ms), min(tol - err, up),
                   tol, notes, res)


def check_monotone(problem_id: str, grid_points: int = 10_000,
                   **params) -> VerificationReport:
    """Strict increase of the defining lhs on a uniform grid of (0, 0.999].

    The comparison runs on ``log lhs`` so that grid points where ``lhs``
    overflows still count; where ``lhs`` is finite it is compared directly too.
    """
    prob = P.get_problem(problem_id)
    kw = prob.check_params(params)
    grid = 0.999 * np.arange(1, grid_points + 1) / grid_points
    log_d = np.diff(prob.log_lhs(grid, **kw))
    vals = prob.lhs(grid, **kw)
    fin = np.isfinite(vals)
    both = fin[1:] & fin[:-1]
    with np.errstate(invalid="ignore"):
        lin_d = np.diff(vals)[both]
    worst = float(np.min(log_d))
    passed = bool(np.all(log_d > 0) and np.all(lin_d > 0))
    notes = []
    if not np.all(fin):
        notes.append(f"lhs overflows beyond r = {grid[fin][-1]:.4f}; log form used there")
    return _report(f"monotone:{prob.label(kw)}", passed, grid_points, worst, 0.0, notes)


# ---------------------------------------------------------------------------
# coefficient and family checks


def check_coefficient_bounds(order: int = DEFAULT_ORDER) -> VerificationReport:
    """Equality cases of the coefficient bounds ``2 +- 1/n`` and ``|b_n| <= n``.

    The h0/g0 exponents are also recovered by taking the series logarithm of
    the closed forms ``exp(2z/(1-z))/(1-z)`` and ``(1-z) exp(2z/(1-z))``.
    """
    if order < 1:
        raise DomainError("order must be at least 1")
    ns = range(1, order + 1)
    exact = all(exponent_coeff(MapKind.H0_FACTOR, n) == 2.0 + 1.0 / n
                and exponent_coeff(MapKind.G0_FACTOR, n) == 2.0 - 1.0 / n for n in ns)
    koebe = koebe_coeffs(order).real
    koebe_ok = all(koebe[n] == n for n in ns)

    # independent route: Taylor series of the closed forms, then log
    geo = CoeffSeries(np.ones(order + 1))
    e2 = exp_series(CoeffSeries(np.r_[0.0, np.full(order, 2.0)]))
    one_minus_z = CoeffSeries(np.r_[1.0, -1.0, np.zeros(order - 1)])
    h_log = log_series(mul_series(geo, e2)).real
    g_log = log_series(mul_series(one_minus_z, e2)).real
    n = np.arange(1, order + 1)
    dev = max(np.max(np.abs(h_log[1:] - (2 + 1 / n)) / (2 + 1 / n)),
              np.max(np.abs(g_log[1:] - (2 - 1 / n)) / (2 - 1 / n)))
    koebe_prod = mul_series(geo, geo).shift().real
    koebe_prod_ok = bool(np.array_equal(koebe_prod, koebe))
    # the log recurrence cancels terms as large as the h0 coefficients
    tol = 64 * np.finfo(float).eps * max(1.0, float(np.max(np.abs(mul_series(geo, e2).coeffs))))
    passed = exact and koebe_ok and koebe_prod_ok and dev <= tol
    notes = [f"exact equalities: {exact and koebe_ok}",
             f"log-route relative deviation {dev:.3e}"]
    if not koebe_prod_ok:
        notes.append("Koebe product route disagrees")
    return _report(f"coefficients(order={order})", passed, order, tol - dev, tol, notes)


@dataclass(frozen=True)
class SchwarzSample:
    """``phi(z) = z (c + z)/(1 + conj(c) z)`` with ``|c| < 1``; ``identity`` gives ``phi = z``."""

    c: complex = 0j
    identity: bool = False

    def __post_init__(self):
        if not self.identity and not abs(self.c) < 1:
            raise DomainError(f"|c| must be < 1, got {abs(self.c)!r}")

    @property
    def description(self) -> str:
        return "phi(z) = z" if self.identity else f"phi(z) = z (c + z)/(1 + conj(c) z), c = {self.c:.6g}"

    def coeffs(self, order: int) -> CoeffSeries:
        if self.identity:
            return CoeffSeries.monomial(1, order)
        k = np.arange(order + 1)
        geo = CoeffSeries((-np.conj(self.c)) ** k)
        num = CoeffSeries.monomial(0, order, self.c) + CoeffSeries.monomial(1, order)
        return mul_series(num, geo).shift()

    def __call__(self, z):
        if self.identity:
            return z
        return z * (self.c + z) / (1 + np.conj(self.c) * z)


def schwarz_samples(seed: int, count: int, max_modulus: float = 0.95) -> list:
    """Forced edge cases followed by ``count`` samples with ``c`` uniform in ``|c| <= max_modulus``."""
    rng = np.random.default_rng(seed)
    forced = [SchwarzSample(identity=True), SchwarzSample(0j),
              SchwarzSample(max_modulus + 0j), SchwarzSample(-max_modulus + 0j),
              SchwarzSample(1j * max_modulus)]
    rad = max_modulus * np.sqrt(rng.random(count))
    ang = 2 * np.pi * rng.random(count)
    return forced + [SchwarzSample(complex(c)) for c in rad * np.exp(1j * ang)]


def subordination_fuzz(seed: int = 1, count: int = 200, beta: float = 0.0,
                       order: int = DEFAULT_ORDER) -> VerificationReport:
    """Subordinates ``g = koebe o phi`` obey ``|b_n| <= n`` and the radius-``r_beta`` bound."""
    P.check_subord_beta(beta)
    if count < 1:
        raise DomainError("count must be at least 1")
    r_beta = P.closed_form_radius("subord_beta", beta=beta)
    f = koebe_coeffs(order)
    fprime0 = abs(f[1])
    tail = tail_bound(4 * order, r_beta, order).value
    n = np.arange(order + 1)
    coef_tol = 1e-9
    worst_coef = math.inf
    worst_sum = math.inf
    violations = 0
    identity_gap = None
    samples = schwarz_samples(seed, count)
    for s in samples:
        g = compose_series(f, s.coeffs(order))
        absb = np.abs(g.coeffs)
        # 4 n d(f(0), boundary) with d = 1/4
        coef_margin = float(np.min(4 * n[1:] * KOEBE_DISTANCE * fprime0 - absb[1:]))
        lhs = beta * fprime0 + majorant_sum(g, r_beta)
        sum_margin = KOEBE_DISTANCE + tail - lhs
        if coef_margin < -coef_tol * order or sum_margin < 0:
            violations += 1
        worst_coef = min(worst_coef, coef_margin)
        worst_sum = min(worst_sum, sum_margin)
        if s.identity:
            identity_gap = KOEBE_DISTANCE - lhs
    notes = [
        f"r_beta = {r_beta!r}",
        f"violations: {violations}",
        f"worst |b_n| <= n margin {worst_coef:.3e}",
        f"identity case 1/4 - lhs = {identity_gap:.3e} (tail bound {tail:.3e})",
    ]
    return _report(f"fuzz(seed={seed},count={count},beta={beta!r},order={order})",
                   violations == 0, len(samples), min(worst_coef, worst_sum),
                   coef_tol, notes)


def check_wedge(alpha: float, beta: float = 0.0, order: int = DEFAULT_ORDER,
                grid_points: int = 1000) -> VerificationReport:
    """Wedge coefficients are positive and ``beta + sum A_n r^n <= 1`` exactly up to ``r_{alpha,beta}``."""
    P.check_wedge_beta(beta)
    A = wedge_coeffs(alpha, order).real
    positive = bool(np.all(A[1:] > 0))
    r_ab = P.closed_form_radius("wedge_improved", alpha=alpha, beta=beta)
    tol = 1e-12
    notes = [f"r_alpha_beta = {r_ab!r}", f"min A_n = {np.min(A[1:]):.6g}"]
    if r_ab <= 0:
        notes.append("radius is 0: grid is empty and the bound holds vacuously")
        return _report(f"wedge(alpha={alpha!r},beta={beta!r})", positive, 0,
                       float(np.min(A[1:])), tol, notes)
    series = CoeffSeries(A)

    def bound(r):
        # a_0 = d(a_0, boundary) = 1, so the reduced bound is beta + sum_{n>=1} A_n r^n
        return beta + majorant_sum(series, r) - A[0]

    grid = r_ab * np.arange(1, grid_points + 1) / grid_points
    lhs = np.array([bound(r) for r in grid])
    closed = beta + np.expm1(alpha * (np.log1p(grid) - np.log1p(-grid)))
    cross = float(np.max(np.abs(lhs - closed)))
    m_below = float(np.min(1.0 - lhs))
    m_above = bound(r_ab + 1e-6) - 1.0
    passed = positive and m_below >= -tol and m_above > 0 and cross <= 1e-10
    notes += [f"series vs closed form max deviation {cross:.3e}",
              f"margin just above radius {m_above:.3e}"]
    return _report(f"wedge(alpha={alpha!r},beta={beta!r})", passed, grid_points + 1,
                   min(m_below, m_above), tol, notes)


def check_classical(a: float, order: int = DEFAULT_ORDER, grid_points: int = 1000,
                    offset: float = 1e-3) -> VerificationReport:
    """``M_{phi_a}(r) <= 1`` up to ``1/(1+2a)`` and ``> 1`` at ``1/(1+2a) + offset``."""
    coeffs = phi_a_coeffs(a, order)
    r0 = P.closed_form_radius("classical_phi", a=a)
    tol = 1e-12
    notes = []

    def closed(r):
        return a + (1 - a * a) * r / (1 - a * r)

    grid = r0 * np.arange(1, grid_points + 1) / grid_points
    series = np.array([majorant_sum(coeffs, r) for r in grid])
    m_below = float(np.min(1.0 - np.maximum(series, closed(grid))))
    r_up = r0 + offset
    if r_up < 1:
        up = min(majorant_sum(coeffs, r_up), closed(r_up)) - 1.0
    else:
        up = math.inf
        notes.append("r0 + offset leaves the disk")
    passed = m_below >= -tol and up > 0
    notes.append(f"margin at r0 + {offset:g}: {up:.3e}")
    return _report(f"classical(a={a!r})", passed, grid_points + 1,
                   min(m_below, up), tol, notes)


def check_series_identities(order: int = DEFAULT_ORDER,
                            radii=(0.05, 0.1, 0.3)) -> VerificationReport:
    """``exp`` of the h0/g0 exponents matches ``exp(2r/(1-r))/(1-r)`` and ``(1-r) exp(2r/(1-r))``."""
    h = exp_series(exponent_series(MapKind.H0_FACTOR, order))
    g = exp_series(exponent_series(MapKind.G0_FACTOR, order))
    worst = 0.0
    for r in radii:
        e2 = math.exp(2 * r / (1 - r))
        worst = max(worst, abs(majorant_sum(h, r) - e2 / (1 - r)),
                    abs(majorant_sum(g, r) - (1 - r) * e2),
                    abs(complex(h(r)) - eval_map(ExtremalMap(MapKind.H0_FACTOR), r)))
    tol = 1e-10
    return _report(f"series-identities(order={order})", worst <= tol, len(radii),
                   tol - worst, tol, [f"max deviation {worst:.3e}"])


# ---------------------------------------------------------------------------
# aggregation

FUZZ_BETAS = (0.0, 0.125, 0.1875)
WEDGE_CASES = ((1.0, 0.0), (1.5, 0.5), (2.0, 0.0), (2.0, 0.25), (1.5, 1.0))


def verify_problem(problem_id: str, params: dict | None = None,
                   grid_points: int = 1000, order: int = DEFAULT_ORDER,
                   seed: int = 1, count: int = 200,
                   tol: float = DEFAULT_TOL) -> list:
    """All checks that apply to one problem (every catalog instance when ``params`` is None)."""
    P.get_problem(problem_id)
    instances = [params] if params is not None else P.default_instances(problem_id)
    out = []
    for kw in instances:
        out.append(check_monotone(problem_id, **kw))
        out.append(sweep_inequality(problem_id, grid_points, tol, **kw))
        out.append(check_sharpness(problem_id, order=order, solver_tol=tol, **kw))
        if problem_id == "subord_beta":
            out.append(subordination_fuzz(seed, count, kw["beta"], order))
        elif problem_id == "classical_phi":
            out.append(check_classical(kw["a"], order, grid_points))
        elif problem_id in ("wedge", "wedge_improved"):
            out.append(check_wedge(kw["alpha"], kw.get("beta", 0.0), order, grid_points))
    return out


def run_all(grid_points: int = 1000, order: int = DEFAULT_ORDER, seed: int = 1,
            count: int = 200, tol: float = DEFAULT_TOL) -> list:
    out = []
    for pid in P.list_problems():
        out.extend(verify_problem(pid, None, grid_points, order, seed, count, tol))
    out.append(check_coefficient_bounds(order))
    out.append(check_series_identities(order))
    for beta in FUZZ_BETAS:
        if beta not in [kw["beta"] for kw in P.default_instances("subord_beta")]:
            out.append(subordination_fuzz(seed, count, beta, order))
    for alpha, beta in WEDGE_CASES:
        out.append(check_wedge(alpha, beta, order, grid_points))
    return out
