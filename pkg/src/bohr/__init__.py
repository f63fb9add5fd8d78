"""Bohr radii for subordination classes, starlike log-harmonic mappings and wedge domains.

The package solves each radius's defining equation, rebuilds the inequality
from the extremal functions' coefficients, and checks that the radius is
exactly where the inequality stops holding.
"""

from .catalog import (
    ExtremalMap,
    MapKind,
    distance_constant,
    eval_map,
    exponent_coeff,
    koebe_coeffs,
    phi_a_coeffs,
    wedge_coeffs,
)
from .errors import (
    BohrError,
    BracketError,
    DomainError,
    NumericError,
    OrderMismatchError,
    UnknownProblemError,
)
from .problems import (
    RadiusProblem,
    RadiusResult,
    closed_form_radius,
    defining_lhs,
    get_problem,
    list_problems,
    solve,
)
from .series import (
    CoeffSeries,
    TailBound,
    compose_series,
    exp_series,
    majorant_sum,
    mul_series,
    tail_bound,
)
from .solver import Bracket, bisect, solve_increasing

__version__ = "0.1.0"
