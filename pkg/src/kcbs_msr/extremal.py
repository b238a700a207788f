"""Extremes of the five-cycle expectation at fixed concurrence.

At constant concurrence c the minimum of S is linear,

    S_min(c) = (5 - 3 sqrt(5)) c - sqrt(5),

running from -sqrt(5) at c = 0 (the bound for separable states) down to
5 - 4 sqrt(5) at c = 1, while the maximum is the constant 2 sqrt(5) - 5
for every c.  S_min crosses the non-contextuality bound -3 at
c = 1/sqrt(5), so states violating the five-cycle inequality are
necessarily entangled beyond that threshold.

The closed forms come with the stationary polar-angle sets that attain
them, an independent constrained grid search used as a numerical oracle,
and the companion relation to the maximal CHSH violation
beta = 2 sqrt(1 + c^2), through which S_min + sqrt(5) is proportional to
-sqrt(beta^2 - 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .measures import _validate_concurrence, f_from_concurrence
from .observables import SPECTRUM_MAX, SQRT5
from .states import f_function

__all__ = [
    "ExtremalResult",
    "LOCAL_BOUND",
    "chsh_max",
    "concurrence_threshold",
    "extremal_theta_max",
    "extremal_theta_min",
    "extremal_witnesses",
    "numeric_extremal_search",
    "s_max_for_concurrence",
    "s_min_for_concurrence",
    "s_min_from_beta",
]

Objective = Literal["minimize", "maximize"]

# Minimum of S attainable without entanglement: s_min_for_concurrence(0).
LOCAL_BOUND = -SQRT5

_FEASIBILITY_SLACK = 1e-12


def s_min_for_concurrence(c: float) -> float:
    """Minimum five-cycle expectation at concurrence ``c``: (5 - 3 sqrt(5)) c - sqrt(5)."""
    _validate_concurrence(c)
    return (5.0 - 3.0 * SQRT5) * c - SQRT5


def s_max_for_concurrence(c: float) -> float:
    """Maximum five-cycle expectation at concurrence ``c``.

    The constant 2 sqrt(5) - 5, independent of the concurrence.
    """
    _validate_concurrence(c)
    return SPECTRUM_MAX


def extremal_theta_min(c: float) -> tuple[float, float]:
    """Stationary theta2 values attaining S_min(c).

    Both roots (pi +/- arccos((1 - 3c)/(1 + c)))/2; the companion theta1 is
    pi - theta2 (see :func:`extremal_witnesses`).
    """
    a = math.acos(f_from_concurrence(c))
    return ((math.pi + a) / 2.0, (math.pi - a) / 2.0)


def extremal_theta_max(c: float) -> tuple[float, float]:
    """Stationary theta2 values attaining the constant maximum.

    Both roots +/- arccos((1 - 3c)/(1 + c))/2; the negative root describes
    the same physical point with the sign of cos(delta_phi) flipped.
    """
    a = math.acos(f_from_concurrence(c))
    return (a / 2.0, -a / 2.0)


def extremal_witnesses(
    c: float, objective: Objective = "minimize"
) -> list[tuple[float, float, float]]:
    """Angle triples (theta1, theta2, delta_phi) attaining the extremum at ``c``.

    Each theta2 root is paired with the companion theta1 of the
    stationarity relation it solves (theta1 + theta2 = pi for the minimum,
    |theta1 -/+ theta2| = arccos((1-3c)/(1+c)) for the maximum); both
    delta_phi in {0, pi} are tried and triples that do not reproduce the
    concurrence are dropped.  Angles are raw reals: the negative maximum
    root appears as a negative theta2.
    """
    _validate_objective(objective)
    f_t = f_from_concurrence(c)
    a = math.acos(f_t)
    if objective == "minimize":
        candidates = [(math.pi - r, r) for r in extremal_theta_min(c)]
    else:
        r_pos, r_neg = extremal_theta_max(c)
        candidates = [(a - r_pos, r_pos), (r_neg + a, r_neg)]
    witnesses = []
    for t1, t2 in candidates:
        for dphi in (0.0, math.pi):
            if abs(f_function(t1, t2, dphi) - f_t) <= 1e-9:
                witnesses.append((t1, t2, dphi))
    return list(dict.fromkeys(witnesses))


@dataclass(frozen=True)
class ExtremalResult:
    """Best value and witness angles found by the constrained search."""

    s_star: float
    theta1: float
    theta2: float
    delta_phi: float
    objective: Objective


def _validate_objective(objective: str) -> None:
    if objective not in ("minimize", "maximize"):
        raise ValueError(f"objective must be 'minimize' or 'maximize': got {objective!r}")


def numeric_extremal_search(
    c: float,
    objective: Objective = "minimize",
    grid_n: int = 128,
    refine_iters: int = 8,
) -> ExtremalResult:
    """Constrained grid search for the extremum of S at fixed concurrence.

    Scans (theta1, theta2) cell centers on a grid_n x grid_n grid over
    (0, pi)^2, keeping cells where some delta_phi realizes the concurrence,
    then refines around the best cell with windows shrinking by 1/4 per
    iteration.  Independent of the closed forms above, hence usable as
    their oracle.  Deterministic: ties are broken toward the lowest
    (theta1, theta2) in lexicographic order.

    On the constraint surface f is pinned at (1 - 3c)/(1 + c), so
    feasibility of a cell is exactly |cos(delta_phi)| <= 1, which is
    evaluated in the well-conditioned equivalent form
    cos(theta1 + theta2) <= f <= cos(theta1 - theta2).
    """
    _validate_concurrence(c)
    _validate_objective(objective)
    if grid_n < 16:
        raise ValueError(f"grid_n must be at least 16: got {grid_n}")
    if refine_iters < 0:
        raise ValueError(f"refine_iters must be non-negative: got {refine_iters}")

    f_t = f_from_concurrence(c)
    s_coef = 4.0 * (3.0 * SQRT5 - 5.0) / (f_t + 3.0)
    s_const = 5.0 - 4.0 * SQRT5
    minimizing = objective == "minimize"

    def stage(lo1, hi1, lo2, hi2):
        ax1 = lo1 + (np.arange(grid_n) + 0.5) * (hi1 - lo1) / grid_n
        ax2 = lo2 + (np.arange(grid_n) + 0.5) * (hi2 - lo2) / grid_n
        t1, t2 = np.meshgrid(ax1, ax2, indexing="ij")
        feasible = (np.cos(t1 + t2) <= f_t + _FEASIBILITY_SLACK) & (
            np.cos(t1 - t2) >= f_t - _FEASIBILITY_SLACK
        )
        if not feasible.any():
            return None
        s = s_coef * (np.cos(t1) * np.cos(t2) + 1.0) + s_const
        if minimizing:
            flat = np.where(feasible, s, np.inf)
            k = int(np.argmin(flat))
        else:
            flat = np.where(feasible, s, -np.inf)
            k = int(np.argmax(flat))
        i, j = divmod(k, grid_n)
        return float(s[i, j]), float(t1[i, j]), float(t2[i, j])

    best = stage(0.0, math.pi, 0.0, math.pi)
    if best is None:
        # Every concurrence in [0, 1] is attainable, so this is defensive.
        raise RuntimeError(f"no feasible grid cell for concurrence {c}")
    half = math.pi / grid_n
    for _ in range(refine_iters):
        _, t1, t2 = best
        candidate = stage(
            max(0.0, t1 - half),
            min(math.pi, t1 + half),
            max(0.0, t2 - half),
            min(math.pi, t2 + half),
        )
        if candidate is not None:
            better = candidate[0] <= best[0] if minimizing else candidate[0] >= best[0]
            if better:
                best = candidate
        half *= 0.25

    s_star, t1, t2 = best
    cos_dphi = (f_t - math.cos(t1) * math.cos(t2)) / (math.sin(t1) * math.sin(t2))
    delta_phi = math.acos(min(1.0, max(-1.0, cos_dphi)))
    return ExtremalResult(s_star, t1, t2, delta_phi, objective)


def chsh_max(c: float) -> float:
    """Maximal CHSH expectation 2 sqrt(1 + c^2) at concurrence ``c``.

    Ranges from the local bound 2 at c = 0 to 2 sqrt(2) at c = 1.
    """
    _validate_concurrence(c)
    return 2.0 * math.sqrt(1.0 + c * c)


def s_min_from_beta(beta: float) -> float:
    """Minimum five-cycle expectation at the concurrence whose maximal CHSH
    value is ``beta``.

    Composition of beta = 2 sqrt(1 + c^2) with S_min(c); the offset
    result + sqrt(5) equals (5 - 3 sqrt(5))/2 * sqrt(beta^2 - 4), i.e. a
    negative multiple of sqrt(beta^2 - 4).
    """
    if not 2.0 <= beta <= 2.0 * math.sqrt(2.0):
        raise ValueError(f"beta out of [2, 2*sqrt(2)]: got {beta}")
    c = math.sqrt(max(0.0, beta * beta - 4.0)) / 2.0
    return (5.0 - 3.0 * SQRT5) * c - SQRT5


def concurrence_threshold() -> float:
    """Concurrence 1/sqrt(5) at which S_min reaches the bound -3.

    Every state violating the five-cycle inequality has concurrence above
    this value.
    """
    return 1.0 / SQRT5
