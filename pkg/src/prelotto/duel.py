"""Decision machinery for the two-player pre-commitment game.

The adversary's call/fold choice is governed by the sign of a quadratic
margin in the committed force t,

    C(t) = (phi_rest / x_a^2) t^2 - (t / x_a) (2 v_b + phi_rest gamma) + 2 v_b,

with phi_rest = phi - v_b and gamma = x_b / x_a.  C is the call-minus-fold
payoff difference rescaled by the positive factor (x_a - t) / x_a, so its
sign is the decision.  This module exposes the quadratic, its vertex, its
discriminant, the roots in t, the critical battlefield values in v_b, and
the resulting classification of the (gamma, v_b) parameter plane, plus the
grid sweep confirming that no pre-commitment is ever profitable here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import backend
from .core import EPS, DomainError
from .regions import BoundaryCurve, RegionGrid


@dataclass(frozen=True)
class DuelParams:
    """Two-player parameters reduced to the quantities the margin uses."""

    gamma: float
    v_b: float
    phi: float = 1.0
    x_a: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.gamma < 1.0:
            raise DomainError("gamma must lie in (0, 1)")
        if self.phi <= 0 or self.x_a <= 0:
            raise DomainError("phi and x_a must be strictly positive")
        if not 0.0 < self.v_b < self.phi:
            raise DomainError("v_b must lie in (0, phi)")

    @property
    def x_b(self) -> float:
        return self.gamma * self.x_a

    @property
    def phi_rest(self) -> float:
        return self.phi - self.v_b


class PrecommitKind(Enum):
    ALWAYS_CALLS = "always_calls"
    FOLDS_ON_INTERVAL = "folds_on_interval"


@dataclass(frozen=True)
class PrecommitClassification:
    """How the adversary answers every feasible commitment size.

    ``fold_interval`` is present exactly when the kind is
    FOLDS_ON_INTERVAL; its endpoints are the roots of the call margin,
    clipped to [0, x_b].
    """

    kind: PrecommitKind
    fold_interval: Optional[tuple[float, float]] = None


def call_margin(params: DuelParams, t: float) -> float:
    """Call margin C(t): positive means call, negative fold, zero indifference."""
    if t < 0.0 or t > params.x_b:
        raise DomainError("t must lie in [0, x_b]")
    rest = params.phi_rest
    xa = params.x_a
    return (rest / (xa * xa)) * t * t - (t / xa) * (2.0 * params.v_b + rest * params.gamma) + 2.0 * params.v_b


def commit_vertex(params: DuelParams) -> float:
    """Minimizer of the call margin over the reals."""
    return (params.v_b / params.phi_rest) * params.x_a + 0.5 * params.x_b


def discriminant_q(params: DuelParams) -> float:
    """Margin discriminant Q: the roots in t are real iff Q >= 0.

    Q = (phi_rest^2 / x_a^2) t_m^2 - 2 v_b phi_rest with t_m the vertex.
    Evaluated from this defining expression; its boundary values in v_b are
    Q -> gamma^2 phi^2 / 4 as v_b -> 0 and Q -> phi^2 as v_b -> phi.
    """
    tm = commit_vertex(params)
    scaled = params.phi_rest * tm / params.x_a
    return scaled * scaled - 2.0 * params.v_b * params.phi_rest


def commit_roots(params: DuelParams) -> Optional[tuple[float, float]]:
    """Roots (t_minus, t_plus) of the call margin, or None when Q < 0."""
    q = discriminant_q(params)
    if q < 0.0:
        return None
    tm = commit_vertex(params)
    r = (params.x_a / params.phi_rest) * math.sqrt(q)
    return tm - r, tm + r


def root_bounds(gamma: float, phi: float = 1.0) -> tuple[float, float]:
    """Critical battlefield values (v_minus, v_plus): roots of Q in v_b.

    Q is positive for v_b in [0, v_minus) and (v_plus, phi], negative
    strictly between.  Defined on gamma in (0, 1]; both roots coincide at
    phi / 3 as gamma -> 1, and (v_minus, v_plus) -> (0, 2 phi / 3) as
    gamma -> 0.
    """
    if not 0.0 < gamma <= 1.0:
        raise DomainError("gamma must lie in (0, 1]")
    if phi <= 0:
        raise DomainError("phi must be strictly positive")
    base = 2.0 - gamma + 0.5 * gamma * gamma
    spread = 2.0 * math.sqrt(1.0 - gamma)
    den = 3.0 - gamma + 0.25 * gamma * gamma
    v_minus = 0.5 * phi * (base - spread) / den
    v_plus = 0.5 * phi * (base + spread) / den
    return v_minus, v_plus


def vertex_threshold(gamma: float, phi: float = 1.0) -> float:
    """Value H(gamma) below which the margin's vertex lies inside [0, x_b].

    The vertex condition t_m < x_b is equivalent to v_b < H(gamma) with
    H(gamma) = phi (gamma / 2) / (1 + gamma / 2).
    """
    if not 0.0 < gamma <= 1.0:
        raise DomainError("gamma must lie in (0, 1]")
    if phi <= 0:
        raise DomainError("phi must be strictly positive")
    return phi * (0.5 * gamma) / (1.0 + 0.5 * gamma)


def classify_precommit(params: DuelParams) -> PrecommitClassification:
    """Classify the adversary's answer across all commitment sizes.

    The adversary folds somewhere iff the margin's vertex lies inside the
    feasible range and the margin dips below zero there (Q > 0); the fold
    interval is then [t_minus, t_plus] clipped to [0, x_b].  A tangent
    margin (|Q| below EPS * phi^2) counts as always-calls: the fold set is
    measure-zero and indifference resolves to calling.
    """
    tm = commit_vertex(params)
    q = discriminant_q(params)
    if tm >= params.x_b or q <= EPS * params.phi * params.phi:
        return PrecommitClassification(PrecommitKind.ALWAYS_CALLS)
    t_minus, t_plus = commit_roots(params)  # q > 0 here
    lo = max(t_minus, 0.0)
    hi = min(t_plus, params.x_b)
    if lo > hi:
        return PrecommitClassification(PrecommitKind.ALWAYS_CALLS)
    return PrecommitClassification(PrecommitKind.FOLDS_ON_INTERVAL, (lo, hi))


@dataclass(frozen=True)
class PrecommitGainReport:
    """Result of the full-grid sweep of the committing player's gain."""

    n_gamma: int
    n_vb: int
    n_t: int
    phi: float
    cells: int
    violations: int
    max_gain: float
    worst_gamma: float
    worst_v_b: float
    worst_t: float
    decision_mismatches: int

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "check": "duel_precommit_gain",
            "resolution": [self.n_gamma, self.n_vb, self.n_t],
            "phi": self.phi,
            "cells": self.cells,
            "violations": self.violations,
            "max_gain": self.max_gain,
            "worst": {"gamma": self.worst_gamma, "v_b": self.worst_v_b, "t": self.worst_t},
            "decision_mismatches": self.decision_mismatches,
            "passed": self.passed,
        }


def _decision_mismatches(n_gamma: int, n_vb: int, n_t: int, phi: float) -> int:
    """Cells where the payoff comparison and the margin classification differ.

    Vectorized re-derivation: the payoff decision is call iff
    u_call >= u_fold; the classification folds iff the vertex is feasible,
    Q > 0 and t falls inside [t_minus, t_plus].  Ties within
    EPS * max(1, 2 v_b) on the margin scale count as agreement.
    """
    gamma = ((np.arange(n_gamma) + 0.5) / n_gamma)[:, None, None]
    vb = ((np.arange(n_vb) + 0.5) / n_vb * phi)[None, :, None]
    frac = (np.arange(n_t) / (n_t - 1.0))[None, None, :]
    xb = gamma
    t = frac * xb
    rest = phi - vb
    u_call = rest * (1.0 - (xb - t) / (1.0 - t)) + vb
    u_fold = rest * (1.0 - (xb - t)) - vb
    calls_payoff = u_call >= u_fold

    tm = vb / rest + 0.5 * xb
    q = (rest * tm) ** 2 - 2.0 * vb * rest
    spread = np.sqrt(np.maximum(q, 0.0)) / rest
    folds_class = (tm < xb) & (q > EPS * phi * phi) & (t >= tm - spread) & (t <= tm + spread)

    # Margin-scale tie band: |u_call - u_fold| * (1 - t) = |C(t)| for x_a = 1.
    near_tie = np.abs(u_call - u_fold) * (1.0 - t) <= EPS * np.maximum(1.0, 2.0 * vb)
    return int(np.count_nonzero((calls_payoff == folds_class) & ~near_tie))


def sweep_precommit_gain(
    resolution: tuple[int, int, int] = (100, 100, 100), phi: float = 1.0
) -> PrecommitGainReport:
    """Sweep the pre-commitment gain over the whole parameter space.

    gamma and v_b/phi run over cell centers of (0, 1); t runs over
    [0, x_b] inclusive.  The gain must be strictly negative everywhere: the
    report records the maximum observed gain, its location, the count of
    non-negative cells, and the count of cells whose call/fold decision
    disagrees with `classify_precommit`.
    """
    n_gamma, n_vb, n_t = resolution
    if n_gamma < 2 or n_vb < 2 or n_t < 2:
        raise DomainError("resolution must be at least 2 per axis")
    max_gain, violations, gi, vi, ti = backend.precommit_gain_scan(n_gamma, n_vb, n_t, phi)
    worst_gamma = (gi + 0.5) / n_gamma
    worst_vb = (vi + 0.5) / n_vb * phi
    worst_t = ti / (n_t - 1.0) * worst_gamma
    return PrecommitGainReport(
        n_gamma=n_gamma,
        n_vb=n_vb,
        n_t=n_t,
        phi=phi,
        cells=n_gamma * n_vb * n_t,
        violations=violations,
        max_gain=max_gain,
        worst_gamma=worst_gamma,
        worst_v_b=worst_vb,
        worst_t=worst_t,
        decision_mismatches=_decision_mismatches(n_gamma, n_vb, n_t, phi),
    )


def region_map_duel(resolution: tuple[int, int] | int = (400, 400), phi: float = 1.0) -> RegionGrid:
    """Label the (gamma, v_b) plane by the adversary's decision structure.

    Cell centers over (0, 1) x (0, phi).  The boundary between the two
    labels tracks the analytic curve v_minus(gamma), which is attached to
    the grid as an overlay polyline (256 samples) for rendering.
    """
    if isinstance(resolution, int):
        resolution = (resolution, resolution)
    n_g, n_v = resolution
    if n_g < 2 or n_v < 2:
        raise DomainError("resolution must be at least 2x2")
    gammas = [(i + 0.5) / n_g for i in range(n_g)]
    vbs = [(j + 0.5) / n_v * phi for j in range(n_v)]
    decisions: list[str] = []
    t_minus: list[float] = []
    t_plus: list[float] = []
    for g in gammas:
        for v in vbs:
            cls = classify_precommit(DuelParams(gamma=g, v_b=v, phi=phi))
            decisions.append(cls.kind.value)
            if cls.fold_interval is None:
                t_minus.append(math.nan)
                t_plus.append(math.nan)
            else:
                t_minus.append(cls.fold_interval[0])
                t_plus.append(cls.fold_interval[1])
    samples = 256
    curve = tuple(
        ((k + 0.5) / samples, root_bounds((k + 0.5) / samples, phi)[0]) for k in range(samples)
    )
    return RegionGrid(
        x_name="gamma",
        y_name="v_b",
        x_values=gammas,
        y_values=vbs,
        x_range=(0.0, 1.0),
        y_range=(0.0, phi),
        fields=("gamma", "v_b", "decision", "t_minus", "t_plus"),
        cells={
            "gamma": [g for g in gammas for _ in vbs],
            "v_b": [v for _ in gammas for v in vbs],
            "decision": decisions,
            "t_minus": t_minus,
            "t_plus": t_plus,
        },
        curves=[BoundaryCurve("v_minus", curve)],
    )
