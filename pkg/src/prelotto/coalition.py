"""Three-player machinery: one adversary splitting a unit budget across two
fronts against independent players 1 and 2.

Player budgets are normalized so the adversary holds exactly 1.  The
adversary's optimal split falls into four closed-form regimes:

    Case 1 (side i): all-in on front i when
        phi_i / phi_-i > max(X_i^2, 1) / (X_i X_-i).
    Case 2 (side i): X_Ai = sqrt(phi_i X_i X_-i / phi_-i) (above X_i),
        remainder to the other front, when phi_i X_-i > phi_-i X_i and
        0 < 1 - X_Ai <= X_-i.
    Case 3: X_Ai proportional to sqrt(X_i phi_i) on both fronts, when the
        Case-2 remainder would exceed the other player's budget.
    Case 4: the budget ratios equal the value ratios and X_1 + X_2 >= 1;
        every split on the flat stretch is optimal and the proportional
        split X_i / (X_1 + X_2) is used as the canonical representative
        (it coincides with the Case-3 formula there).

Cases are tested in the order 1, 2, 3, 4, side 1 before side 2.  A first
pass uses plain comparisons; only if nothing matches are the strict
inequalities relaxed by the package tolerance, so boundary points are
absorbed into the earliest case that holds within EPS.  Ratio equality in
Case 4 is always a tolerance check.  Zero budgets are accepted and resolve
through the continuous limits of the formulas.

Player 1 may pre-commit a force t to one battlefield of value v_b on its
front, turning that battlefield into a call/fold subgame for the adversary;
after a call, budgets are renormalized by 1/(1-t) so the case formulas
apply unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import EPS, BattlefieldFront, Decision, DomainError, lotto_payoff
from .regions import BoundaryCurve, RegionGrid

#: Offset below t* at which subgame memberships and payoffs are evaluated:
#: at exactly t* the reduced budgets sit on a case boundary of the subgame,
#: so all checks use the one-sided limit t -> t* from below.
DELTA_COEFF = 1e-9


def default_delta(x1: float) -> float:
    return DELTA_COEFF * max(1.0, x1)


class ClassificationError(ValueError):
    """No split regime matched; carries the inputs for the oracle fallback."""

    def __init__(self, x1, x2, phi1, phi2):
        super().__init__(
            f"no split case matched for x1={x1!r}, x2={x2!r}, phi1={phi1!r}, phi2={phi2!r}"
        )
        self.inputs = (x1, x2, phi1, phi2)


class CaseLabel(Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"


@dataclass(frozen=True)
class SplitDecision:
    """The adversary's front split and the regime that produced it."""

    case: CaseLabel
    side: Optional[int]
    x_a1: float
    x_a2: float

    @property
    def token(self) -> str:
        if self.side is None:
            return self.case.value
        return f"{self.case.value}_i{self.side}"


@dataclass(frozen=True)
class CoalitionGame:
    """Three-player instance; the adversary budget is fixed at exactly 1."""

    x1: float
    x2: float
    front1: BattlefieldFront
    front2: BattlefieldFront

    X_A = 1.0

    def __post_init__(self):
        if self.x1 <= 0 or self.x2 <= 0:
            raise DomainError("player budgets must be strictly positive")

    @property
    def phi1(self) -> float:
        return self.front1.phi

    @property
    def phi2(self) -> float:
        return self.front2.phi


def make_game(x1: float, x2: float, phi1: float, phi2: float, v_b: float | None = None) -> CoalitionGame:
    """Build a game from aggregate front values.

    Front 1 is split into the committed battlefield ``v_b`` and the rest
    when ``v_b`` is given, otherwise kept as a single battlefield.
    """
    if phi1 <= 0 or phi2 <= 0:
        raise DomainError("front values must be strictly positive")
    if v_b is None:
        front1 = BattlefieldFront((phi1,))
    else:
        if not 0.0 < v_b < phi1:
            raise DomainError("v_b must lie in (0, phi1)")
        front1 = BattlefieldFront((v_b, phi1 - v_b))
    return CoalitionGame(x1, x2, front1, BattlefieldFront((phi2,)))


@dataclass(frozen=True)
class CommitOutcome3P:
    """Adversary's best answer to a pre-commitment, with all three payoffs.

    ``split_front1`` / ``split_front2`` are the adversary's allocations to
    the two one-shot games in original (unnormalized) budget units; the
    matched force on the committed battlefield itself is not included.
    The aggregate is zero-sum by construction:
    ``payoff_adversary == -(payoff_player1 + payoff_player2)`` exactly.
    """

    decision: Decision
    split_front1: float
    split_front2: float
    payoff_player1: float
    payoff_player2: float
    payoff_adversary: float
    oracle_derived: bool = False


def _sides(x1, x2, phi1, phi2):
    return ((1, x1, x2, phi1, phi2), (2, x2, x1, phi2, phi1))


def _split_for(side: int, own: float) -> tuple[float, float]:
    own = min(max(own, 0.0), 1.0)
    if side == 1:
        return own, 1.0 - own
    return 1.0 - own, own


def _match_case(x1, x2, phi1, phi2, slack: float) -> Optional[SplitDecision]:
    def sl(a, b):
        return slack * max(1.0, abs(a), abs(b))

    for i, xi, xo, pi, po in _sides(x1, x2, phi1, phi2):
        lhs = pi * xi * xo
        rhs = po * max(xi * xi, 1.0)
        if lhs > rhs - sl(lhs, rhs):
            a1, a2 = _split_for(i, 1.0)
            return SplitDecision(CaseLabel.CASE1, i, a1, a2)

    for i, xi, xo, pi, po in _sides(x1, x2, phi1, phi2):
        if pi * xo > po * xi - sl(pi * xo, po * xi):
            s = math.sqrt(pi * xi * xo / po)
            rem = 1.0 - s
            if rem > -sl(rem, 0.0) and rem <= xo + sl(rem, xo):
                a1, a2 = _split_for(i, s)
                return SplitDecision(CaseLabel.CASE2, i, a1, a2)

    for i, xi, xo, pi, po in _sides(x1, x2, phi1, phi2):
        if pi * xo >= po * xi - sl(pi * xo, po * xi):
            s = math.sqrt(pi * xi * xo / po)
            rem = 1.0 - s
            if rem > xo - sl(rem, xo):
                w1 = math.sqrt(x1 * phi1)
                w2 = math.sqrt(x2 * phi2)
                if w1 + w2 == 0.0:
                    raise ClassificationError(x1, x2, phi1, phi2)
                a1 = w1 / (w1 + w2)
                return SplitDecision(CaseLabel.CASE3, None, a1, 1.0 - a1)

    lhs = phi1 * x2
    rhs = phi2 * x1
    total = x1 + x2
    if abs(lhs - rhs) <= EPS * max(1.0, abs(lhs), abs(rhs)) and total >= 1.0 - sl(total, 1.0):
        if total == 0.0:
            raise ClassificationError(x1, x2, phi1, phi2)
        a1 = x1 / total
        return SplitDecision(CaseLabel.CASE4, None, a1, 1.0 - a1)
    return None


def classify_case(x1: float, x2: float, phi1: float, phi2: float) -> SplitDecision:
    """Classify the adversary's optimal split regime for a unit budget.

    First match wins in the order Case 1, 2, 3, 4 (side 1 before side 2);
    boundary points that no case claims strictly are retried with the
    package tolerance.  Raises ClassificationError when nothing matches.
    """
    if x1 < 0 or x2 < 0:
        raise DomainError("budgets must be non-negative")
    if phi1 <= 0 or phi2 <= 0:
        raise DomainError("front values must be strictly positive")
    found = _match_case(x1, x2, phi1, phi2, 0.0)
    if found is None:
        found = _match_case(x1, x2, phi1, phi2, EPS)
    if found is None:
        raise ClassificationError(x1, x2, phi1, phi2)
    return found


def renormalize_after_call(game: CoalitionGame, t: float, v_b: float = 0.0) -> CoalitionGame:
    """Rescale budgets after the adversary calls a pre-commitment of t.

    The matched forces leave both sides, so x1 -> (x1 - t) / (1 - t),
    x2 -> x2 / (1 - t) and the adversary is back at exactly 1.  The
    committed battlefield (value ``v_b``, when given) is dropped from
    front 1.  One-shot payoffs are invariant under this common rescaling.
    """
    if t < 0 or t >= 1.0:
        raise DomainError("t must lie in [0, 1)")
    if t >= game.x1:
        raise DomainError("t must stay below the committing player's budget x1")
    if t == 0.0 and v_b == 0.0:
        return game
    front1 = game.front1 if v_b == 0.0 else game.front1.without_value(v_b)
    scale = 1.0 - t
    return CoalitionGame(
        (game.x1 - t) / scale,
        game.x2 / scale,
        front1,
        game.front2,
    )


def _front1_share_with_fallback(x1, x2, phi1, phi2, counter: list | None = None) -> float:
    """Adversary's front-1 allocation, falling back to the grid oracle on
    the (measure-zero) inputs no case claims."""
    try:
        return classify_case(x1, x2, phi1, phi2).x_a1
    except ClassificationError:
        from .oracle import OracleConfig, scan_best_split

        if counter is not None:
            counter[0] += 1
        s, _ = scan_best_split(x1, x2, phi1, phi2, 1.0, OracleConfig())
        return s


def discard_response(game: CoalitionGame, t: float, _fallbacks: list | None = None) -> float:
    """Player 1's payoff after discarding t of its budget unused.

    The adversary best-responds to the reduced budget pair (x1 - t, x2)
    and player 1 collects the one-shot payoff on its full front.
    """
    if t < 0 or t > game.x1:
        raise DomainError("t must lie in [0, x1]")
    x_a1 = _front1_share_with_fallback(game.x1 - t, game.x2, game.phi1, game.phi2, _fallbacks)
    return lotto_payoff(game.x1 - t, x_a1, game.phi1)


def tstar(game: CoalitionGame, v_b: float) -> float:
    """Commitment size equalizing the budget-to-value ratios across fronts.

    t* = x1 - ((phi1 - v_b) / phi2) x2; callers must check t* > 0 before
    using it as a commitment.
    """
    if not 0.0 < v_b < game.phi1:
        raise DomainError("v_b must lie in (0, phi1)")
    return game.x1 - ((game.phi1 - v_b) / game.phi2) * game.x2


def player1_payoff_nocommit(game: CoalitionGame) -> float:
    """Player 1's equilibrium payoff under the adversary's optimal split."""
    split = classify_case(game.x1, game.x2, game.phi1, game.phi2)
    return lotto_payoff(game.x1, split.x_a1, game.phi1)


class CaseRegionError(DomainError):
    """The commit-and-call closed form is outside its regime; use
    `adversary_best_response_3p` for the general path."""


def player1_payoff_commit_call(
    game: CoalitionGame, v_b: float, t: float, *, require_case2: bool = True
) -> float:
    """Player 1's payoff when it commits t to the battlefield and the
    adversary calls, playing its Case 2 (side 2) split on the renormalized
    subgame.

    The committed battlefield is lost to the caller, so v_b is subtracted.
    With ``require_case2`` the renormalized budgets are checked to actually
    lie in Case 2 (side 2) for the remaining values; outside that regime
    the closed form does not describe the adversary's best response.
    """
    if not 0.0 < v_b < game.phi1:
        raise DomainError("v_b must lie in (0, phi1)")
    if not 0.0 < t < min(game.x1, 1.0):
        raise DomainError("t must lie strictly inside (0, min(x1, 1))")
    phi1_rest = game.phi1 - v_b
    scale = 1.0 - t
    xh1 = (game.x1 - t) / scale
    xh2 = game.x2 / scale
    if require_case2:
        sub = classify_case(xh1, xh2, phi1_rest, game.phi2)
        if not (sub.case is CaseLabel.CASE2 and sub.side == 2):
            raise CaseRegionError(
                f"renormalized budgets fall in {sub.token}, not case2_i2; "
                "use adversary_best_response_3p instead"
            )
    x_a2 = min(math.sqrt(game.phi2 * xh2 * xh1 / phi1_rest), 1.0)
    x_a1 = 1.0 - x_a2
    return lotto_payoff(xh1, x_a1, phi1_rest) - v_b


def _branch_outcome(decision, a1_norm, a2_norm, x1_eff, x2_eff, phi1_rest, phi2, vb_signed, units):
    u1 = lotto_payoff(a1_norm, x1_eff, phi1_rest, wins_ties=True) + vb_signed
    u2 = lotto_payoff(a2_norm, x2_eff, phi2, wins_ties=True)
    return CommitOutcome3P(
        decision=decision,
        split_front1=a1_norm * units,
        split_front2=a2_norm * units,
        payoff_player1=-u1,
        payoff_player2=-u2,
        payoff_adversary=u1 + u2,
    )


def adversary_best_response_3p(game: CoalitionGame, v_b: float, t: float) -> CommitOutcome3P:
    """Adversary's best branch against a pre-commitment of t on value v_b.

    Calling matches t off the top and splits the remaining 1 - t across the
    renormalized subgame; folding concedes the battlefield, keeps the full
    unit budget, and faces player 1's reduced budget.  Ties resolve to
    calling.  If the case classification fails on either branch the result
    is taken from the brute-force oracle and flagged ``oracle_derived``.
    """
    if not 0.0 < v_b < game.phi1:
        raise DomainError("v_b must lie in (0, phi1)")
    if t < 0 or t > game.x1:
        raise DomainError("t must lie in [0, x1]")
    phi1_rest = game.phi1 - v_b
    try:
        fold_split = classify_case(game.x1 - t, game.x2, phi1_rest, game.phi2)
        fold = _branch_outcome(
            Decision.FOLD,
            fold_split.x_a1,
            fold_split.x_a2,
            game.x1 - t,
            game.x2,
            phi1_rest,
            game.phi2,
            -v_b,
            1.0,
        )
        if t >= 1.0:
            return fold
        scale = 1.0 - t
        xh1 = (game.x1 - t) / scale
        xh2 = game.x2 / scale
        call_split = classify_case(xh1, xh2, phi1_rest, game.phi2)
        call = _branch_outcome(
            Decision.CALL,
            call_split.x_a1,
            call_split.x_a2,
            xh1,
            xh2,
            phi1_rest,
            game.phi2,
            v_b,
            scale,
        )
    except ClassificationError:
        from .oracle import OracleConfig, oracle_adversary_3p

        return oracle_adversary_3p(game, v_b, t, OracleConfig())
    return call if call.payoff_adversary >= fold.payoff_adversary else fold


@dataclass(frozen=True)
class PrecommitMembership:
    """Closed-form test of whether committing t* - delta is profitable.

    ``margin_a`` is lhs - rhs of the payoff-improvement condition for the
    applicable base case (1 or 2, side 1); ``margin_b`` is lhs - rhs of the
    call-preference condition, identical for both sets.  NaN margins mean
    no condition set applies.
    """

    x1: float
    x2: float
    v_b: float
    tstar: float
    delta: float
    base_case: Optional[str]
    condition_set: Optional[int]
    budgets_in_unit: bool
    tstar_positive: bool
    reduced_in_case2_side2: bool
    renormalized_in_case2_side2: bool
    margin_a: float
    margin_b: float
    member: bool

    def as_dict(self) -> dict:
        return {
            "x1": self.x1,
            "x2": self.x2,
            "v_b": self.v_b,
            "tstar": self.tstar,
            "delta": self.delta,
            "base_case": self.base_case,
            "condition_set": self.condition_set,
            "budgets_in_unit": self.budgets_in_unit,
            "tstar_positive": self.tstar_positive,
            "reduced_in_case2_side2": self.reduced_in_case2_side2,
            "renormalized_in_case2_side2": self.renormalized_in_case2_side2,
            "margin_a": self.margin_a,
            "margin_b": self.margin_b,
            "member": self.member,
        }


def _is_case2_side2(x1, x2, phi1, phi2) -> bool:
    try:
        sub = classify_case(x1, x2, phi1, phi2)
    except ClassificationError:
        return False
    return sub.case is CaseLabel.CASE2 and sub.side == 2


def precommit_membership(
    game: CoalitionGame, v_b: float, delta: float | None = None
) -> PrecommitMembership:
    """Evaluate the profitable-pre-commitment conditions at t = t*.

    Membership requires: budgets inside the unit square, t* positive beyond
    delta, base game in Case 1 or Case 2 (side 1), both the reduced pair
    (x1 - t, x2) and its renormalization in Case 2 (side 2) for the
    remaining values (checked at t = t* - delta), and the two closed-form
    inequalities of the applicable condition set, evaluated at t*.
    """
    if not 0.0 < v_b < game.phi1:
        raise DomainError("v_b must lie in (0, phi1)")
    x1, x2 = game.x1, game.x2
    phi1, phi2 = game.phi1, game.phi2
    phi1_rest = phi1 - v_b
    if delta is None:
        delta = default_delta(x1)
    ts = tstar(game, v_b)
    budgets_ok = 0.0 < x1 < 1.0 and 0.0 < x2 < 1.0
    tstar_ok = ts > delta

    base_token: Optional[str] = None
    condition_set: Optional[int] = None
    try:
        base = classify_case(x1, x2, phi1, phi2)
        base_token = base.token
        if base.case is CaseLabel.CASE1 and base.side == 1:
            condition_set = 1
        elif base.case is CaseLabel.CASE2 and base.side == 1:
            condition_set = 2
    except ClassificationError:
        base = None

    reduced_ok = False
    renorm_ok = False
    if tstar_ok:
        t_eval = ts - delta
        x1_red = x1 - t_eval
        reduced_ok = _is_case2_side2(x1_red, x2, phi1_rest, phi2)
        if t_eval < 1.0:
            scale = 1.0 - t_eval
            renorm_ok = _is_case2_side2(x1_red / scale, x2 / scale, phi1_rest, phi2)

    if condition_set == 1:
        margin_a = phi2 * (x1 + x2 - 1.0) - (phi1_rest * x2 * (x1 - 1.0) + v_b * x1 * x2)
    elif condition_set == 2:
        margin_a = phi2 * (x1 + x2 - 1.0) - (math.sqrt(phi1 * phi2 * x1 * x2) - phi1_rest * x2)
    else:
        margin_a = math.nan
    margin_b = 2.0 * v_b - ts * phi2 / x2

    member = (
        budgets_ok
        and tstar_ok
        and condition_set is not None
        and reduced_ok
        and renorm_ok
        and margin_a >= 0.0
        and margin_b >= 0.0
    )
    return PrecommitMembership(
        x1=x1,
        x2=x2,
        v_b=v_b,
        tstar=ts,
        delta=delta,
        base_case=base_token,
        condition_set=condition_set,
        budgets_in_unit=budgets_ok,
        tstar_positive=tstar_ok,
        reduced_in_case2_side2=reduced_ok,
        renormalized_in_case2_side2=renorm_ok,
        margin_a=margin_a,
        margin_b=margin_b,
        member=member,
    )


@dataclass(frozen=True)
class DiscardSlopeReport:
    """Finite-difference check that discarding budget never helps player 1."""

    n_x1: int
    n_x2: int
    t_samples: int
    phi1: float
    phi2: float
    x_max: float
    cells: int
    evaluations: int
    violations: int
    max_slope: float
    worst_x1: float
    worst_x2: float
    worst_t: float
    tolerance: float
    oracle_fallbacks: int

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "check": "discard_slope",
            "resolution": [self.n_x1, self.n_x2],
            "t_samples": self.t_samples,
            "phi1": self.phi1,
            "phi2": self.phi2,
            "x_max": self.x_max,
            "cells": self.cells,
            "evaluations": self.evaluations,
            "violations": self.violations,
            "max_slope": self.max_slope,
            "worst": {"x1": self.worst_x1, "x2": self.worst_x2, "t": self.worst_t},
            "tolerance": self.tolerance,
            "oracle_fallbacks": self.oracle_fallbacks,
            "passed": self.passed,
        }


def sweep_discard_slope(
    resolution: tuple[int, int] | int = (50, 50),
    t_samples: int = 20,
    phi1: float = 1.0,
    phi2: float = 1.0,
    x_max: float = 2.0,
    tolerance: float = 1e-8,
) -> DiscardSlopeReport:
    """Forward differences of `discard_response` in t over the budget plane.

    (x1, x2) run over cell centers of (0, x_max)^2 and t over [0, x1]
    inclusive.  Every forward slope must stay at or below the tolerance.
    """
    if isinstance(resolution, int):
        resolution = (resolution, resolution)
    n1, n2 = resolution
    if n1 < 2 or n2 < 2 or t_samples < 2:
        raise DomainError("resolution and t_samples must be at least 2")
    fallbacks = [0]
    violations = 0
    max_slope = -math.inf
    worst = (math.nan, math.nan, math.nan)
    evaluations = 0
    for i in range(n1):
        x1 = (i + 0.5) * x_max / n1
        for j in range(n2):
            x2 = (j + 0.5) * x_max / n2
            game = make_game(x1, x2, phi1, phi2)
            # fraction first: k/(n-1) is exactly 1.0 at the endpoint, so
            # the last sample never overshoots x1 by an ulp
            ts = [x1 * (k / (t_samples - 1)) for k in range(t_samples)]
            vals = [discard_response(game, t, fallbacks) for t in ts]
            evaluations += t_samples
            for k in range(t_samples - 1):
                slope = (vals[k + 1] - vals[k]) / (ts[k + 1] - ts[k])
                if slope > max_slope:
                    max_slope = slope
                    worst = (x1, x2, ts[k])
                if slope > tolerance:
                    violations += 1
    return DiscardSlopeReport(
        n_x1=n1,
        n_x2=n2,
        t_samples=t_samples,
        phi1=phi1,
        phi2=phi2,
        x_max=x_max,
        cells=n1 * n2,
        evaluations=evaluations,
        violations=violations,
        max_slope=max_slope,
        worst_x1=worst[0],
        worst_x2=worst[1],
        worst_t=worst[2],
        tolerance=tolerance,
        oracle_fallbacks=fallbacks[0],
    )


def _case_curves(phi1: float, phi2: float, samples: int = 256) -> list[BoundaryCurve]:
    """Analytic base-game case boundaries clipped to the unit square."""

    def clip(points):
        return tuple(p for p in points if 0.0 < p[0] < 1.0 and 0.0 < p[1] < 1.0)

    xs = [(k + 0.5) / samples for k in range(samples)]
    curves = []
    ratio = tuple((x, phi2 * x / phi1) for x in xs)
    curves.append(BoundaryCurve("ratio_line", clip(ratio)))
    curves.append(BoundaryCurve("case1_i1", clip(tuple((x, phi2 / (phi1 * x)) for x in xs))))
    curves.append(BoundaryCurve("case1_i2", clip(tuple((phi1 / (phi2 * y), y) for y in xs))))
    curves.append(
        BoundaryCurve(
            "case2_i2_case3",
            clip(tuple((x, phi1 * (1.0 - x) * (1.0 - x) / (phi2 * x)) for x in xs)),
        )
    )
    curves.append(
        BoundaryCurve(
            "case2_i1_case3",
            clip(tuple((phi2 * (1.0 - y) * (1.0 - y) / (phi1 * y), y) for y in xs)),
        )
    )
    return [c for c in curves if len(c.points) >= 2]


def region_map_coalition(
    phi1: float,
    phi2: float,
    v_b: float,
    resolution: tuple[int, int] | int = (200, 200),
    delta: float | None = None,
) -> RegionGrid:
    """Label the (x1, x2) unit square by pre-commitment profitability.

    Each cell carries the base-game case label, t*, the membership flag and
    the two condition margins.  The analytic case boundaries are attached
    as overlay polylines.
    """
    if isinstance(resolution, int):
        resolution = (resolution, resolution)
    n1, n2 = resolution
    if n1 < 2 or n2 < 2:
        raise DomainError("resolution must be at least 2x2")
    x1s = [(i + 0.5) / n1 for i in range(n1)]
    x2s = [(j + 0.5) / n2 for j in range(n2)]
    labels: list[str] = []
    tstars: list[float] = []
    members: list[bool] = []
    margins_a: list[float] = []
    margins_b: list[float] = []
    for x1 in x1s:
        for x2 in x2s:
            game = make_game(x1, x2, phi1, phi2, v_b)
            rep = precommit_membership(game, v_b, delta)
            labels.append(rep.base_case if rep.base_case is not None else "unclassified")
            tstars.append(rep.tstar)
            members.append(rep.member)
            margins_a.append(rep.margin_a)
            margins_b.append(rep.margin_b)
    return RegionGrid(
        x_name="x1",
        y_name="x2",
        x_values=x1s,
        y_values=x2s,
        x_range=(0.0, 1.0),
        y_range=(0.0, 1.0),
        fields=("x1", "x2", "case_label", "tstar", "member", "margin_a", "margin_b"),
        cells={
            "x1": [x1 for x1 in x1s for _ in x2s],
            "x2": [x2 for _ in x1s for x2 in x2s],
            "case_label": labels,
            "tstar": tstars,
            "member": members,
            "margin_a": margins_a,
            "margin_b": margins_b,
        },
        curves=_case_curves(phi1, phi2),
    )
