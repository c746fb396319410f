"""Primitive types and closed-form payoffs for two-player General Lotto games.

The equilibrium payoff of a one-shot General Lotto game depends on the
opposing budgets and the total prize value only, so fronts are summarized by
their aggregate value everywhere; the individual battlefield values are kept
purely for input validation.

All operations here are pure functions of their inputs and are safe for
unlimited concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

#: Relative tolerance for all payoff and boundary comparisons in the package.
EPS = 1e-9


class DomainError(ValueError):
    """An input leaves the closed-form payoffs undefined."""


class Decision(Enum):
    """The adversary's binary response to a pre-commitment."""

    CALL = "call"
    FOLD = "fold"


@dataclass(frozen=True)
class BattlefieldFront:
    """A disjoint set of battlefields, identified by their positive values.

    The total prize ``phi`` is always recomputed from the values, never
    cached, so it cannot go stale.
    """

    values: tuple[float, ...]

    def __init__(self, values: Sequence[float]):
        vals = tuple(float(v) for v in values)
        if not vals:
            raise DomainError("a front needs at least one battlefield")
        if any(v <= 0 for v in vals):
            raise DomainError("battlefield values must be strictly positive")
        object.__setattr__(self, "values", vals)

    @property
    def phi(self) -> float:
        """Total prize value of the front."""
        return math.fsum(self.values)

    def without_value(self, v_b: float) -> "BattlefieldFront":
        """Return the front minus one battlefield of value ``v_b``."""
        for i, v in enumerate(self.values):
            if math.isclose(v, v_b, rel_tol=EPS, abs_tol=0.0):
                rest = self.values[:i] + self.values[i + 1 :]
                if not rest:
                    raise DomainError(
                        "removing the committed battlefield would empty the front"
                    )
                return BattlefieldFront(rest)
        raise DomainError(f"no battlefield of value v_b={v_b!r} on this front")


@dataclass(frozen=True)
class DuelGame:
    """Two-player instance: adversary budget ``x_a``, weaker budget ``x_b``.

    The two-player analysis assumes the committing player is strictly
    weaker, so ``x_b < x_a`` is enforced and the budget ratio
    ``gamma = x_b / x_a`` lies in (0, 1).
    """

    x_a: float
    x_b: float
    front: BattlefieldFront

    def __post_init__(self):
        if self.x_a <= 0 or self.x_b <= 0:
            raise DomainError("budgets must be strictly positive")
        if not self.x_b < self.x_a:
            raise DomainError("x_b must be strictly smaller than x_a")

    @property
    def gamma(self) -> float:
        return self.x_b / self.x_a

    @property
    def phi(self) -> float:
        return self.front.phi


@dataclass(frozen=True)
class Commitment:
    """A publicly announced force ``t`` on one battlefield of value ``v_b``.

    Bounds that depend on the enclosing game (``v_b`` below the front total,
    ``t`` within the committing player's budget) are checked by the payoff
    operations, which know the game.
    """

    v_b: float
    t: float

    def __post_init__(self):
        if self.v_b <= 0:
            raise DomainError("v_b must be strictly positive")
        if self.t < 0:
            raise DomainError("t must be non-negative")


@dataclass(frozen=True)
class PayoffPair:
    """Zero-sum payoffs: ``payoff_b`` is the exact negation of ``payoff_a``."""

    payoff_a: float
    payoff_b: float

    @classmethod
    def zero_sum(cls, payoff_a: float) -> "PayoffPair":
        return cls(payoff_a, -payoff_a)


@dataclass(frozen=True)
class ResponseOutcome:
    """The adversary's optimal call/fold decision with the final payoffs."""

    decision: Decision
    payoffs: PayoffPair


def lotto_payoff(x_i: float, x_opp: float, phi: float, *, wins_ties: bool = False) -> float:
    """Equilibrium payoff of a one-shot General Lotto game.

    Returns ``phi * (x_i / x_opp - 1)`` when ``0 < x_i <= x_opp`` and
    ``phi * (1 - x_opp / x_i)`` when ``x_i > x_opp``.

    Zero budgets are pinned by continuity and the tie rule rather than by the
    closed form, which is undefined there: a player with zero budget against
    a positive one loses the whole front, and when both budgets are zero the
    side that wins ties (the adversary) takes everything.  Set ``wins_ties``
    when evaluating from the adversary's seat.
    """
    if x_i < 0 or x_opp < 0:
        raise DomainError("budgets must be non-negative")
    if phi <= 0:
        raise DomainError("phi must be strictly positive")
    if x_opp == 0.0:
        if x_i == 0.0:
            return phi if wins_ties else -phi
        return phi
    if x_i <= x_opp:
        return phi * (x_i / x_opp - 1.0)
    return phi * (1.0 - x_opp / x_i)


def _check_commit(duel: DuelGame, commit: Commitment) -> None:
    phi = duel.phi
    if not commit.v_b < phi:
        raise DomainError("v_b must be strictly below the front total phi")
    if commit.t > duel.x_b:
        raise DomainError("t exceeds the committing player's budget x_b")


def call_payoff(duel: DuelGame, commit: Commitment) -> float:
    """Adversary payoff when it matches the pre-commitment.

    The adversary spends ``t`` to win the committed battlefield and the
    one-shot game over the remaining prizes is played with both budgets
    reduced by ``t``:

        (phi - v_b) * (1 - (x_b - t) / (x_a - t)) + v_b
    """
    _check_commit(duel, commit)
    if commit.t >= duel.x_a:
        raise DomainError("t must stay below x_a (no budget left to call)")
    rest = duel.phi - commit.v_b
    return rest * (1.0 - (duel.x_b - commit.t) / (duel.x_a - commit.t)) + commit.v_b


def fold_payoff(duel: DuelGame, commit: Commitment) -> float:
    """Adversary payoff when it concedes the committed battlefield.

    The committed force stays stuck on the conceded battlefield while the
    adversary keeps its full budget for the rest:

        (phi - v_b) * (1 - (x_b - t) / x_a) - v_b
    """
    _check_commit(duel, commit)
    rest = duel.phi - commit.v_b
    return rest * (1.0 - (duel.x_b - commit.t) / duel.x_a) - commit.v_b


def adversary_response(duel: DuelGame, commit: Commitment) -> ResponseOutcome:
    """Optimal adversary response; indifference resolves to calling."""
    u_call = call_payoff(duel, commit)
    u_fold = fold_payoff(duel, commit)
    if u_call >= u_fold:
        return ResponseOutcome(Decision.CALL, PayoffPair.zero_sum(u_call))
    return ResponseOutcome(Decision.FOLD, PayoffPair.zero_sum(u_fold))


def delta_payoff(duel: DuelGame, commit: Commitment) -> float:
    """Committing player's gain from the pre-commitment.

    Difference between its payoff after the adversary's optimal response and
    its payoff in the plain one-shot game over the full front.  A profitable
    pre-commitment exists iff the result is positive.
    """
    outcome = adversary_response(duel, commit)
    baseline = lotto_payoff(duel.x_b, duel.x_a, duel.phi)
    return outcome.payoffs.payoff_b - baseline
