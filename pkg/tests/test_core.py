"""Closed-form payoff primitives: frozen examples and invariants.

Expected values marked "hand" were evaluated directly from the branch
formulas, independently of the implementation path under test.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prelotto.core import (
    BattlefieldFront,
    Commitment,
    Decision,
    DomainError,
    DuelGame,
    PayoffPair,
    adversary_response,
    call_payoff,
    delta_payoff,
    fold_payoff,
    lotto_payoff,
)
from prelotto.duel import DuelParams, call_margin

budgets = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)
prizes = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


def duel(x_a, x_b, phi, v_b):
    return DuelGame(x_a, x_b, BattlefieldFront((v_b, phi - v_b)))


class TestBattlefieldFront:
    def test_phi_is_recomputed_sum(self):
        front = BattlefieldFront((0.25, 0.5, 1.25))
        assert front.phi == 2.0

    def test_rejects_empty_and_nonpositive(self):
        with pytest.raises(DomainError):
            BattlefieldFront(())
        with pytest.raises(DomainError):
            BattlefieldFront((1.0, 0.0))
        with pytest.raises(DomainError):
            BattlefieldFront((1.0, -0.5))

    def test_without_value(self):
        front = BattlefieldFront((0.5, 1.0))
        assert front.without_value(0.5).values == (1.0,)
        with pytest.raises(DomainError):
            front.without_value(0.7)


class TestDuelGame:
    def test_requires_weaker_committing_player(self):
        front = BattlefieldFront((1.0,))
        with pytest.raises(DomainError):
            DuelGame(1.0, 1.0, front)
        with pytest.raises(DomainError):
            DuelGame(0.5, 1.0, front)
        assert DuelGame(1.0, 0.25, front).gamma == 0.25


class TestLottoPayoff:
    def test_equal_budgets(self):
        assert lotto_payoff(1, 1, 2) == 0.0

    def test_weaker_side(self):
        assert lotto_payoff(0.5, 1, 1) == -0.5

    def test_stronger_side(self):
        assert lotto_payoff(1, 0.5, 3) == 1.5

    def test_hand_value_and_antisymmetry(self):
        # hand: 2 * (0.3 / 0.9 - 1) = -4/3 on the low branch,
        # 2 * (1 - 0.3 / 0.9) = +4/3 on the high branch
        assert lotto_payoff(0.3, 0.9, 2) == pytest.approx(-4 / 3, rel=1e-12)
        assert lotto_payoff(0.9, 0.3, 2) == pytest.approx(4 / 3, rel=1e-12)
        assert lotto_payoff(0.3, 0.9, 2) == -lotto_payoff(0.9, 0.3, 2)

    def test_zero_budget_conventions(self):
        assert lotto_payoff(0.0, 1.0, 2.5) == -2.5
        assert lotto_payoff(1.0, 0.0, 2.5) == 2.5
        assert lotto_payoff(0.0, 0.0, 2.5) == -2.5
        assert lotto_payoff(0.0, 0.0, 2.5, wins_ties=True) == 2.5

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            lotto_payoff(-0.1, 1.0, 1.0)
        with pytest.raises(DomainError):
            lotto_payoff(1.0, -0.1, 1.0)
        with pytest.raises(DomainError):
            lotto_payoff(1.0, 1.0, 0.0)

    @given(a=budgets, b=budgets, phi=prizes)
    def test_antisymmetry(self, a, b, phi):
        assert lotto_payoff(a, b, phi) == pytest.approx(-lotto_payoff(b, a, phi), rel=1e-12, abs=1e-12)

    @given(a=budgets, b=budgets, phi=prizes, c=st.floats(min_value=1e-3, max_value=1e3))
    def test_scale_invariance(self, a, b, phi, c):
        assert lotto_payoff(c * a, c * b, phi) == pytest.approx(
            lotto_payoff(a, b, phi), rel=1e-9, abs=1e-12
        )

    @given(a=budgets, b=budgets, phi=prizes)
    def test_bound(self, a, b, phi):
        assert abs(lotto_payoff(a, b, phi)) <= phi * (1 + 1e-12)

    @given(a=budgets, b=budgets, phi=prizes, bump=st.floats(min_value=1e-6, max_value=10))
    def test_monotonicity(self, a, b, phi, bump):
        base = lotto_payoff(a, b, phi)
        assert lotto_payoff(a + bump, b, phi) >= base - 1e-12 * phi
        assert lotto_payoff(a, b + bump, phi) <= base + 1e-12 * phi


class TestCallFold:
    def test_call_exhausts_weaker_budget(self):
        # hand: 0.7 * (1 - 0) + 0.3
        assert call_payoff(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.5)) == pytest.approx(1.0)

    def test_call_at_zero(self):
        # hand: 0.7 * 0.5 + 0.3
        assert call_payoff(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.0)) == pytest.approx(0.65)

    def test_call_hand_value(self):
        # hand: 1.6 * (1 - 0.4 / 0.8) + 0.4 = 1.2
        assert call_payoff(duel(1, 0.6, 2, 0.4), Commitment(0.4, 0.2)) == pytest.approx(1.2)

    def test_fold_values(self):
        assert fold_payoff(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.5)) == pytest.approx(0.4)
        assert fold_payoff(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.0)) == pytest.approx(0.05)
        # hand: 1.6 * (1 - 0.4) - 0.4 = 0.56
        assert fold_payoff(duel(1, 0.6, 2, 0.4), Commitment(0.4, 0.2)) == pytest.approx(0.56)

    def test_domain_errors(self):
        g = duel(1, 0.5, 1, 0.3)
        with pytest.raises(DomainError):
            call_payoff(duel(0.6, 0.55, 1, 0.3), Commitment(0.3, 0.58))
        with pytest.raises(DomainError):
            call_payoff(g, Commitment(0.3, 0.6))  # t > x_b
        with pytest.raises(DomainError):
            fold_payoff(g, Commitment(1.0, 0.1))  # v_b = phi


class TestAdversaryResponse:
    def test_always_calls_at_zero_commitment(self):
        out = adversary_response(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.0))
        assert out.decision is Decision.CALL
        assert out.payoffs.payoff_a == pytest.approx(0.65)

    def test_calls_on_budget_exhausting_commitment(self):
        out = adversary_response(duel(1, 0.5, 1, 0.3), Commitment(0.3, 0.5))
        assert out.decision is Decision.CALL
        assert out.payoffs.payoff_a == pytest.approx(1.0)

    @given(
        x_b=st.floats(min_value=0.05, max_value=0.95),
        w=st.floats(min_value=0.05, max_value=0.95),
        tw=st.floats(min_value=0, max_value=1),
        phi=prizes,
    )
    def test_zero_sum_is_exact_negation(self, x_b, w, tw, phi):
        g = duel(1.0, x_b, phi, w * phi)
        out = adversary_response(g, Commitment(w * phi, tw * x_b))
        assert out.payoffs.payoff_b == -out.payoffs.payoff_a

    def test_payoff_pair_constructor(self):
        pair = PayoffPair.zero_sum(0.3)
        assert pair.payoff_b == -0.3


class TestDeltaPayoff:
    def test_hand_values(self):
        g = duel(1, 0.5, 1, 0.3)
        # hand: -(0.65) - (0.5 - 1) = -0.15 and -(1.0) - (-0.5) = -0.5
        assert delta_payoff(g, Commitment(0.3, 0.0)) == pytest.approx(-0.15, abs=1e-12)
        assert delta_payoff(g, Commitment(0.3, 0.5)) == pytest.approx(-0.5, abs=1e-12)

    @given(
        gamma=st.floats(min_value=0.05, max_value=0.95),
        w=st.floats(min_value=0.05, max_value=0.95),
        tw=st.floats(min_value=0, max_value=1),
    )
    @settings(max_examples=300)
    def test_never_profitable(self, gamma, w, tw):
        g = duel(1.0, gamma, 1.0, w)
        assert delta_payoff(g, Commitment(w, tw * gamma)) < 0


class TestDecisionConsistency:
    def test_margin_sign_matches_payoff_comparison(self):
        # the call margin is the payoff difference times (x_a - t) / x_a > 0
        rng = np.random.default_rng(11)
        for _ in range(2000):
            gamma = rng.uniform(0.02, 0.98)
            v_b = rng.uniform(0.02, 0.98)
            t = rng.uniform(0.0, gamma)
            params = DuelParams(gamma=gamma, v_b=v_b)
            g = duel(1.0, gamma, 1.0, v_b)
            margin = call_margin(params, t)
            diff = call_payoff(g, Commitment(v_b, t)) - fold_payoff(g, Commitment(v_b, t))
            if abs(margin) <= 1e-9 * max(1.0, 2 * v_b):
                continue
            assert margin * diff > 0
