"""Pure-numpy fallback for the grid-scan kernels.

Mirrors `_speedups.pyx` operation for operation.  The two backends must stay
bit-identical: same evaluation order, no fused multiply-adds (the extension
is compiled with ``-ffp-contract=off``), and first-occurrence argmax
semantics on ties.
"""

from __future__ import annotations

import numpy as np


def lotto_payoff(x_i: float, x_opp: float, phi: float, wins_ties: bool = False) -> float:
    """Scalar one-shot payoff; adversary-seat ties when ``wins_ties``."""
    if x_opp == 0.0:
        if x_i == 0.0:
            return phi if wins_ties else -phi
        return phi
    if x_i <= x_opp:
        return phi * (x_i / x_opp - 1.0)
    return phi * (1.0 - x_opp / x_i)


def _payoff_vs(alloc: np.ndarray, opp: float, phi: float) -> np.ndarray:
    """Adversary-seat payoff of a vector of allocations against budget ``opp``.

    The ``alloc <= opp`` branch evaluates to ``-phi`` at ``alloc == 0``, which
    already matches the zero-budget convention; ``opp == 0`` means the whole
    front is won on ties regardless of the allocation.
    """
    if opp == 0.0:
        return np.full(alloc.shape, phi)
    with np.errstate(divide="ignore"):
        high = phi * (1.0 - opp / alloc)
    return np.where(alloc <= opp, phi * (alloc / opp - 1.0), high)


def split_scan(
    x1: float,
    x2: float,
    phi1: float,
    phi2: float,
    budget: float,
    lo: float,
    hi: float,
    n: int,
) -> tuple[float, float]:
    """Best adversary split on an ``n``-point grid over ``[lo, hi]``.

    Evaluates ``payoff(s, x1, phi1) + payoff(budget - s, x2, phi2)`` from the
    adversary's seat at ``s = lo + k * (hi - lo) / (n - 1)`` and returns the
    first maximizer ``(s, value)``.
    """
    if n < 2 or hi <= lo:
        s0 = lo
        rem = budget - s0
        if rem < 0.0:
            rem = 0.0
        return s0, lotto_payoff(s0, x1, phi1, True) + lotto_payoff(rem, x2, phi2, True)
    step = (hi - lo) / (n - 1)
    s = lo + step * np.arange(n)
    np.minimum(s, hi, out=s)
    rem = budget - s
    np.maximum(rem, 0.0, out=rem)
    val = _payoff_vs(s, x1, phi1) + _payoff_vs(rem, x2, phi2)
    i = int(np.argmax(val))
    return float(s[i]), float(val[i])


def precommit_gain_scan(
    n_gamma: int, n_vb: int, n_t: int, phi: float
) -> tuple[float, int, int, int, int]:
    """Scan the committing player's gain over the (gamma, v_b, t) grid.

    gamma and v_b/phi run over cell centers of (0, 1); t runs over the closed
    interval [0, x_b] inclusive (x_a = 1).  Returns
    ``(max_gain, violations, gi, vi, ti)`` where violations counts cells with
    non-negative gain and the indices locate the first maximal cell in
    row-major (gamma, v_b, t) order.
    """
    vb = (np.arange(n_vb) + 0.5) / n_vb * phi
    frac = np.arange(n_t) / (n_t - 1.0)
    phi_rest = phi - vb
    best = -np.inf
    best_idx = (0, 0, 0)
    violations = 0
    for gi in range(n_gamma):
        gamma = (gi + 0.5) / n_gamma
        xb = gamma
        t = frac * xb
        rem = xb - t
        u_call = phi_rest[:, None] * (1.0 - rem[None, :] / (1.0 - t[None, :])) + vb[:, None]
        u_fold = phi_rest[:, None] * (1.0 - rem[None, :]) - vb[:, None]
        gain = -np.maximum(u_call, u_fold) - phi * (gamma - 1.0)
        violations += int(np.count_nonzero(gain >= 0.0))
        m = float(gain.max())
        if m > best:
            best = m
            vi, ti = np.unravel_index(int(np.argmax(gain)), gain.shape)
            best_idx = (gi, int(vi), int(ti))
    return best, violations, best_idx[0], best_idx[1], best_idx[2]
