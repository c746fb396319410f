# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid-scan kernels.

Bit-for-bit mirror of `_reference.py`: identical evaluation order, no fused
multiply-adds (built with ``-ffp-contract=off``), first-occurrence argmax on
ties.
"""


cdef inline double _payoff_vs(double alloc, double opp, double phi) noexcept nogil:
    # Adversary-seat payoff: opp == 0 wins the front on ties; the low branch
    # yields -phi at alloc == 0, matching the zero-budget convention.
    if opp == 0.0:
        return phi
    if alloc <= opp:
        return phi * (alloc / opp - 1.0)
    return phi * (1.0 - opp / alloc)


def lotto_payoff(double x_i, double x_opp, double phi, bint wins_ties=False):
    """Scalar one-shot payoff; adversary-seat ties when ``wins_ties``."""
    if x_opp == 0.0:
        if x_i == 0.0:
            return phi if wins_ties else -phi
        return phi
    if x_i <= x_opp:
        return phi * (x_i / x_opp - 1.0)
    return phi * (1.0 - x_opp / x_i)


def split_scan(double x1, double x2, double phi1, double phi2,
               double budget, double lo, double hi, Py_ssize_t n):
    """Best adversary split on an ``n``-point grid over ``[lo, hi]``.

    Returns the first maximizer ``(s, value)`` of
    ``payoff(s, x1, phi1) + payoff(budget - s, x2, phi2)``.
    """
    cdef double step, s, rem, val, best_val, best_s
    cdef Py_ssize_t k
    if n < 2 or hi <= lo:
        s = lo
        rem = budget - s
        if rem < 0.0:
            rem = 0.0
        return s, _payoff_vs(s, x1, phi1) + _payoff_vs(rem, x2, phi2)
    step = (hi - lo) / (n - 1)
    best_val = -1e300
    best_s = lo
    for k in range(n):
        s = lo + step * k
        if s > hi:
            s = hi
        rem = budget - s
        if rem < 0.0:
            rem = 0.0
        val = _payoff_vs(s, x1, phi1) + _payoff_vs(rem, x2, phi2)
        if val > best_val:
            best_val = val
            best_s = s
    return best_s, best_val


def precommit_gain_scan(Py_ssize_t n_gamma, Py_ssize_t n_vb, Py_ssize_t n_t,
                        double phi):
    """Scan the committing player's gain over the (gamma, v_b, t) grid.

    Same grid and return convention as the numpy fallback:
    ``(max_gain, violations, gi, vi, ti)``.
    """
    cdef double gamma, xb, vb, phi_rest, frac, t, rem, u_call, u_fold, gain
    cdef double best = -1e300
    cdef double denom = n_t - 1.0
    cdef Py_ssize_t gi, vi, ti, bg = 0, bv = 0, bt = 0
    cdef long violations = 0
    for gi in range(n_gamma):
        gamma = (gi + 0.5) / n_gamma
        xb = gamma
        for vi in range(n_vb):
            vb = (vi + 0.5) / n_vb * phi
            phi_rest = phi - vb
            for ti in range(n_t):
                frac = ti / denom
                t = frac * xb
                rem = xb - t
                u_call = phi_rest * (1.0 - rem / (1.0 - t)) + vb
                u_fold = phi_rest * (1.0 - rem) - vb
                if u_fold > u_call:
                    u_call = u_fold
                gain = -u_call - phi * (gamma - 1.0)
                if gain >= 0.0:
                    violations += 1
                if gain > best:
                    best = gain
                    bg = gi
                    bv = vi
                    bt = ti
    return best, violations, bg, bv, bt
