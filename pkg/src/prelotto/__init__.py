"""Multi-stage General Lotto pre-commitment games.

Closed-form equilibrium payoffs, adversary call/fold best responses,
pre-commitment profitability analysis in two- and three-player settings,
brute-force oracles certifying every closed form, and parameter-region
sweeps with CSV/JSON/SVG emission.
"""

from .backend import BACKEND
from .core import (
    EPS,
    BattlefieldFront,
    Commitment,
    Decision,
    DomainError,
    DuelGame,
    PayoffPair,
    ResponseOutcome,
    adversary_response,
    call_payoff,
    delta_payoff,
    fold_payoff,
    lotto_payoff,
)
from .duel import (
    DuelParams,
    PrecommitClassification,
    PrecommitKind,
    call_margin,
    classify_precommit,
    commit_roots,
    commit_vertex,
    discriminant_q,
    region_map_duel,
    root_bounds,
    sweep_precommit_gain,
    vertex_threshold,
)
from .coalition import (
    CaseLabel,
    ClassificationError,
    CoalitionGame,
    CommitOutcome3P,
    SplitDecision,
    adversary_best_response_3p,
    classify_case,
    discard_response,
    make_game,
    player1_payoff_commit_call,
    player1_payoff_nocommit,
    precommit_membership,
    region_map_coalition,
    renormalize_after_call,
    sweep_discard_slope,
    tstar,
)
from .oracle import (
    OracleConfig,
    oracle_adversary_3p,
    oracle_profitability,
    oracle_split,
    sample_games_stratified,
    verify_split_agreement,
)
from .regions import BoundaryCurve, RegionGrid

__version__ = "0.1.0"
