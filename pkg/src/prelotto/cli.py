"""Command-line surface: single-instance queries, verification suites, and
region sweeps with CSV/JSON/SVG output.

Exit codes: 0 success (and all checks verified), 1 usage error, 2 domain
error, 3 verification failure.  Outputs are deterministic: identical
configurations (including the seed) produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import coalition, duel, oracle
from .core import (
    BattlefieldFront,
    Commitment,
    DomainError,
    DuelGame,
    adversary_response,
    delta_payoff,
    lotto_payoff,
)
from .coalition import ClassificationError, make_game
from .oracle import OracleConfig
from .regions import RegionGrid
from .render import render_region_svg

#: Environment variable naming a default config file.
CONFIG_ENV = "PRELOTTO_CONFIG"

DEFAULT_SEED = 1729

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

MODES = ("payoff", "commit2p", "split", "commit3p", "region2p", "region3p", "verify")

_FLOAT_KEYS = ("xa", "xb", "x1", "x2", "phi", "phi1", "phi2", "vb", "t", "delta")
_INT_KEYS = ("resolution", "seed")


class UsageError(Exception):
    pass


@dataclass
class SweepConfig:
    """One resolved CLI invocation: mode, parameters, output destination."""

    mode: str
    target: Optional[str] = None
    params: dict = field(default_factory=dict)
    out: Optional[str] = None
    fmt: str = "csv"

    def require(self, *keys: str) -> list[float]:
        missing = [k for k in keys if self.params.get(k) is None]
        if missing:
            raise UsageError(
                f"mode '{self.mode}' requires --{' --'.join(missing)}"
            )
        return [self.params[k] for k in keys]

    def get(self, key: str, default=None):
        value = self.params.get(key)
        return default if value is None else value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="prelotto", description=__doc__)
    sub = parser.add_subparsers(dest="mode")
    for mode in MODES:
        p = sub.add_parser(mode)
        if mode == "verify":
            p.add_argument("target", choices=("theorem1", "theorem2", "oracle"))
        for key in _FLOAT_KEYS:
            p.add_argument(f"--{key}", type=float, default=None)
        for key in _INT_KEYS:
            p.add_argument(f"--{key}", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "svg"), default=None)
        p.add_argument("--config", default=None)
    return parser


def load_config_file(path: str) -> dict:
    """Flat key-value config: one ``key = value`` pair per line, # comments."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"malformed config line: {raw.strip()!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key in _FLOAT_KEYS:
                values[key] = float(val)
            elif key in _INT_KEYS:
                values[key] = int(val)
            elif key in ("out", "format"):
                values[key] = val
            else:
                raise UsageError(f"unknown config key: {key!r}")
    return values


def parse_config(argv: list[str]) -> SweepConfig:
    """Merge CLI flags over config-file values over built-in defaults."""
    args = _build_parser().parse_args(argv)
    if args.mode is None:
        raise UsageError(f"a mode is required: one of {', '.join(MODES)}")
    path = args.config or os.environ.get(CONFIG_ENV)
    file_values = load_config_file(path) if path else {}
    params = {}
    for key in _FLOAT_KEYS + _INT_KEYS:
        cli_val = getattr(args, key)
        params[key] = cli_val if cli_val is not None else file_values.get(key)
    out = args.out if args.out is not None else file_values.get("out")
    fmt = args.fmt if args.fmt is not None else file_values.get("format", "csv")
    return SweepConfig(
        mode=args.mode,
        target=getattr(args, "target", None),
        params=params,
        out=out,
        fmt=fmt,
    )


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(config: SweepConfig, text: str) -> None:
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_grid(config: SweepConfig, grid: RegionGrid, flag_field: str, flag_value, title: str) -> None:
    if config.fmt == "svg":
        _emit(config, render_region_svg(grid, flag_field, flag_value, title=title))
    elif config.fmt == "json":
        payload = {
            "x_name": grid.x_name,
            "y_name": grid.y_name,
            "fields": list(grid.fields),
            "rows": [
                [grid.cells[f][i] for f in grid.fields] for i in range(grid.n_rows)
            ],
        }
        _emit(config, _json_text(payload))
    else:
        _emit(config, grid.to_csv())


def _run_payoff(config: SweepConfig) -> int:
    xa, xb = config.require("xa", "xb")
    phi = config.get("phi", 1.0)
    payoff_a = lotto_payoff(xa, xb, phi)
    _emit(
        config,
        _json_text(
            {
                "mode": "payoff",
                "x_a": xa,
                "x_b": xb,
                "phi": phi,
                "payoff_a": payoff_a,
                "payoff_b": -payoff_a,
            }
        ),
    )
    return EXIT_OK


def _run_commit2p(config: SweepConfig) -> int:
    xa, xb, vb, t = config.require("xa", "xb", "vb", "t")
    phi = config.get("phi", 1.0)
    game = DuelGame(xa, xb, BattlefieldFront((vb, phi - vb)))
    commit = Commitment(v_b=vb, t=t)
    outcome = adversary_response(game, commit)
    gain = delta_payoff(game, commit)
    _emit(
        config,
        _json_text(
            {
                "mode": "commit2p",
                "x_a": xa,
                "x_b": xb,
                "phi": phi,
                "v_b": vb,
                "t": t,
                "decision": outcome.decision.value,
                "payoff_a": outcome.payoffs.payoff_a,
                "payoff_b": outcome.payoffs.payoff_b,
                "commit_gain_b": gain,
            }
        ),
    )
    return EXIT_OK


def _run_split(config: SweepConfig) -> int:
    x1, x2 = config.require("x1", "x2")
    phi1 = config.get("phi1", 1.0)
    phi2 = config.get("phi2", 1.0)
    split = coalition.classify_case(x1, x2, phi1, phi2)
    _emit(
        config,
        _json_text(
            {
                "mode": "split",
                "x1": x1,
                "x2": x2,
                "phi1": phi1,
                "phi2": phi2,
                "case": split.token,
                "x_a1": split.x_a1,
                "x_a2": split.x_a2,
            }
        ),
    )
    return EXIT_OK


def _run_commit3p(config: SweepConfig) -> int:
    x1, x2, vb = config.require("x1", "x2", "vb")
    phi1 = config.get("phi1", 1.0)
    phi2 = config.get("phi2", 1.0)
    game = make_game(x1, x2, phi1, phi2, vb)
    delta = config.get("delta", coalition.default_delta(x1))
    membership = coalition.precommit_membership(game, vb, delta)
    t = config.get("t")
    if t is None:
        t = max(membership.tstar - delta, 0.0)
    outcome = coalition.adversary_best_response_3p(game, vb, t)
    _emit(
        config,
        _json_text(
            {
                "mode": "commit3p",
                "x1": x1,
                "x2": x2,
                "phi1": phi1,
                "phi2": phi2,
                "v_b": vb,
                "t": t,
                "outcome": {
                    "decision": outcome.decision.value,
                    "split_front1": outcome.split_front1,
                    "split_front2": outcome.split_front2,
                    "payoff_player1": outcome.payoff_player1,
                    "payoff_player2": outcome.payoff_player2,
                    "payoff_adversary": outcome.payoff_adversary,
                    "oracle_derived": outcome.oracle_derived,
                },
                "membership": membership.as_dict(),
            }
        ),
    )
    return EXIT_OK


def _run_region2p(config: SweepConfig) -> int:
    resolution = int(config.get("resolution", 100))
    phi = config.get("phi", 1.0)
    grid = duel.region_map_duel((resolution, resolution), phi)
    _emit_grid(config, grid, "decision", "folds_on_interval", "adversary folds on an interval")
    return EXIT_OK


def _run_region3p(config: SweepConfig) -> int:
    (vb,) = config.require("vb")
    phi1 = config.get("phi1", 1.0)
    phi2 = config.get("phi2", 1.0)
    resolution = int(config.get("resolution", 100))
    delta = config.get("delta")
    grid = coalition.region_map_coalition(phi1, phi2, vb, (resolution, resolution), delta)
    _emit_grid(config, grid, "member", True, "profitable pre-commitment region")
    return EXIT_OK


def _run_verify(config: SweepConfig) -> int:
    target = config.target
    if target == "theorem1":
        resolution = int(config.get("resolution", 50))
        phi = config.get("phi", 1.0)
        report = duel.sweep_precommit_gain((resolution, resolution, resolution), phi)
    elif target == "theorem2":
        resolution = int(config.get("resolution", 50))
        phi1 = config.get("phi1", 1.0)
        phi2 = config.get("phi2", 1.0)
        report = coalition.sweep_discard_slope((resolution, resolution), 20, phi1, phi2)
    else:
        instances = int(config.get("resolution", 200))
        seed = int(config.get("seed", DEFAULT_SEED))
        report = oracle.verify_split_agreement(instances, seed)
    _emit(config, _json_text(report.as_dict()))
    return EXIT_OK if report.passed else EXIT_VERIFY


_RUNNERS = {
    "payoff": _run_payoff,
    "commit2p": _run_commit2p,
    "split": _run_split,
    "commit3p": _run_commit3p,
    "region2p": _run_region2p,
    "region3p": _run_region3p,
    "verify": _run_verify,
}


def run(config: SweepConfig) -> int:
    """Dispatch one resolved configuration; returns the exit code."""
    return _RUNNERS[config.mode](config)


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv)
        return run(config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ClassificationError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
