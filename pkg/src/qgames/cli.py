"""Command-line front end.

Subcommands:

* quantize   print the 3x3 classical-plus-quantum bimatrix and its pure Nash cells
* curve      CSV magnetization sweep over an entanglement grid (gamma-major)
* transition analytic vs bisection location of the magnetization sign change
* oracle     CSV cross-check of enumeration / transfer matrix / Metropolis /
             closed form at one (J, h, beta) point

Exit codes: 0 success, 2 validation error, 3 internal consistency failure.
All numeric CSV fields carry 17 significant digits so they re-parse to the
exact binary values that produced them.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import ising, oracle
from .catalog import (
    CHICKEN,
    PD,
    Block,
    ChickenPayoffs,
    PDPayoffs,
    extract_block,
    quantized_game,
)
from .equilibrium import pure_nash
from .errors import ConsistencyError, ValidationError

DEFAULT_BETAS = (0.5, 1.0, 2.0, 5.0)
DEFAULT_GAMMA_STEPS = 200

# disagreement gates for the oracle subcommand (exit code 3 when exceeded)
ENUM_VS_TRANSFER_TOL = 1e-10
METROPOLIS_SIGMAS = 5.0


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_betas(text: str):
    try:
        betas = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ValidationError(f"bad beta list {text!r}: {exc}") from None
    if not betas:
        raise ValidationError("beta list is empty")
    return betas


def _payoffs_from(args):
    if args.game == PD:
        missing = [k for k in ("r", "t", "s", "p") if getattr(args, k) is None]
        if missing:
            raise ValidationError(f"game {PD} needs --r --t --s --p (missing: {missing})")
        return PDPayoffs(r=args.r, t=args.t, s=args.s, p=args.p)
    missing = [k for k in ("r", "s") if getattr(args, k) is None]
    if missing:
        raise ValidationError(f"game {CHICKEN} needs --r --s (missing: {missing})")
    for k in ("t", "p"):
        if getattr(args, k, None) is not None:
            raise ValidationError(f"game {CHICKEN} takes --r and --s only (got --{k})")
    return ChickenPayoffs(r=args.r, s=args.s)


def _gamma_from(args) -> float:
    if args.gamma is not None and args.gamma_degrees is not None:
        raise ValidationError("give either --gamma or --gamma-degrees, not both")
    if args.gamma is not None:
        return args.gamma
    if args.gamma_degrees is not None:
        return math.radians(args.gamma_degrees)
    raise ValidationError("a gamma value is required (--gamma or --gamma-degrees)")


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _emit(path, lines):
    out, close = _open_out(path)
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if close:
            out.close()


def _add_game_flags(p, payoffs=True):
    p.add_argument("--game", required=True, choices=(PD, CHICKEN))
    if payoffs:
        p.add_argument("--r", type=float, help="reward (pd) / reputation (chicken)")
        p.add_argument("--t", type=float, help="temptation (pd only)")
        p.add_argument("--s", type=float, help="sucker payoff (pd) / injury cost (chicken)")
        p.add_argument("--p", type=float, help="punishment (pd only)")


def cmd_quantize(args) -> int:
    payoffs = _payoffs_from(args)
    gamma = _gamma_from(args)
    game = quantized_game(args.game, payoffs, gamma)
    equilibria = pure_nash(game)

    lines = [f"quantized payoff matrix  game={args.game}  gamma={_fmt(gamma)} rad"]
    width = 22
    header = " " * 10 + "".join(lab.ljust(width) for lab in game.labels)
    lines.append(header)
    for i, lab in enumerate(game.labels):
        cells = "".join(
            f"({game.row[i, j]:.10g}, {game.col[i, j]:.10g})".ljust(width)
            for j in range(game.n)
        )
        lines.append(lab.ljust(10) + cells)
    if equilibria:
        named = ", ".join("(%s, %s)" % game.label_cell(c) for c in equilibria)
    else:
        named = "none"
    lines.append(f"pure Nash equilibria: {named}")
    _emit(args.output, lines)
    return 0


def cmd_curve(args) -> int:
    payoffs = _payoffs_from(args)
    block_id = Block(args.block)
    betas = _parse_betas(args.beta)
    if args.gamma_steps < 1:
        raise ValidationError("--gamma-steps must be >= 1")
    grid = np.linspace(args.gamma_start, args.gamma_stop, args.gamma_steps)
    if grid[0] < 0.0 or grid[-1] > ising.GAMMA_MAX or (grid.size > 1 and grid[0] >= grid[-1]):
        raise ValidationError(
            f"gamma grid [{args.gamma_start}, {args.gamma_stop}] must be increasing within "
            f"[0, {ising.GAMMA_MAX!r}]"
        )
    for b in betas:
        if b < 0:
            raise ValidationError(f"beta must be >= 0, got {b}")

    lines = ["gamma,beta,J,h,m"]
    for g in grid:  # gamma-major ordering; the block is beta-independent
        block = extract_block(args.game, payoffs, block_id, float(g))
        for b in betas:
            ip = ising.to_ising(block, b)
            m = ising.magnetization(ip)
            lines.append(",".join(_fmt(v) for v in (g, b, ip.J, ip.h, m)))
    _emit(args.output, lines)
    return 0


def cmd_transition(args) -> int:
    payoffs = _payoffs_from(args)
    block_id = Block(args.block) if args.block else (
        Block.QVD if args.game == PD else Block.QVSTRAIGHT
    )
    analytic = ising.phase_transition_gamma(args.game, payoffs, block_id)
    numeric = ising.phase_transition_bisect(args.game, payoffs, block_id)

    lines = [f"game={args.game}  block={block_id.value}"]
    if analytic is None:
        lines.append("transition: none")
    else:
        lines.append(f"analytic gamma*:  {_fmt(analytic)}")
        lines.append(f"bisection gamma*: {_fmt(numeric)}")
        lines.append(f"difference:       {_fmt(abs(analytic - numeric))}")
    _emit(args.output, lines)
    return 0


def cmd_oracle(args) -> int:
    ip = ising.IsingParams(J=args.J, h=args.h, beta=args.beta)
    spec = oracle.ChainSpec(N=args.N, params=ip)

    rows = []
    enum_m = transfer_m = None
    if not args.no_enumeration:
        enum_m = oracle.enumerate_magnetization(spec)
        rows.append((str(spec.N), "enumeration", _fmt(enum_m), ""))
    transfer_m = oracle.transfer_matrix_finite(spec)
    rows.append((str(spec.N), "transfer_matrix", _fmt(transfer_m), ""))
    sampled = None
    if not args.no_metropolis:
        sampled = oracle.metropolis_magnetization(
            spec, sweeps=args.sweeps, burn_in=args.burn_in, seed=args.seed
        )
        rows.append((str(spec.N), "metropolis", _fmt(sampled.mean), _fmt(sampled.std_error)))
    rows.append(("inf", "closed_form", _fmt(ising.magnetization(ip)), ""))

    _emit(args.output, ["N,method,m,std_error"] + [",".join(r) for r in rows])

    if enum_m is not None and abs(enum_m - transfer_m) > ENUM_VS_TRANSFER_TOL:
        raise ConsistencyError(
            f"enumeration {enum_m!r} vs transfer matrix {transfer_m!r} differ beyond "
            f"{ENUM_VS_TRANSFER_TOL}"
        )
    if sampled is not None and sampled.std_error > 0:
        if abs(sampled.mean - transfer_m) > METROPOLIS_SIGMAS * sampled.std_error:
            raise ConsistencyError(
                f"metropolis {sampled.mean!r} is more than {METROPOLIS_SIGMAS} standard "
                f"errors from the transfer matrix {transfer_m!r}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgames",
        description="Quantized 2x2 games mapped onto the 1-D Ising chain.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("quantize", help="3x3 bimatrix with the quantum strategy, plus Nash cells")
    _add_game_flags(p)
    p.add_argument("--gamma", type=float, help="entanglement angle in radians")
    p.add_argument("--gamma-degrees", type=float, help="entanglement angle in degrees")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("curve", help="CSV magnetization sweep over gamma")
    _add_game_flags(p)
    p.add_argument("--block", required=True, choices=[b.value for b in Block])
    p.add_argument("--beta", default=",".join(str(b) for b in DEFAULT_BETAS),
                   help="comma-separated inverse temperatures")
    p.add_argument("--gamma-start", type=float, default=0.0)
    p.add_argument("--gamma-stop", type=float, default=ising.GAMMA_MAX)
    p.add_argument("--gamma-steps", type=int, default=DEFAULT_GAMMA_STEPS)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("transition", help="locate the magnetization sign change")
    _add_game_flags(p)
    p.add_argument("--block", choices=[b.value for b in Block],
                   help="defaults to QvD for pd, QvStraight for chicken")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("oracle", help="cross-check the chain oracles at one point")
    p.add_argument("--J", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--sweeps", type=int, default=100_000)
    p.add_argument("--burn-in", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-enumeration", action="store_true")
    p.add_argument("--no-metropolis", action="store_true")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_oracle)

    return parser


def _merge_config(argv):
    """Expand --config FILE into key=value flags placed before the explicit
    ones, so explicit command-line flags win on conflict."""
    argv = list(argv)
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        raise ValidationError("--config needs a file path")
    if at == 0:
        raise ValidationError("--config must follow the subcommand")
    path = argv[at + 1]
    rest = argv[:at] + argv[at + 2 :]
    tokens = []
    try:
        with open(path) as fh:
            for ln, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValidationError(f"{path}:{ln}: expected key=value, got {line!r}")
                key, value = line.split("=", 1)
                tokens += ["--" + key.strip().replace("_", "-"), value.strip()]
    except OSError as exc:
        raise ValidationError(f"cannot read config {path!r}: {exc}") from None
    return rest[:1] + tokens + rest[1:]


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = build_parser().parse_args(_merge_config(argv))
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3


def entry():  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
