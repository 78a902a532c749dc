"""Mapping a 2x2 strategy block onto a 1-D spin chain.

The block's row payoffs determine a coupling J and a field h; the closed-form
infinite-chain magnetization

    m = sinh(beta*h) / sqrt(sinh(beta*h)**2 + exp(-4*beta*J))

then reads off the population split between the two strategies.  A sign
change of m along the entanglement axis is the phase transition where the
majority strategy flips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import Block, extract_block
from .errors import ConsistencyError, ValidationError

GAMMA_MAX = math.pi / 2

#: Blocks whose field term vanishes identically (symmetric coordination
#: blocks): the magnetization is zero for every gamma and beta.
ZERO_FIELD_BLOCKS = frozenset({Block.QVC, Block.QVSWERVE})

_BISECT_TOL = 1e-10
_CROSSCHECK_TOL = 1e-9


@dataclass(frozen=True)
class IsingParams:
    """Chain coupling J, external field h, inverse temperature beta
    (Boltzmann constant absorbed into beta)."""

    J: float
    h: float
    beta: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.J, self.h, self.beta)):
            raise ValidationError("J, h, beta must be finite")
        if self.beta < 0:
            raise ValidationError(f"beta must be >= 0, got {self.beta}")


@dataclass(frozen=True)
class TransformedBlock:
    """Block after adding per-column constants; both columns antisymmetric."""

    entries: np.ndarray
    lam: float
    mu: float


@dataclass(frozen=True)
class MagnetizationCurve:
    """Ordered (gamma, m) samples with the J/h values behind them."""

    gammas: np.ndarray
    m: np.ndarray
    J: np.ndarray
    h: np.ndarray
    block_id: Block
    beta: float
    payoffs: object


def transform(block) -> TransformedBlock:
    """Shift each column by a constant so the columns become antisymmetric.

    Best responses, hence Nash equilibria, are unchanged by per-column
    shifts of the row player's payoffs.
    """
    (a, b), (c, d) = np.asarray(block.row_payoffs, dtype=float)
    lam = -(a + c) / 2.0
    mu = -(b + d) / 2.0
    entries = np.array([[a + lam, b + mu], [c + lam, d + mu]])
    return TransformedBlock(entries=entries, lam=lam, mu=mu)


def to_ising(block, beta: float) -> IsingParams:
    """Coupling and field that reproduce the block as a two-site spin table
    [[J+h, -J+h], [-J-h, J-h]].

    The (a-c) +/- (b-d) grouping keeps h exactly zero when the block's
    diagonal entries match and its off-diagonal entries match.
    """
    (a, b), (c, d) = np.asarray(block.row_payoffs, dtype=float)
    J = ((a - c) + (d - b)) / 4.0
    h = ((a - c) + (b - d)) / 4.0
    return IsingParams(J=J, h=h, beta=float(beta))


def _log_sinh(t: float) -> float:
    # t > 0; switch before sinh loses to overflow
    if t < 20.0:
        return math.log(math.sinh(t))
    return t - math.log(2.0) + math.log1p(-math.exp(-2.0 * t))


def magnetization(ip: IsingParams) -> float:
    """Infinite-chain magnetization, in [-1, 1].

    Evaluated in log space so that large beta*|h| or beta*|J| cannot
    overflow: m = sign(h) * exp(log sinh|beta h| - 1/2 log(sinh^2 + e^{-4 beta J})).
    """
    x = ip.beta * ip.h
    if x == 0.0:
        # signed zero keeps sign(m) == sign(h) even when beta*h underflows
        return math.copysign(0.0, x)
    log_s = _log_sinh(abs(x))
    log_den = 0.5 * float(np.logaddexp(2.0 * log_s, -4.0 * ip.beta * ip.J))
    return math.copysign(math.exp(min(log_s - log_den, 0.0)), x)


def curve(game_kind, payoffs, block_id, beta: float, gamma_grid) -> MagnetizationCurve:
    """Magnetization samples along an increasing entanglement grid."""
    block_id = Block(block_id)
    grid = np.asarray(gamma_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("gamma grid must be a non-empty 1-D sequence")
    if grid[0] < 0.0 or grid[-1] > GAMMA_MAX:
        raise ValidationError(f"gamma grid must lie within [0, {GAMMA_MAX!r}]")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValidationError("gamma grid must be strictly increasing")

    ms = np.empty(grid.size)
    Js = np.empty(grid.size)
    hs = np.empty(grid.size)
    for k, g in enumerate(grid):
        ip = to_ising(extract_block(game_kind, payoffs, block_id, g), beta)
        Js[k] = ip.J
        hs[k] = ip.h
        ms[k] = magnetization(ip)
    return MagnetizationCurve(
        gammas=grid, m=ms, J=Js, h=hs, block_id=block_id, beta=float(beta), payoffs=payoffs
    )


def _field_at(game_kind, payoffs, block_id, gamma: float) -> float:
    return to_ising(extract_block(game_kind, payoffs, block_id, gamma), 1.0).h


def phase_transition_bisect(game_kind, payoffs, block_id, tol: float = _BISECT_TOL):
    """Zero of the field h(gamma) on [0, pi/2] by bisection, or None.

    h is affine in cos(2*gamma), hence monotone on the interval, so a sign
    change brackets exactly one root.  Blocks with h identically zero have
    no sign change and return None.
    """
    block_id = Block(block_id)
    a, b = 0.0, GAMMA_MAX
    fa = _field_at(game_kind, payoffs, block_id, a)
    fb = _field_at(game_kind, payoffs, block_id, b)
    if fa == 0.0 and fb == 0.0:
        return None
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        return None
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = _field_at(game_kind, payoffs, block_id, mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def _analytic_transition(payoffs, block_id):
    if block_id in ZERO_FIELD_BLOCKS or block_id in (Block.CLASSICAL_PD, Block.CLASSICAL_CHICKEN):
        return None
    if block_id is Block.QVD:
        arg = (payoffs.r - payoffs.p) / (payoffs.t - payoffs.s)
    elif block_id is Block.QVSTRAIGHT:
        arg = payoffs.s / (2.0 * payoffs.r)
    else:  # pragma: no cover - Block enum is exhaustive above
        raise ValidationError(f"unknown block {block_id!r}")
    if arg > 1.0:
        return None
    return 0.5 * math.acos(arg)


def phase_transition_gamma(game_kind, payoffs, block_id):
    """Entanglement value where the field (hence the magnetization) changes
    sign, or None when there is no crossing.

    The closed-form arccos value is cross-checked against bisection on the
    circuit-derived field; disagreement raises ConsistencyError.
    """
    block_id = Block(block_id)
    analytic = _analytic_transition(payoffs, block_id)
    numeric = phase_transition_bisect(game_kind, payoffs, block_id)
    if (analytic is None) != (numeric is None):
        raise ConsistencyError(
            f"transition mismatch for {block_id.value}: analytic={analytic!r}, bisect={numeric!r}"
        )
    if analytic is not None and abs(analytic - numeric) > _CROSSCHECK_TOL:
        raise ConsistencyError(
            f"transition mismatch for {block_id.value}: analytic={analytic!r}, bisect={numeric!r}"
        )
    return analytic
