"""Two-qubit game quantization.

The protocol: entangle |00> with a gate L(gamma), let each player act with a
local unitary O(theta, phi), disentangle with L^dag, and measure.  Payoffs
are the measurement probabilities weighted by a per-player payoff template.
gamma=0 reproduces the classical game, gamma=pi/2 is maximal entanglement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tensor
from .equilibrium import BimatrixGame
from .errors import ConsistencyError, ValidationError

#: Allowed parameter ranges of the two-parameter strategy family.
THETA_RANGE = (0.0, math.pi)
PHI_RANGE = (0.0, math.pi / 2)
GAMMA_RANGE = (0.0, math.pi / 2)

_KET00 = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)


@dataclass(frozen=True)
class Strategy:
    """A named point of the strategy family O(theta, phi)."""

    label: str
    theta: float
    phi: float


# The five named strategies the games use.  "Defect"/"straight" is O(pi, 0),
# i.e. [[0, 1], [-1, 0]]: the column-sign convention matters, a literal
# Pauli X would give gamma-independent defect-vs-quantum payoffs.
C = Strategy("C", 0.0, 0.0)
D = Strategy("D", math.pi, 0.0)
Q = Strategy("Q", 0.0, math.pi / 2)
SWERVE = Strategy("swerve", 0.0, 0.0)
STRAIGHT = Strategy("straight", math.pi, 0.0)


@dataclass(frozen=True)
class PayoffTemplate:
    """One player's payoff for each measured two-qubit outcome."""

    v00: float
    v10: float
    v01: float
    v11: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.v00, self.v10, self.v01, self.v11)):
            raise ValidationError("payoff template entries must be finite")


def _check_range(name, value, lo, hi):
    if not (math.isfinite(value) and lo <= value <= hi):
        raise ValidationError(f"{name}={value!r} outside [{lo:.6g}, {hi:.6g}]")


def strategy_operator(theta: float, phi: float) -> np.ndarray:
    """Local strategy unitary
    [[e^{i phi} cos(theta/2), sin(theta/2)],
     [-sin(theta/2),          e^{-i phi} cos(theta/2)]].
    """
    _check_range("theta", theta, *THETA_RANGE)
    _check_range("phi", phi, *PHI_RANGE)
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    ph = complex(math.cos(phi), math.sin(phi))
    return np.array([[ph * c, s], [-s, ph.conjugate() * c]], dtype=complex)


def entangler(gamma: float) -> np.ndarray:
    """The 4x4 entangling gate: cos(gamma/2) on the diagonal, +i sin(gamma/2)
    linking |00> and |11>, -i sin(gamma/2) linking |01> and |10>."""
    _check_range("gamma", gamma, *GAMMA_RANGE)
    c = math.cos(gamma / 2)
    s = math.sin(gamma / 2)
    return np.array(
        [
            [c, 0.0, 0.0, 1j * s],
            [0.0, c, -1j * s, 0.0],
            [0.0, -1j * s, c, 0.0],
            [1j * s, 0.0, 0.0, c],
        ],
        dtype=complex,
    )


def _params(s):
    if isinstance(s, Strategy):
        return s.theta, s.phi
    theta, phi = s
    return theta, phi


def final_state(s1, s2, gamma: float) -> np.ndarray:
    """State produced by entangle / act locally / disentangle from |00>.

    Accepts Strategy instances or (theta, phi) pairs.  The global phase is
    whatever the operator product yields; only squared amplitudes are
    physically meaningful downstream.
    """
    o1 = strategy_operator(*_params(s1))
    o2 = strategy_operator(*_params(s2))
    lhat = entangler(gamma)
    psi = tensor.apply(lhat, _KET00)
    psi = tensor.apply(tensor.kron(o1, o2), psi)
    return tensor.apply(tensor.adjoint(lhat), psi)


def payoff(chi, template: PayoffTemplate) -> float:
    """Expected payoff of one player: squared amplitudes of chi weighted by
    the player's outcome template."""
    v = tensor.as_state(chi)
    w = (v.conj() * v).real
    return float(
        template.v00 * w[0] + template.v01 * w[1] + template.v10 * w[2] + template.v11 * w[3]
    )


def extended_matrix(
    row_template: PayoffTemplate,
    col_template: PayoffTemplate,
    strategies,
    gamma: float,
) -> BimatrixGame:
    """Bimatrix of expected payoffs over every ordered strategy pair."""
    strategies = tuple(strategies)
    if not strategies:
        raise ValidationError("need at least one strategy")
    labels = tuple(s.label for s in strategies)
    if len(set(labels)) != len(labels):
        raise ValidationError(f"strategy labels must be distinct, got {labels}")

    lhat = entangler(gamma)
    ldag = tensor.adjoint(lhat)
    psi0 = tensor.apply(lhat, _KET00)
    ops = [strategy_operator(s.theta, s.phi) for s in strategies]
    row_w = np.array([row_template.v00, row_template.v01, row_template.v10, row_template.v11])
    col_w = np.array([col_template.v00, col_template.v01, col_template.v10, col_template.v11])

    n = len(strategies)
    row = np.empty((n, n))
    col = np.empty((n, n))
    for i, oi in enumerate(ops):
        for j, oj in enumerate(ops):
            # one end-to-end norm check per cell instead of one per operator
            chi = ldag @ (np.kron(oi, oj) @ psi0)
            w = (chi.conj() * chi).real
            if abs(w.sum() - 1.0) > tensor.NORM_DRIFT_TOL:
                raise ConsistencyError(f"cell ({i},{j}): state norm drifted to {w.sum()!r}")
            row[i, j] = float(row_w @ w)
            col[i, j] = float(col_w @ w)
    return BimatrixGame(row=row, col=col, labels=labels)
