"""Shared test oracles: closed-form block matrices and payoff generators.

The closed forms live here, outside the library, so the circuit-derived
blocks are always checked against an independent route.
"""

import math

import numpy as np

from qgames import ChickenPayoffs, PDPayoffs


def qvc_closed_form(p: PDPayoffs, gamma: float) -> np.ndarray:
    """Cooperate-vs-quantum block, rows/cols ordered (C, Q)."""
    a1 = p.r * math.cos(gamma) ** 2 + p.p * math.sin(gamma) ** 2
    return np.array([[p.r, a1], [a1, p.r]])


def qvd_closed_form(p: PDPayoffs, gamma: float) -> np.ndarray:
    """Quantum-vs-defect block, rows/cols ordered (Q, D)."""
    cg2 = math.cos(gamma) ** 2
    sg2 = math.sin(gamma) ** 2
    return np.array(
        [[p.r, p.t * sg2 + p.s * cg2], [p.t * cg2 + p.s * sg2, p.p]]
    )


def qvswerve_closed_form(c: ChickenPayoffs, gamma: float) -> np.ndarray:
    """Swerve-vs-quantum block, rows/cols ordered (swerve, Q)."""
    a1 = -c.s * math.sin(gamma) ** 2
    return np.array([[0.0, a1], [a1, 0.0]])


def qvstraight_closed_form(c: ChickenPayoffs, gamma: float) -> np.ndarray:
    """Quantum-vs-straight block, rows/cols ordered (Q, straight)."""
    rc = c.r * math.cos(2 * gamma)
    return np.array([[0.0, -rc], [rc, -c.s]])


def classical_pd_matrix(p: PDPayoffs) -> np.ndarray:
    return np.array([[p.r, p.s], [p.t, p.p]])


def classical_chicken_matrix(c: ChickenPayoffs) -> np.ndarray:
    return np.array([[-c.s, c.r], [-c.r, 0.0]])


def classical_magnetization(beta: float, J: float, h: float) -> float:
    """Direct evaluation of the infinite-chain formula; no overflow guard on
    purpose, so it stays an independent reference in moderate ranges."""
    x = beta * h
    return math.sinh(x) / math.sqrt(math.sinh(x) ** 2 + math.exp(-4.0 * beta * J))


def random_pd(rng) -> PDPayoffs:
    """Random payoffs with strict ordering t > r > p > s and O(1) gaps."""
    s = rng.uniform(-1.0, 1.0)
    p = s + rng.uniform(0.1, 2.0)
    r = p + rng.uniform(0.1, 2.0)
    t = r + rng.uniform(0.1, 2.0)
    return PDPayoffs(r=r, t=t, s=s, p=p)


def random_chicken(rng, allow_equal=False) -> ChickenPayoffs:
    r = rng.uniform(0.1, 3.0)
    lo = 0.0 if allow_equal else 0.05
    s = r + rng.uniform(lo, 3.0)
    return ChickenPayoffs(r=r, s=s)
