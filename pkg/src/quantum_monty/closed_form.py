"""Closed-form payoff formulas, used as independent oracles for the engine.

These are written straight from the matrix entries of the two strategies
and deliberately share no operator code with `game`, so agreement between
the two paths is a genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import game

ORACLE_TOL = 1e-9


def payoff_unentangled_closed(alice: np.ndarray, bob: np.ndarray, gamma: float) -> float:
    """Bob's expected payoff for the uniform product initial state.

    Depends on the strategies only through their column sums: the switch
    term pairs distinct columns, the stay term pairs matching ones.
    """
    a = np.asarray(alice, dtype=complex)
    b = np.asarray(bob, dtype=complex)
    # Each player's qutrit starts in the uniform superposition, so only the
    # total amplitude reaching each output box matters: sum over inputs,
    # i.e. the row sums under this repo's column-as-input convention.
    brow = np.abs(np.sum(b, axis=1)) ** 2
    arow = np.abs(np.sum(a, axis=1)) ** 2
    switch = sum(brow[j] * arow[k] for j in range(3) for k in range(3) if j != k)
    stay = sum(brow[j] * arow[j] for j in range(3))
    c2 = math.cos(gamma) ** 2
    return (c2 * switch + (1.0 - c2) * stay) / 9.0


def payoff_entangled_closed(alice: np.ndarray, bob: np.ndarray, gamma: float) -> float:
    """Bob's expected payoff for the maximally entangled initial state.

    The stay term correlates matching columns of the two strategies, the
    switch term distinct ones.
    """
    a = np.asarray(alice, dtype=complex)
    b = np.asarray(bob, dtype=complex)
    # corr[j, k] = amplitude left on Bob box j, Alice box k after acting on
    # the maximally correlated pair: sum_l b_jl * a_kl  (= B A^T)
    corr = np.einsum("jl,kl->jk", b, a)
    mag = np.abs(corr) ** 2
    stay = float(np.trace(mag))
    switch = float(np.sum(mag)) - stay
    c2 = math.cos(gamma) ** 2
    return (c2 * switch + (1.0 - c2) * stay) / 3.0


def closed_form_payoff(regime: str, alice, bob, gamma: float) -> float:
    if regime == game.UNENTANGLED:
        return payoff_unentangled_closed(alice, bob, gamma)
    if regime == game.ENTANGLED:
        return payoff_entangled_closed(alice, bob, gamma)
    raise ValueError(f"no closed form for regime {regime!r}")


@dataclass(frozen=True)
class OracleReport:
    regime: str
    gamma: float
    closed: float
    engine: float
    diff: float
    passed: bool


def oracle_match(regime, alice, bob, gamma,
                 mode=game.PayoffMode.INCOHERENT) -> OracleReport:
    """Compare the closed form against the engine payoff for one profile."""
    closed = closed_form_payoff(regime, alice, bob, gamma)
    engine = game.expected_payoff(regime, alice, bob, gamma, mode).bob
    diff = abs(closed - engine)
    return OracleReport(
        regime=regime,
        gamma=float(gamma),
        closed=closed,
        engine=engine,
        diff=diff,
        passed=diff <= ORACLE_TOL,
    )
