"""Game operators, initial states, final-state pipeline and payoffs.

The round is: players act on their own qutrits, the open-box operator marks
a box anti-correlated with both choices, then Bob's switch/stay mixture is
applied and the win probability is read off the components where Bob's
choice matches Alice's.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    BadCustomState,
    GammaOutOfRange,
    IncoherentBranchOnly,
    NonUnitaryStrategy,
)

UNENTANGLED = "unentangled"
ENTANGLED = "entangled"

HALF_PI = math.pi / 2.0


class PayoffMode(str, enum.Enum):
    """How the switch/stay mixture is evaluated.

    INCOHERENT mixes the two pure branches with probabilities cos^2(gamma)
    and sin^2(gamma); this is the mode every equilibrium result refers to.
    COHERENT_NORMALIZED applies cos(gamma)*S + sin(gamma)*N as one operator
    and renormalizes; it keeps the interference cross terms and is exposed
    as an exploratory mode only.
    """

    INCOHERENT = "incoherent"
    COHERENT_NORMALIZED = "coherent"


@dataclass(frozen=True)
class PayoffResult:
    bob: float
    alice: float
    final_norm2: float


def _third(x: int, y: int) -> int:
    # the index in {0,1,2} distinct from two distinct indices x, y
    return 3 - x - y


@functools.cache
def open_permutation() -> tuple[int, ...]:
    """perm[input index] = output index for the open-box operator."""
    perm = [0] * linalg.N_STATES
    for ell in range(3):
        for j in range(3):
            for k in range(3):
                if j != k:
                    n = (_third(j, k) + ell) % 3
                    out = (n, j, k)
                else:
                    m = (j + ell + 1) % 3
                    out = (m, j, j)
                perm[linalg.ket_index(ell, j, k)] = linalg.ket_index(*out)
    assert sorted(perm) == list(range(linalg.N_STATES))
    return tuple(perm)


@functools.cache
def switch_permutation() -> tuple[int, ...]:
    """perm[input index] = output index for Bob's switch operator."""
    perm = [0] * linalg.N_STATES
    for i in range(3):
        for j in range(3):
            for k in range(3):
                if j != i:
                    out = (i, _third(i, j), k)
                else:
                    out = (i, j, k)
                perm[linalg.ket_index(i, j, k)] = linalg.ket_index(*out)
    assert sorted(perm) == list(range(linalg.N_STATES))
    return tuple(perm)


def _perm_matrix(perm: tuple[int, ...]) -> np.ndarray:
    m = np.zeros((linalg.N_STATES, linalg.N_STATES), dtype=complex)
    for src, dst in enumerate(perm):
        m[dst, src] = 1.0
    return m


def build_open_operator() -> np.ndarray:
    return _perm_matrix(open_permutation())


def build_switch_operator() -> np.ndarray:
    return _perm_matrix(switch_permutation())


# out = in[_X_GATHER] applies the permutation without building a matrix
_OPEN_GATHER = np.argsort(np.array(open_permutation()))
_SWITCH_GATHER = np.argsort(np.array(switch_permutation()))
_WIN_MASK = np.array(
    [b == a for idx in range(27) for (_, b, a) in [linalg.index_to_ket(idx)]]
)


def initial_state(regime) -> np.ndarray:
    """Initial 27-amplitude state for a regime.

    `regime` is "unentangled", "entangled", or a raw 27-vector used as a
    custom initial state (must be normalized and supported on o = 0).
    """
    if isinstance(regime, str):
        if regime == UNENTANGLED:
            psi = np.zeros(27, dtype=complex)
            psi[:9] = 1.0 / 3.0
            return psi
        if regime == ENTANGLED:
            psi = np.zeros(27, dtype=complex)
            for j in range(3):
                psi[linalg.ket_index(0, j, j)] = 1.0 / math.sqrt(3.0)
            return psi
        raise BadCustomState(f"unknown regime {regime!r}")
    psi = np.asarray(regime, dtype=complex)
    if psi.shape != (27,) or not np.all(np.isfinite(psi)):
        raise BadCustomState("custom state must be 27 finite amplitudes")
    n2 = linalg.norm2(psi)
    if abs(n2 - 1.0) > 1e-9:
        raise BadCustomState(f"custom state norm^2 = {n2}, must be 1")
    if float(np.max(np.abs(psi[9:]))) > 1e-9:
        raise BadCustomState("custom state must have support only on o = 0")
    return psi / math.sqrt(n2)


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not (0.0 - 1e-12 <= gamma <= HALF_PI + 1e-12):
        raise GammaOutOfRange(f"gamma = {gamma} outside [0, pi/2]")
    return min(max(gamma, 0.0), HALF_PI)


def _check_strategy(op: np.ndarray, who: str) -> np.ndarray:
    op = np.asarray(op, dtype=complex)
    if not linalg.is_special_unitary(op, linalg.UNITARY_TOL):
        raise NonUnitaryStrategy(f"{who} strategy is not in SU(3) within 1e-9")
    return op


def branch_states(regime, alice: np.ndarray, bob: np.ndarray):
    """(switch branch, stay branch) final states for the two pure gammas."""
    psi = initial_state(regime).reshape(3, 3, 3)
    psi = np.einsum("bj,ak,ojk->oba", bob, alice, psi).reshape(27)
    stay = psi[_OPEN_GATHER]
    switch = stay[_SWITCH_GATHER]
    return switch, stay


def win_probability(state: np.ndarray) -> float:
    """Weight on the components where Bob's box equals Alice's (Bob wins)."""
    amps = np.asarray(state)[_WIN_MASK]
    return float(np.sum(np.abs(amps) ** 2))


def final_state(regime, alice, bob, gamma, mode=PayoffMode.INCOHERENT):
    """Final state and its pre-normalization norm^2.

    Incoherent mode is only defined on the pure branches gamma in {0, pi/2};
    coherent mode combines the branches and renormalizes.
    """
    gamma = _check_gamma(gamma)
    alice = _check_strategy(alice, "alice")
    bob = _check_strategy(bob, "bob")
    switch, stay = branch_states(regime, alice, bob)
    mode = PayoffMode(mode)
    if mode is PayoffMode.INCOHERENT:
        if gamma <= 1e-12:
            return switch, linalg.norm2(switch)
        if gamma >= HALF_PI - 1e-12:
            return stay, linalg.norm2(stay)
        raise IncoherentBranchOnly(
            "incoherent final state exists only at gamma = 0 or pi/2"
        )
    comb = math.cos(gamma) * switch + math.sin(gamma) * stay
    n2 = linalg.norm2(comb)
    if n2 <= 1e-15:
        raise NonUnitaryStrategy("combined branch state vanished")
    return comb / math.sqrt(n2), n2


def expected_payoff(regime, alice, bob, gamma, mode=PayoffMode.INCOHERENT):
    """Expected payoff for both players.

    Incoherent: cos^2(gamma) * P(switch branch) + sin^2(gamma) * P(stay).
    Coherent: win weight of the normalized combined state.
    """
    gamma = _check_gamma(gamma)
    alice = _check_strategy(alice, "alice")
    bob = _check_strategy(bob, "bob")
    switch, stay = branch_states(regime, alice, bob)
    mode = PayoffMode(mode)
    if mode is PayoffMode.INCOHERENT:
        c2 = math.cos(gamma) ** 2
        p = c2 * win_probability(switch) + (1.0 - c2) * win_probability(stay)
        n2 = 1.0
    else:
        comb = math.cos(gamma) * switch + math.sin(gamma) * stay
        n2 = linalg.norm2(comb)
        if n2 <= 1e-15:
            raise NonUnitaryStrategy("combined branch state vanished")
        p = win_probability(comb) / n2
    p = min(max(p, 0.0), 1.0)  # keep float round-off inside [0, 1]
    return PayoffResult(bob=p, alice=1.0 - p, final_norm2=n2)
