"""Best-response search over SU(3), epsilon-Nash checks and the
constructive no-pure-Nash certificate for the entangled game."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from . import game, linalg, strategies
from .game import PayoffMode
from .strategies import MixedStrategy

DEFAULT_STARTS = 32
DEFAULT_MAXFEV = 2000
DEFAULT_EPSILON = 5e-3

_BRANCHES = (0.0, math.pi / 2.0)


@dataclass(frozen=True)
class BestResponseResult:
    theta: tuple
    gamma_branch: Optional[float]  # None when responding as Alice
    value: float  # responder's payoff at the optimum
    starts: int
    evaluations: int

    @property
    def strategy(self) -> np.ndarray:
        return linalg.su3_from_params(np.asarray(self.theta))


@dataclass(frozen=True)
class NashReport:
    regime: str
    gamma: float
    epsilon: float
    current_bob: float
    current_alice: float
    bob_gain: float
    alice_gain: float
    verdict: str  # "epsilon-nash" | "refuted"
    witness: Optional[dict] = None


@dataclass
class CertificateReport:
    samples: int
    failures: int = 0
    failed_profiles: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _multistart(objective, starts: int, seed, maxfev: int):
    """Nelder-Mead from `starts` uniform random points in [-pi, pi]^8;
    returns (best point, best value, total evaluations)."""
    rng = np.random.default_rng(seed)
    best_x, best_val, evals = None, math.inf, 0
    options = {"xatol": 1e-10, "fatol": 1e-10, "maxfev": maxfev}
    for _ in range(starts):
        x0 = rng.uniform(-math.pi, math.pi, 8)
        res = minimize(objective, x0, method="Nelder-Mead", options=options)
        evals += res.nfev
        if res.fun < best_val:
            best_val, best_x = res.fun, res.x
    return best_x, best_val, evals


def _branch_payoffs(regime, a_ops, b_op):
    """(switch, stay) win probabilities for Bob, averaged over Alice's
    mixture components."""
    p_switch = p_stay = 0.0
    for a_op, w in a_ops:
        sw, st = game.branch_states(regime, a_op, b_op)
        p_switch += w * game.win_probability(sw)
        p_stay += w * game.win_probability(st)
    return p_switch, p_stay


def best_response_bob(regime, alice: MixedStrategy,
                      mode=PayoffMode.INCOHERENT,
                      starts: int = DEFAULT_STARTS, seed=0,
                      maxfev: int = DEFAULT_MAXFEV) -> BestResponseResult:
    """Maximize Bob's payoff over SU(3) and the two pure gamma branches.

    The incoherent payoff is affine in cos^2(gamma), so optimizing gamma
    over the endpoints {0, pi/2} is exact, not a restriction.
    """
    mode = PayoffMode(mode)
    if mode is not PayoffMode.INCOHERENT:
        raise ValueError("best-response search is defined for incoherent mode")
    a_ops = alice.resolved()
    best = None
    total_evals = 0
    for branch_idx, gamma in enumerate(_BRANCHES):
        def objective(theta, _idx=branch_idx):
            b_op = linalg.su3_from_params(theta)
            pair = _branch_payoffs(regime, a_ops, b_op)
            return -pair[0] if _idx == 0 else -pair[1]

        x, val, evals = _multistart(objective, starts, (seed, branch_idx), maxfev)
        total_evals += evals
        if best is None or -val > best[2]:
            best = (x, gamma, -val)
    theta, gamma, _ = best
    # report the value through the public payoff path so it is reproducible
    value = strategies.mixed_payoff(
        regime, alice, MixedStrategy.singleton(strategies.Params(tuple(theta))),
        gamma, mode).bob
    return BestResponseResult(
        theta=tuple(float(t) for t in theta),
        gamma_branch=gamma,
        value=value,
        starts=starts,
        evaluations=total_evals,
    )


def best_response_alice(regime, bob: MixedStrategy, gamma,
                        mode=PayoffMode.INCOHERENT,
                        starts: int = DEFAULT_STARTS, seed=0,
                        maxfev: int = DEFAULT_MAXFEV) -> BestResponseResult:
    """Minimize Bob's payoff over Alice's SU(3) strategy at fixed gamma."""
    mode = PayoffMode(mode)
    if mode is not PayoffMode.INCOHERENT:
        raise ValueError("best-response search is defined for incoherent mode")
    b_ops = bob.resolved()
    c2 = math.cos(gamma) ** 2

    def objective(theta):
        a_op = linalg.su3_from_params(theta)
        bob_payoff = 0.0
        for b_op, w in b_ops:
            sw, st = game.branch_states(regime, a_op, b_op)
            bob_payoff += w * (
                c2 * game.win_probability(sw)
                + (1.0 - c2) * game.win_probability(st)
            )
        return bob_payoff

    x, val, evals = _multistart(objective, starts, (seed, 2), maxfev)
    value = strategies.mixed_payoff(
        regime, MixedStrategy.singleton(strategies.Params(tuple(x))), bob,
        gamma, mode).alice
    return BestResponseResult(
        theta=tuple(float(t) for t in x),
        gamma_branch=None,
        value=value,
        starts=starts,
        evaluations=evals,
    )


def verify_epsilon_nash(regime, alice: MixedStrategy, bob: MixedStrategy,
                        gamma, epsilon: float = DEFAULT_EPSILON,
                        mode=PayoffMode.INCOHERENT,
                        starts: int = DEFAULT_STARTS, seed=0) -> NashReport:
    """Best-response both players from a profile and compare the gains
    against epsilon."""
    current = strategies.mixed_payoff(regime, alice, bob, gamma, mode)
    br_bob = best_response_bob(regime, alice, mode, starts=starts, seed=seed)
    br_alice = best_response_alice(regime, bob, gamma, mode, starts=starts,
                                   seed=seed)
    bob_gain = max(0.0, br_bob.value - current.bob)
    alice_gain = max(0.0, br_alice.value - current.alice)
    if max(bob_gain, alice_gain) <= epsilon:
        verdict, witness = "epsilon-nash", None
    else:
        verdict = "refuted"
        if bob_gain >= alice_gain:
            witness = {"player": "bob", "theta": br_bob.theta,
                       "gamma": br_bob.gamma_branch, "value": br_bob.value}
        else:
            witness = {"player": "alice", "theta": br_alice.theta,
                       "gamma": None, "value": br_alice.value}
    return NashReport(
        regime=regime if isinstance(regime, str) else "custom",
        gamma=float(gamma),
        epsilon=epsilon,
        current_bob=current.bob,
        current_alice=current.alice,
        bob_gain=bob_gain,
        alice_gain=alice_gain,
        verdict=verdict,
        witness=witness,
    )


def counter_for_alice(bob_op: np.ndarray, gamma: float) -> np.ndarray:
    """Alice's winning reply to a revealed (B, gamma) in the entangled game:
    conj(B) against a switcher, conj(B) followed by a shuffle against a
    stayer."""
    if gamma < math.pi / 4.0:
        return bob_op.conj()
    return strategies.SHUFFLE_1 @ bob_op.conj()


def counter_for_bob(alice_op: np.ndarray):
    """Bob's winning reply to a revealed Alice strategy in the entangled
    game: play the conjugate and stay."""
    return alice_op.conj(), math.pi / 2.0


def no_pure_nash_certificate(samples: int = 500, seed=0) -> CertificateReport:
    """Refute `samples` random pure profiles of the entangled game by
    constructing the disadvantaged player's closed-form counter.

    Each counter must reach payoff >= 1 - 1e-9, strictly above the 1/2 the
    disadvantaged player currently has, so no sampled profile can be a
    Nash equilibrium.  No optimizer is involved.
    """
    rng = np.random.default_rng(seed)
    report = CertificateReport(samples=samples)
    for idx in range(samples):
        a_op = linalg.random_su3(rng=rng)
        b_op = linalg.random_su3(rng=rng)
        gamma = _BRANCHES[int(rng.integers(2))]
        current = game.expected_payoff(game.ENTANGLED, a_op, b_op, gamma)
        if current.bob <= 0.5:
            counter, counter_gamma = counter_for_bob(a_op)
            gained = game.expected_payoff(
                game.ENTANGLED, a_op, counter, counter_gamma).bob
        else:
            counter = counter_for_alice(b_op, gamma)
            gained = game.expected_payoff(
                game.ENTANGLED, counter, b_op, gamma).alice
        if gained < 1.0 - 1e-9:
            report.failures += 1
            report.failed_profiles.append(
                {"index": idx, "gamma": gamma, "counter_payoff": gained}
            )
    return report
