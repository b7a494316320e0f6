"""Projective measurement of final states and seeded iterated matches.

Reproducibility contract: all randomness flows from numpy's PCG64 seeded
through SeedSequence, with one spawned child stream per round.  Replaying
a transcript's master seed reproduces it bit-exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import game, linalg, search, strategies
from .game import PayoffMode
from .strategies import MixedStrategy


@dataclass(frozen=True)
class GameConfig:
    regime: str = game.UNENTANGLED
    mode: PayoffMode = PayoffMode.INCOHERENT


@dataclass(frozen=True)
class GameOutcome:
    o: int
    b: int
    a: int
    bob_wins: bool
    expected_bob: float
    stream: int  # index of the per-round RNG stream that produced the draw


@dataclass(frozen=True)
class RoundRecord:
    index: int
    alice_op: np.ndarray
    bob_op: np.ndarray
    gamma: float
    outcome: GameOutcome


@dataclass
class MatchTranscript:
    regime: str
    mode: str
    master_seed: int
    rounds: list = field(default_factory=list)
    bob_points: int = 0
    alice_points: int = 0


def sample_outcome(regime, alice, bob, gamma, mode, rng: np.random.Generator,
                   stream: int = 0) -> GameOutcome:
    """Draw one measured basis triple from the final state.

    In incoherent mode at interior gamma the branch is sampled first
    (switch with probability cos^2 gamma), then the pure branch state is
    measured; coherent mode measures the normalized combined state.
    """
    expected = game.expected_payoff(regime, alice, bob, gamma, mode).bob
    mode = PayoffMode(mode)
    if mode is PayoffMode.INCOHERENT:
        branch_gamma = 0.0 if rng.random() < math.cos(gamma) ** 2 else math.pi / 2
        psi, _ = game.final_state(regime, alice, bob, branch_gamma, mode)
    else:
        psi, _ = game.final_state(regime, alice, bob, gamma, mode)
    probs = np.abs(psi) ** 2
    probs = probs / probs.sum()
    idx = int(rng.choice(linalg.N_STATES, p=probs))
    o, b, a = linalg.index_to_ket(idx)
    return GameOutcome(o=o, b=b, a=a, bob_wins=(b == a),
                       expected_bob=expected, stream=stream)


class FixedPolicy:
    """Plays the same resolved strategy (and gamma, for Bob) every round."""

    def __init__(self, spec, gamma: float = 0.0):
        self.op = strategies.resolve(spec)
        self.gamma = float(gamma)

    def choose(self, rng, opponent_history):
        return self.op, self.gamma


class MixturePolicy:
    """Resamples a component from a classical mixture each round."""

    def __init__(self, mixed: MixedStrategy, gamma: float = 0.0):
        self.components = mixed.resolved()
        self.weights = np.array([w for _, w in self.components])
        self.gamma = float(gamma)

    def choose(self, rng, opponent_history):
        k = int(rng.choice(len(self.components), p=self.weights))
        return self.components[k][0], self.gamma


class CounterPolicy:
    """Plays the closed-form counter to the opponent's last revealed move.

    Only the moves revealed after earlier rounds are visible; the first
    round falls back to the identity.  Only meaningful in the entangled
    regime, where the counter wins outright.
    """

    def __init__(self, role: str, gamma: float = 0.0):
        if role not in ("alice", "bob"):
            raise ValueError("role must be 'alice' or 'bob'")
        self.role = role
        self.gamma = float(gamma)

    def choose(self, rng, opponent_history):
        if not opponent_history:
            return strategies.IDENTITY, self.gamma
        last_op, last_gamma = opponent_history[-1]
        if self.role == "alice":
            return search.counter_for_alice(last_op, last_gamma), self.gamma
        return search.counter_for_bob(last_op)


def run_match(config: GameConfig, rounds: int, alice_policy, bob_policy,
              seed: int) -> MatchTranscript:
    """Play `rounds` simultaneous-move rounds and return the transcript.

    Per round, in fixed order on that round's RNG stream: Alice's draw,
    Bob's draw, then the measurement draw.  Strategies are committed
    before the outcome and revealed to the policies afterwards.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    transcript = MatchTranscript(
        regime=config.regime if isinstance(config.regime, str) else "custom",
        mode=PayoffMode(config.mode).value,
        master_seed=int(seed),
    )
    streams = np.random.SeedSequence(seed).spawn(rounds)
    alice_revealed: list = []
    bob_revealed: list = []
    for i, stream in enumerate(streams):
        rng = np.random.default_rng(stream)
        a_op, _ = alice_policy.choose(rng, bob_revealed)
        b_op, gamma = bob_policy.choose(rng, alice_revealed)
        outcome = sample_outcome(config.regime, a_op, b_op, gamma,
                                 config.mode, rng, stream=i)
        transcript.rounds.append(RoundRecord(
            index=i, alice_op=a_op, bob_op=b_op, gamma=gamma, outcome=outcome))
        if outcome.bob_wins:
            transcript.bob_points += 1
        else:
            transcript.alice_points += 1
        alice_revealed.append((a_op, gamma))
        bob_revealed.append((b_op, gamma))
    return transcript
