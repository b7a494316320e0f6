"""Exact three-qutrit engine for the quantum Monty Hall game.

Provides the state-vector engine, closed-form payoff oracles, SU(3)
best-response search, seeded match play, a CLI and an HTTP session API.
"""

from .game import (
    ENTANGLED,
    UNENTANGLED,
    PayoffMode,
    PayoffResult,
    expected_payoff,
    final_state,
    initial_state,
)
from .strategies import MixedStrategy, mixed_payoff, resolve

__all__ = [
    "ENTANGLED",
    "UNENTANGLED",
    "PayoffMode",
    "PayoffResult",
    "MixedStrategy",
    "expected_payoff",
    "final_state",
    "initial_state",
    "mixed_payoff",
    "resolve",
]

__version__ = "0.1.0"
