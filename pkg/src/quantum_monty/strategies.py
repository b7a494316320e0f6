"""Named strategies, counterstrategy constructors and mixed strategies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import game, linalg
from .errors import NonUnitaryResolution

IDENTITY = np.eye(3, dtype=complex)

# Cyclic shuffles of the player's box choice (both are even permutations,
# hence already in SU(3)).
SHUFFLE_1 = np.array(
    [[0, 1, 0],
     [0, 0, 1],
     [1, 0, 0]], dtype=complex)
SHUFFLE_2 = np.array(
    [[0, 0, 1],
     [1, 0, 0],
     [0, 1, 0]], dtype=complex)


def _build_fair_operator() -> np.ndarray:
    """SU(3) operator with |diag| = 1/sqrt(2), |off-diag| = 1/2.

    Played by Alice against a classically restricted Bob in the entangled
    game it makes the game fair (payoff 1/2 for both, any gamma).
    """
    s2 = math.sqrt(2.0)
    s7 = math.sqrt(7.0)
    h = np.array(
        [
            [1 / s2, 0.5, 0.5],
            [-0.5, (3 - 1j * s7) / (4 * s2), (1 + 1j * s7) / (4 * s2)],
            [(-1 - 1j * s7) / (4 * s2), (-3 + 1j * s7) / 8, (5 + 1j * s7) / 8],
        ],
        dtype=complex,
    )
    # guard against transcription slips: the abs-value pattern and SU(3)
    # membership are the defining contract
    assert linalg.is_special_unitary(h, 1e-9)
    assert np.allclose(np.abs(np.diagonal(h)), 1 / s2, atol=1e-12)
    return h


FAIR_H = _build_fair_operator()


@dataclass(frozen=True)
class Preset:
    name: str  # "identity" | "shuffle1" | "shuffle2" | "fair-h"


@dataclass(frozen=True)
class Conjugate:
    of: "StrategySpec"


@dataclass(frozen=True)
class ConjugateShuffled:
    of: "StrategySpec"
    which: int  # 1 or 2


@dataclass(frozen=True)
class Params:
    theta: tuple


@dataclass(frozen=True, eq=False)
class Matrix:
    entries: np.ndarray


StrategySpec = Union[Preset, Conjugate, ConjugateShuffled, Params, Matrix, np.ndarray]

_PRESETS = {
    "identity": IDENTITY,
    "shuffle1": SHUFFLE_1,
    "shuffle2": SHUFFLE_2,
    "fair-h": FAIR_H,
}


def resolve(spec: StrategySpec) -> np.ndarray:
    """Resolve a strategy spec to its SU(3) matrix."""
    if isinstance(spec, np.ndarray):
        spec = Matrix(spec)
    if isinstance(spec, Preset):
        try:
            return _PRESETS[spec.name]
        except KeyError:
            raise NonUnitaryResolution(f"unknown preset {spec.name!r}") from None
    if isinstance(spec, Conjugate):
        return resolve(spec.of).conj()
    if isinstance(spec, ConjugateShuffled):
        if spec.which not in (1, 2):
            raise NonUnitaryResolution("shuffle index must be 1 or 2")
        shuffle = SHUFFLE_1 if spec.which == 1 else SHUFFLE_2
        # shuffle applied after the conjugate; this is the composition that
        # defeats any stay strategy in the entangled game, which is the
        # defining contract of this constructor
        return shuffle @ resolve(spec.of).conj()
    if isinstance(spec, Params):
        return linalg.su3_from_params(np.asarray(spec.theta, dtype=float))
    if isinstance(spec, Matrix):
        m = np.asarray(spec.entries, dtype=complex)
        if not linalg.is_special_unitary(m, linalg.UNITARY_TOL):
            raise NonUnitaryResolution("matrix is not in SU(3) within 1e-9")
        return m
    raise NonUnitaryResolution(f"unrecognized strategy spec {spec!r}")


def classical_strategy(choice: int) -> np.ndarray:
    """Deterministic classical pick of a box, as a permutation in SU(3).

    The cyclic shift |j> -> |j + choice mod 3> moves a basis-ket choice onto
    the chosen box; only meaningful for custom basis-ket initial states.
    Cyclic shifts are even permutations so no sign fix is needed.
    """
    if choice not in (0, 1, 2):
        raise ValueError("box choice must be 0, 1 or 2")
    p = np.zeros((3, 3), dtype=complex)
    for j in range(3):
        p[(j + choice) % 3, j] = 1.0
    return p


@dataclass(frozen=True)
class MixedStrategy:
    """Classical probability mixture over pure quantum strategies."""

    components: tuple  # of (StrategySpec, weight)

    def __post_init__(self):
        if not self.components:
            raise ValueError("mixture needs at least one component")
        weights = [w for _, w in self.components]
        if any(w < 0 for w in weights):
            raise ValueError("mixture weights must be nonnegative")
        total = sum(weights)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"mixture weights sum to {total}, expected 1")
        if abs(total - 1.0) > 0:
            object.__setattr__(
                self,
                "components",
                tuple((s, w / total) for s, w in self.components),
            )

    @classmethod
    def singleton(cls, spec: StrategySpec) -> "MixedStrategy":
        return cls(components=((spec, 1.0),))

    @classmethod
    def uniform(cls, specs) -> "MixedStrategy":
        specs = list(specs)
        return cls(components=tuple((s, 1.0 / len(specs)) for s in specs))

    def resolved(self) -> list:
        return [(resolve(s), w) for s, w in self.components]


def uniform_shuffle_mixture() -> MixedStrategy:
    """Uniform mixture over identity and the two shuffles (the mixed
    equilibrium support of the entangled game)."""
    return MixedStrategy.uniform(
        [Preset("identity"), Preset("shuffle1"), Preset("shuffle2")]
    )


def mixed_payoff(regime, alice: MixedStrategy, bob: MixedStrategy, gamma,
                 mode=game.PayoffMode.INCOHERENT) -> game.PayoffResult:
    """Probability-weighted payoff over all component pairs."""
    total = 0.0
    norm_acc = 0.0
    for a_op, wa in alice.resolved():
        for b_op, wb in bob.resolved():
            res = game.expected_payoff(regime, a_op, b_op, gamma, mode)
            total += wa * wb * res.bob
            norm_acc += wa * wb * res.final_norm2
    return game.PayoffResult(bob=total, alice=1.0 - total, final_norm2=norm_acc)
