"""JSON wire formats: strategy specs, payoff results, transcripts.

Complex numbers travel as [re, im] pairs; gamma is a raw float in radians.
The formats are pinned by the schema files in quantum_monty/schemas/.
"""

from __future__ import annotations

import numpy as np

from . import game, match, strategies
from .errors import NonUnitaryResolution
from .strategies import (
    Conjugate,
    ConjugateShuffled,
    Matrix,
    MixedStrategy,
    Params,
    Preset,
)

WIRE_VERSION = 1

PRESET_NAMES = (
    "identity", "shuffle1", "shuffle2", "fair-h",
    "conjugate", "conjugate-shuffle1", "conjugate-shuffle2",
)


def complex_to_wire(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def matrix_to_wire(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[complex_to_wire(m[i, j]) for j in range(3)] for i in range(3)]


def matrix_from_wire(obj) -> np.ndarray:
    arr = np.asarray(obj, dtype=float)
    if arr.shape != (3, 3, 2):
        raise NonUnitaryResolution("matrix wire form must be 3x3 of [re, im]")
    return arr[..., 0] + 1j * arr[..., 1]


def spec_from_wire(obj) -> strategies.StrategySpec:
    """Parse a strategy spec from its wire object.

    Accepts {"preset": name, "of": ...}, {"params": [8 floats]} or
    {"matrix": 3x3 of [re, im]}.  A bare string is shorthand for a preset.
    """
    if isinstance(obj, str):
        obj = {"preset": obj}
    if not isinstance(obj, dict):
        raise NonUnitaryResolution(f"unrecognized strategy spec {obj!r}")
    if "preset" in obj:
        name = obj["preset"]
        if name == "conjugate":
            return Conjugate(of=spec_from_wire(obj.get("of", "identity")))
        if name == "conjugate-shuffle1":
            return ConjugateShuffled(of=spec_from_wire(obj.get("of", "identity")), which=1)
        if name == "conjugate-shuffle2":
            return ConjugateShuffled(of=spec_from_wire(obj.get("of", "identity")), which=2)
        if name == "params":
            return Params(theta=tuple(float(t) for t in obj["params"]))
        if name == "matrix":
            return Matrix(entries=matrix_from_wire(obj["matrix"]))
        return Preset(name=name)
    if "params" in obj:
        theta = [float(t) for t in obj["params"]]
        if len(theta) != 8:
            raise NonUnitaryResolution("params form needs 8 generator coordinates")
        return Params(theta=tuple(theta))
    if "matrix" in obj:
        return Matrix(entries=matrix_from_wire(obj["matrix"]))
    raise NonUnitaryResolution(f"unrecognized strategy spec {obj!r}")


def spec_to_wire(spec: strategies.StrategySpec):
    if isinstance(spec, np.ndarray):
        spec = Matrix(spec)
    if isinstance(spec, Preset):
        return {"preset": spec.name}
    if isinstance(spec, Conjugate):
        return {"preset": "conjugate", "of": spec_to_wire(spec.of)}
    if isinstance(spec, ConjugateShuffled):
        return {"preset": f"conjugate-shuffle{spec.which}",
                "of": spec_to_wire(spec.of)}
    if isinstance(spec, Params):
        return {"params": [float(t) for t in spec.theta]}
    if isinstance(spec, Matrix):
        return {"matrix": matrix_to_wire(spec.entries)}
    raise NonUnitaryResolution(f"unrecognized strategy spec {spec!r}")


def mixed_from_wire(obj) -> MixedStrategy:
    """A mixture is {"mixture": [{"strategy": spec, "weight": w}, ...]};
    anything else parses as a singleton spec."""
    if isinstance(obj, dict) and "mixture" in obj:
        comps = tuple(
            (spec_from_wire(c["strategy"]), float(c["weight"]))
            for c in obj["mixture"]
        )
        return MixedStrategy(components=comps)
    return MixedStrategy.singleton(spec_from_wire(obj))


def mixed_to_wire(mixed: MixedStrategy):
    if len(mixed.components) == 1:
        return spec_to_wire(mixed.components[0][0])
    return {"mixture": [
        {"strategy": spec_to_wire(s), "weight": w}
        for s, w in mixed.components
    ]}


def payoff_result_to_wire(res: game.PayoffResult, regime: str, mode) -> dict:
    return {
        "bob": res.bob,
        "alice": res.alice,
        "final_norm2": res.final_norm2,
        "regime": regime,
        "mode": game.PayoffMode(mode).value,
    }


def outcome_to_wire(outcome: match.GameOutcome) -> dict:
    return {
        "o": outcome.o,
        "b": outcome.b,
        "a": outcome.a,
        "bob_wins": outcome.bob_wins,
        "expected_bob": outcome.expected_bob,
        "stream": outcome.stream,
    }


def round_to_wire(rec: match.RoundRecord) -> dict:
    return {
        "round": rec.index,
        "alice": {"matrix": matrix_to_wire(rec.alice_op)},
        "bob": {"matrix": matrix_to_wire(rec.bob_op)},
        "gamma": rec.gamma,
        "outcome": outcome_to_wire(rec.outcome),
    }


def transcript_header(transcript: match.MatchTranscript) -> dict:
    return {
        "version": WIRE_VERSION,
        "regime": transcript.regime,
        "mode": transcript.mode,
        "master_seed": transcript.master_seed,
    }


def transcript_to_lines(transcript: match.MatchTranscript) -> list:
    """JSON-lines payload: one header object then one object per round."""
    lines = [transcript_header(transcript)]
    lines.extend(round_to_wire(r) for r in transcript.rounds)
    lines.append({"bob_points": transcript.bob_points,
                  "alice_points": transcript.alice_points})
    return lines
