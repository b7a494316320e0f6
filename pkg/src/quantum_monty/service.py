"""HTTP session API serving the web UI and scripted clients.

Sessions live in memory; each session serializes its own round processing
behind a lock while distinct sessions proceed in parallel.  All engine
calls are pure, so concurrent payoff queries need no coordination.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import game, search, strategies, wire
from .errors import EngineError
from .game import PayoffMode
from .match import CounterPolicy, FixedPolicy, MixturePolicy, sample_outcome
from .strategies import MixedStrategy, Preset

PRESET_INFO = [
    {"name": "identity", "description": "leave the choice qutrit untouched"},
    {"name": "shuffle1", "description": "cyclic shuffle of the box choice"},
    {"name": "shuffle2", "description": "the opposite cyclic shuffle"},
    {"name": "fair-h", "description": "operator that pins the entangled game at 1/2"},
    {"name": "conjugate", "description": "entrywise conjugate of a nested spec"},
    {"name": "conjugate-shuffle1", "description": "conjugate then shuffle1; beats stayers"},
    {"name": "conjugate-shuffle2", "description": "conjugate then shuffle2; beats stayers"},
    {"name": "params", "description": "exponential of 8 generator coordinates"},
    {"name": "matrix", "description": "explicit SU(3) matrix as [re, im] pairs"},
]

POLICY_INFO = [
    {"name": "identity", "description": "always plays the identity",
     "hint": "opponent is exploitable in the entangled regime"},
    {"name": "fair-h", "description": "always plays the fair operator",
     "hint": "entangled game is pinned at 1/2"},
    {"name": "uniform-shuffle", "description": "uniform mixture of identity and both shuffles",
     "hint": "the mixed equilibrium policy; best response is 2/3"},
    {"name": "adaptive-counter", "description": "counters your last revealed strategy",
     "hint": "repeating a strategy against it is punished"},
]


def alice_policy_by_name(name: str):
    if name == "identity":
        return FixedPolicy(Preset("identity"))
    if name == "fair-h":
        return FixedPolicy(Preset("fair-h"))
    if name == "uniform-shuffle":
        return MixturePolicy(strategies.uniform_shuffle_mixture())
    if name == "adaptive-counter":
        return CounterPolicy(role="alice")
    raise EngineError(f"unknown alice policy {name!r}")


@dataclass
class Session:
    session_id: str
    regime: str
    mode: PayoffMode
    alice_policy_name: str
    seed: int
    round: int = 0
    bob_points: int = 0
    alice_points: int = 0
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def __post_init__(self):
        self.policy = alice_policy_by_name(self.alice_policy_name)
        self._streams = np.random.SeedSequence(self.seed)
        self._bob_revealed: list = []

    def play_round(self, bob_spec, gamma: float) -> dict:
        bob_op = strategies.resolve(bob_spec)
        rng = np.random.default_rng((self.seed, self.round))
        alice_op, _ = self.policy.choose(rng, self._bob_revealed)
        outcome = sample_outcome(self.regime, alice_op, bob_op, gamma,
                                 self.mode, rng, stream=self.round)
        self.round += 1
        if outcome.bob_wins:
            self.bob_points += 1
        else:
            self.alice_points += 1
        self._bob_revealed.append((bob_op, gamma))
        entry = {
            "round": self.round,
            "bob": wire.spec_to_wire(bob_spec),
            "gamma": float(gamma),
            "alice_revealed": {"matrix": wire.matrix_to_wire(alice_op)},
            "outcome": wire.outcome_to_wire(outcome),
            "expected_payoff": outcome.expected_bob,
            "scores": {"bob": self.bob_points, "alice": self.alice_points},
        }
        self.history.append(entry)
        return entry

    def state(self) -> dict:
        return {
            "session_id": self.session_id,
            "regime": self.regime,
            "mode": self.mode.value,
            "alice_policy": self.alice_policy_name,
            "round": self.round,
            "scores": {"bob": self.bob_points, "alice": self.alice_points},
            "history": self.history,
        }


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": {"code": code, "message": message}})


def create_app(static_dir: str | None = None, cors=None) -> FastAPI:
    app = FastAPI(title="quantum-monty", version="0.1.0")
    sessions: dict = {}
    app.state.sessions = sessions

    if cors:
        from fastapi.middleware.cors import CORSMiddleware
        app.add_middleware(CORSMiddleware, allow_origins=list(cors),
                           allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(EngineError)
    async def engine_error_handler(request: Request, exc: EngineError):
        return _error(400, exc.code, str(exc))

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return _error(400, "BadRequest", str(exc))

    @app.exception_handler(KeyError)
    async def key_error_handler(request: Request, exc: KeyError):
        return _error(400, "BadRequest", f"missing field {exc}")

    @app.get("/api/presets")
    def presets():
        return {"strategies": PRESET_INFO, "policies": POLICY_INFO}

    @app.post("/api/payoff")
    def payoff(body: dict):
        regime = body.get("regime", game.UNENTANGLED)
        mode = PayoffMode(body.get("mode", "incoherent"))
        gamma = float(body.get("gamma", 0.0))
        alice = wire.mixed_from_wire(body["alice"])
        bob = wire.mixed_from_wire(body["bob"])
        res = strategies.mixed_payoff(regime, alice, bob, gamma, mode)
        return wire.payoff_result_to_wire(res, regime, mode)

    @app.post("/api/best-response")
    def best_response(body: dict):
        regime = body.get("regime", game.UNENTANGLED)
        respond_as = body.get("respond_as", "bob")
        opponent = wire.mixed_from_wire(body["opponent"])
        starts = int(body.get("starts", 8))
        seed = int(body.get("seed", 0))
        if respond_as == "bob":
            res = search.best_response_bob(regime, opponent, starts=starts, seed=seed)
        elif respond_as == "alice":
            gamma = float(body.get("gamma", 0.0))
            res = search.best_response_alice(regime, opponent, gamma,
                                             starts=starts, seed=seed)
        else:
            return _error(400, "BadRequest", "respond_as must be alice or bob")
        return {
            "theta": list(res.theta),
            "gamma_branch": res.gamma_branch,
            "value": res.value,
            "starts": res.starts,
            "evaluations": res.evaluations,
            "strategy": {"matrix": wire.matrix_to_wire(res.strategy)},
        }

    @app.post("/api/session")
    def create_session(body: dict):
        regime = body.get("regime", game.UNENTANGLED)
        if regime not in (game.UNENTANGLED, game.ENTANGLED):
            return _error(400, "BadCustomState", f"unknown regime {regime!r}")
        policy = body.get("alice_policy", "identity")
        if policy not in {p["name"] for p in POLICY_INFO}:
            return _error(400, "BadRequest", f"unknown alice policy {policy!r}")
        seed = int(body.get("seed", 0))
        session = Session(
            session_id=uuid.uuid4().hex,
            regime=regime,
            mode=PayoffMode(body.get("mode", "incoherent")),
            alice_policy_name=policy,
            seed=seed,
        )
        sessions[session.session_id] = session
        return {"session_id": session.session_id}

    @app.post("/api/session/{session_id}/round")
    def play_round(session_id: str, body: dict):
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        with session.lock:
            requested = body.get("round")
            if requested is not None and int(requested) != session.round + 1:
                return _error(
                    409, "RoundAlreadyPlayed",
                    f"round {requested} conflicts with counter {session.round}",
                )
            bob_spec = wire.spec_from_wire(body["bob"])
            strategies.resolve(bob_spec)  # validate before consuming the round
            gamma = float(body.get("gamma", 0.0))
            return session.play_round(bob_spec, gamma)

    @app.get("/api/session/{session_id}")
    def session_state(session_id: str):
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        return session.state()

    @app.delete("/api/session/{session_id}")
    def delete_session(session_id: str):
        if session_id not in sessions:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        del sessions[session_id]
        return {"deleted": session_id}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
