"""Command-line interface: payoff queries, best-response search, the
claim-reproduction suite, interactive play and the HTTP service."""

from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from . import game, search, strategies, verification, wire
from .errors import EngineError
from .game import PayoffMode
from .match import sample_outcome

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _fail(code: str, message: str):
    click.echo(json.dumps({"error": {"code": code, "message": message}}))
    sys.exit(EXIT_USAGE)


def _parse_mixed(text: str) -> strategies.MixedStrategy:
    """Accept a preset name or a JSON strategy/mixture spec."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        return wire.mixed_from_wire(json.loads(text))
    return wire.mixed_from_wire(text)


@click.group()
def main():
    """Exact engine for the three-box quantum game."""


@main.command("payoff")
@click.option("--regime", type=click.Choice(["unentangled", "entangled"]),
              default="unentangled", show_default=True)
@click.option("--alice", default="identity", help="strategy preset or JSON spec")
@click.option("--bob", default="identity", help="strategy preset or JSON spec")
@click.option("--gamma", type=float, default=0.0, show_default=True,
              help="switch parameter in radians, 0 = switch, pi/2 = stay")
@click.option("--mode", type=click.Choice(["incoherent", "coherent"]),
              default="incoherent", show_default=True)
@click.option("--output", type=click.Choice(["json", "csv"]), default="json")
def cmd_payoff(regime, alice, bob, gamma, mode, output):
    """Expected payoff for a strategy profile."""
    try:
        a = _parse_mixed(alice)
        b = _parse_mixed(bob)
        res = strategies.mixed_payoff(regime, a, b, gamma, PayoffMode(mode))
    except (EngineError, ValueError, json.JSONDecodeError) as exc:
        _fail(getattr(exc, "code", "BadRequest"), str(exc))
        return
    payload = wire.payoff_result_to_wire(res, regime, mode)
    if output == "csv":
        click.echo("bob,alice,final_norm2,mode,regime")
        click.echo(f"{res.bob!r},{res.alice!r},{res.final_norm2!r},{mode},{regime}")
    else:
        click.echo(json.dumps(payload))


@main.command("best-response")
@click.option("--respond-as", type=click.Choice(["alice", "bob"]), required=True)
@click.option("--regime", type=click.Choice(["unentangled", "entangled"]),
              default="unentangled", show_default=True)
@click.option("--opponent", default="identity", help="opponent strategy or mixture")
@click.option("--gamma", type=float, default=0.0,
              help="Bob's switch parameter (when responding as Alice)")
@click.option("--starts", type=int, default=search.DEFAULT_STARTS, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def cmd_best_response(respond_as, regime, opponent, gamma, starts, seed):
    """Search SU(3) for the best reply to an opponent strategy."""
    try:
        opp = _parse_mixed(opponent)
        if respond_as == "bob":
            res = search.best_response_bob(regime, opp, starts=starts, seed=seed)
        else:
            res = search.best_response_alice(regime, opp, gamma,
                                             starts=starts, seed=seed)
    except (EngineError, ValueError, json.JSONDecodeError) as exc:
        _fail(getattr(exc, "code", "BadRequest"), str(exc))
        return
    click.echo(json.dumps({
        "respond_as": respond_as,
        "theta": list(res.theta),
        "gamma_branch": res.gamma_branch,
        "value": res.value,
        "starts": res.starts,
        "evaluations": res.evaluations,
        "strategy": {"matrix": wire.matrix_to_wire(res.strategy)},
    }))


@main.command("verify")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--quick", is_flag=True,
              help="reduced sample counts (same verdicts, less confidence)")
@click.option("--only", default=None, help="run a single claim by id")
def cmd_verify(seed, quick, only):
    """Run the reproduction suite for the published game claims."""
    results = verification.run_all(seed=seed, quick=quick, only=only)
    if not results:
        _fail("BadRequest", f"no claim named {only!r}")
    width = max(len(r.claim_id) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        click.echo(f"{status}  {r.claim_id:<{width}}  tol={r.tolerance:g}  "
                   f"expected [{r.expected}]  computed [{r.computed}]")
    if quick:
        click.echo("note: --quick uses reduced sample counts")
    click.echo(f"{len(results) - failures}/{len(results)} claims passed")
    sys.exit(EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED)


@main.command("play")
@click.option("--regime", type=click.Choice(["unentangled", "entangled"]),
              default="entangled", show_default=True)
@click.option("--alice-policy",
              type=click.Choice(["identity", "fair-h", "uniform-shuffle",
                                 "adaptive-counter"]),
              default="identity", show_default=True)
@click.option("--rounds", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--transcript", type=click.Path(dir_okay=False), default=None,
              help="append JSON-lines transcript to this file")
def cmd_play(regime, alice_policy, rounds, seed, transcript):
    """Play iterated rounds as Bob against an engine policy."""
    from .service import alice_policy_by_name

    policy = alice_policy_by_name(alice_policy)
    bob_revealed: list = []
    bob_points = alice_points = 0
    lines = [{"version": wire.WIRE_VERSION, "regime": regime,
              "mode": "incoherent", "master_seed": seed}]
    played = 0
    click.echo(f"regime={regime}, opponent policy={alice_policy}; "
               "strategies: identity, shuffle1, shuffle2, fair-h, "
               "conjugate, or 8 comma-separated generator coordinates")
    try:
        while played < rounds:
            raw = click.prompt(f"round {played + 1} strategy", default="identity")
            raw = raw.strip()
            try:
                if "," in raw:
                    theta = tuple(float(x) for x in raw.split(","))
                    spec = strategies.Params(theta=theta)
                else:
                    spec = wire.spec_from_wire(raw)
                bob_op = strategies.resolve(spec)
                choice = click.prompt("switch or stay",
                                      type=click.Choice(["switch", "stay"]),
                                      default="stay")
            except (EngineError, ValueError) as exc:
                click.echo(f"invalid input, round not consumed: {exc}")
                continue
            gamma = 0.0 if choice == "switch" else math.pi / 2.0
            rng = np.random.default_rng((seed, played))
            alice_op, _ = policy.choose(rng, bob_revealed)
            outcome = sample_outcome(regime, alice_op, bob_op, gamma,
                                     PayoffMode.INCOHERENT, rng, stream=played)
            played += 1
            if outcome.bob_wins:
                bob_points += 1
            else:
                alice_points += 1
            bob_revealed.append((bob_op, gamma))
            click.echo(f"opened box {outcome.o}, you held {outcome.b}, "
                       f"prize at {outcome.a} -> {'WIN' if outcome.bob_wins else 'LOSS'}"
                       f"  (expected payoff {outcome.expected_bob:.4f})"
                       f"  score you {bob_points} - {alice_points} banker")
            lines.append({
                "round": played,
                "alice": {"matrix": wire.matrix_to_wire(alice_op)},
                "bob": {"matrix": wire.matrix_to_wire(bob_op)},
                "gamma": gamma,
                "outcome": wire.outcome_to_wire(outcome),
            })
    except (KeyboardInterrupt, click.Abort, EOFError):
        click.echo("\nmatch interrupted")
    lines.append({"bob_points": bob_points, "alice_points": alice_points})
    if transcript:
        with open(transcript, "a", encoding="utf-8") as fh:
            for line in lines:
                fh.write(json.dumps(line) + "\n")
        click.echo(f"transcript appended to {transcript}")


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static-dir", type=click.Path(file_okay=False), default=None,
              help="serve the built web UI from this directory")
@click.option("--cors", multiple=True, help="allowed CORS origins")
def cmd_serve(port, host, static_dir, cors):
    """Run the HTTP session API (and optionally the web UI)."""
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=static_dir, cors=list(cors) or None)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
