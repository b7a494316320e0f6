"""Reproduction suite for the game's published payoff and equilibrium
claims.  Each claim returns a ClaimResult; the CLI `verify` command prints
them as a table and the acceptance tests assert them one by one."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import game, linalg, search, strategies
from .closed_form import closed_form_payoff
from .game import ENTANGLED, UNENTANGLED, PayoffMode
from .match import FixedPolicy, GameConfig, MixturePolicy, run_match
from .strategies import (
    FAIR_H,
    IDENTITY,
    SHUFFLE_1,
    SHUFFLE_2,
    MixedStrategy,
    Preset,
    uniform_shuffle_mixture,
)

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    expected: str
    computed: str
    tolerance: float
    passed: bool


def _result(claim_id, description, expected, computed, tol, passed):
    return ClaimResult(
        claim_id=claim_id,
        description=description,
        expected=expected,
        computed=computed,
        tolerance=tol,
        passed=bool(passed),
    )


def _bob(regime, a, b, gamma, mode=PayoffMode.INCOHERENT):
    return game.expected_payoff(regime, a, b, gamma, mode).bob


def claim_classical_baseline(seed=0, quick=False) -> ClaimResult:
    """Identity vs identity, unentangled: the classical mixed strategy."""
    tol = 1e-12
    worst = abs(_bob(UNENTANGLED, IDENTITY, IDENTITY, 0.0) - 2.0 / 3.0)
    worst = max(worst, abs(_bob(UNENTANGLED, IDENTITY, IDENTITY, HALF_PI) - 1.0 / 3.0))
    for gamma in np.linspace(0.0, HALF_PI, 20):
        want = (2.0 / 3.0) * math.cos(gamma) ** 2 + (1.0 / 3.0) * math.sin(gamma) ** 2
        worst = max(worst, abs(_bob(UNENTANGLED, IDENTITY, IDENTITY, gamma) - want))
    return _result("classical-baseline",
                   "unentangled identity profile reproduces the classical payoffs",
                   "2/3 switch, 1/3 stay, affine in cos^2", f"max dev {worst:.2e}",
                   tol, worst <= tol)


def claim_strategy_independence(seed=0, quick=False) -> ClaimResult:
    """One-sided unitary deviations don't move the unentangled payoff."""
    n = 40 if quick else 200
    tol = 1e-9
    rng = np.random.default_rng(seed)
    gammas = (0.0, 0.7, HALF_PI)
    worst = 0.0
    for _ in range(n):
        u = linalg.random_su3(rng=rng)
        for gamma in gammas:
            want = (2.0 / 3.0) * math.cos(gamma) ** 2 + (1.0 / 3.0) * math.sin(gamma) ** 2
            worst = max(worst, abs(_bob(UNENTANGLED, u, IDENTITY, gamma) - want))
            worst = max(worst, abs(_bob(UNENTANGLED, IDENTITY, u, gamma) - want))
    return _result("strategy-independence",
                   f"unentangled payoff is flat in either lone strategy ({n} samples)",
                   "equal to classical baseline", f"max dev {worst:.2e}",
                   tol, worst <= tol)


def claim_fair_game(seed=0, quick=False) -> ClaimResult:
    """The fair operator pins the entangled game at 1/2 for any gamma."""
    tol = 1e-9
    worst = max(
        abs(_bob(ENTANGLED, FAIR_H, IDENTITY, gamma) - 0.5)
        for gamma in (0.0, math.pi / 4.0, HALF_PI)
    )
    return _result("fair-game",
                   "fair operator vs identity Bob yields 1/2 at gamma 0, pi/4, pi/2",
                   "1/2", f"max dev {worst:.2e}", tol, worst <= tol)


def claim_quantum_bob(seed=0, quick=False) -> ClaimResult:
    """Quantum Bob wins outright against an identity Alice (entangled)."""
    tol = 1e-12
    worst = abs(_bob(ENTANGLED, IDENTITY, IDENTITY, HALF_PI) - 1.0)
    worst = max(worst, abs(_bob(ENTANGLED, IDENTITY, SHUFFLE_1, 0.0) - 1.0))
    worst = max(worst, abs(_bob(ENTANGLED, IDENTITY, SHUFFLE_2, 0.0) - 1.0))
    return _result("quantum-bob",
                   "identity+stay and shuffle+switch give Bob payoff 1",
                   "1", f"max dev {worst:.2e}", tol, worst <= tol)


def claim_counterstrategies(seed=0, quick=False) -> ClaimResult:
    """Conjugate counters win outright for either player (entangled)."""
    n = 40 if quick else 200
    tol = 1e-9
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        u = linalg.random_su3(rng=rng)
        worst = max(worst, abs(_bob(ENTANGLED, u, u.conj(), HALF_PI) - 1.0))
        worst = max(worst, abs(_bob(ENTANGLED, u.conj(), u, 0.0)))
        worst = max(worst, abs(_bob(ENTANGLED, SHUFFLE_1 @ u.conj(), u, HALF_PI)))
    return _result("counterstrategies",
                   f"conjugate counters reach payoff 1 on both sides ({n} samples)",
                   "bob 1 countering / bob 0 countered", f"max dev {worst:.2e}",
                   tol, worst <= tol)


def claim_no_pure_nash(seed=0, quick=False) -> ClaimResult:
    n = 100 if quick else 500
    report = search.no_pure_nash_certificate(samples=n, seed=seed)
    return _result("no-pure-nash",
                   f"constructive counters refute {n} random entangled pure profiles",
                   "0 failures", f"{report.failures} failures",
                   0.0, report.passed)


def claim_mixed_equilibrium(seed=0, quick=False) -> ClaimResult:
    """Uniform identity/shuffle mixtures are an entangled equilibrium."""
    starts = 8 if quick else 32
    mix = uniform_shuffle_mixture()
    at_switch = strategies.mixed_payoff(ENTANGLED, mix, mix, 0.0).bob
    at_stay = strategies.mixed_payoff(ENTANGLED, mix, mix, HALF_PI).bob
    enum_ok = abs(at_switch - 2.0 / 3.0) <= 1e-12 and abs(at_stay - 1.0 / 3.0) <= 1e-12
    report = search.verify_epsilon_nash(ENTANGLED, mix, mix, 0.0,
                                        epsilon=5e-3, starts=starts, seed=seed)
    gain = max(report.bob_gain, report.alice_gain)
    passed = enum_ok and report.verdict == "epsilon-nash"
    return _result("mixed-equilibrium",
                   "uniform shuffle mixtures: 2/3 switch, 1/3 stay, no 5e-3 deviation",
                   "2/3 and 1/3; gain <= 5e-3",
                   f"{at_switch:.6f}/{at_stay:.6f}; gain {gain:.2e}",
                   5e-3, passed)


def claim_unentangled_nash(seed=0, quick=False) -> ClaimResult:
    starts = 8 if quick else 32
    ident = MixedStrategy.singleton(Preset("identity"))
    report = search.verify_epsilon_nash(UNENTANGLED, ident, ident, 0.0,
                                        epsilon=5e-3, starts=starts, seed=seed)
    br = search.best_response_bob(UNENTANGLED, ident, starts=starts, seed=seed)
    bounded = br.value <= 2.0 / 3.0 + 2e-3
    passed = report.verdict == "epsilon-nash" and bounded
    return _result("unentangled-nash",
                   "identity/identity/switch is an epsilon-Nash of the unentangled game",
                   "verdict epsilon-nash; Bob best response <= 2/3 + 2e-3",
                   f"{report.verdict}; best response {br.value:.6f}",
                   5e-3, passed)


def claim_oracle_equivalence(seed=0, quick=False) -> ClaimResult:
    """Engine vs closed-form payoffs on random profiles, both regimes."""
    n = 100 if quick else 500
    tol = 1e-9
    rng = np.random.default_rng(seed)
    worst = 0.0
    for regime in (UNENTANGLED, ENTANGLED):
        for _ in range(n):
            a = linalg.random_su3(rng=rng)
            b = linalg.random_su3(rng=rng)
            gamma = float(rng.uniform(0.0, HALF_PI))
            closed = closed_form_payoff(regime, a, b, gamma)
            engine = _bob(regime, a, b, gamma)
            worst = max(worst, abs(closed - engine))
    return _result("oracle-equivalence",
                   f"closed forms match the engine on {n} random profiles per regime",
                   "agreement to 1e-9", f"max dev {worst:.2e}", tol, worst <= tol)


def claim_operator_structure(seed=0, quick=False) -> ClaimResult:
    open_op = game.build_open_operator()
    switch_op = game.build_switch_operator()
    ok = linalg.permutation_table(open_op) is not None
    ok = ok and linalg.permutation_table(switch_op) is not None
    ok = ok and np.allclose(switch_op @ switch_op, np.eye(27), atol=1e-12)
    ok = ok and linalg.unitarity_defect(open_op) <= 1e-12
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(27) + 1j * rng.standard_normal(27)
    psi = psi / math.sqrt(linalg.norm2(psi))
    drift = max(abs(linalg.norm2(open_op @ psi) - 1.0),
                abs(linalg.norm2(switch_op @ psi) - 1.0))
    ok = ok and drift <= 1e-12
    return _result("operator-structure",
                   "open/switch are unit-weight basis permutations; switch squares to I",
                   "permutations, involution, norm drift <= 1e-12",
                   f"norm drift {drift:.2e}", 1e-12, ok)


_SAMPLING_PROFILES = (
    (UNENTANGLED, "identity", "identity", 0.0),
    (UNENTANGLED, "identity", "identity", HALF_PI),
    (UNENTANGLED, "identity", "identity", math.pi / 4.0),
    (ENTANGLED, "identity", "identity", HALF_PI),
    (ENTANGLED, "fair-h", "identity", 0.0),
)


def claim_sampling_consistency(seed=0, quick=False) -> ClaimResult:
    """Match frequencies track expected payoffs within 4-sigma binomial
    bounds on five canonical profiles."""
    n = 2000 if quick else 10_000
    ok = True
    details = []
    for k, (regime, a_name, b_name, gamma) in enumerate(_SAMPLING_PROFILES):
        a_op = strategies.resolve(Preset(a_name))
        b_op = strategies.resolve(Preset(b_name))
        p = _bob(regime, a_op, b_op, gamma)
        transcript = run_match(
            GameConfig(regime=regime),
            rounds=n,
            alice_policy=FixedPolicy(Preset(a_name)),
            bob_policy=FixedPolicy(Preset(b_name), gamma=gamma),
            seed=seed + k,
        )
        freq = transcript.bob_points / n
        bound = 4.0 * math.sqrt(p * (1.0 - p) / n)
        dev = abs(freq - p)
        ok = ok and dev <= max(bound, 1e-15)
        details.append(f"{freq:.4f}~{p:.4f}")
    return _result("sampling-consistency",
                   f"{n}-round match frequencies track expectations (4 sigma)",
                   "within binomial bounds", "; ".join(details), 0.0, ok)


CLAIMS: "list[tuple[str, Callable]]" = [
    ("classical-baseline", claim_classical_baseline),
    ("strategy-independence", claim_strategy_independence),
    ("fair-game", claim_fair_game),
    ("quantum-bob", claim_quantum_bob),
    ("counterstrategies", claim_counterstrategies),
    ("no-pure-nash", claim_no_pure_nash),
    ("mixed-equilibrium", claim_mixed_equilibrium),
    ("unentangled-nash", claim_unentangled_nash),
    ("oracle-equivalence", claim_oracle_equivalence),
    ("operator-structure", claim_operator_structure),
    ("sampling-consistency", claim_sampling_consistency),
]


def run_all(seed: int = 0, quick: bool = False,
            only: Optional[str] = None) -> list:
    results = []
    for name, fn in CLAIMS:
        if only is not None and name != only:
            continue
        results.append(fn(seed=seed, quick=quick))
    return results
