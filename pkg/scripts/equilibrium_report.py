#!/usr/bin/env python3
"""Equilibrium structure report: best responses, epsilon-Nash verdicts and
the no-pure-equilibrium certificate for the entangled game.

Usage:
    python3 scripts/equilibrium_report.py [--starts 32] [--samples 200] [--seed 0]
"""

from __future__ import annotations

import argparse
import sys
import time

from quantum_monty import search, strategies
from quantum_monty.game import ENTANGLED, UNENTANGLED
from quantum_monty.strategies import MixedStrategy, Preset


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--starts", type=int, default=32)
    parser.add_argument("--samples", type=int, default=200,
                        help="random profiles for the certificate")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    ident = MixedStrategy.singleton(Preset("identity"))
    mix = strategies.uniform_shuffle_mixture()

    br = search.best_response_bob(UNENTANGLED, ident,
                                  starts=args.starts, seed=args.seed)
    print(f"unentangled: Bob best response vs identity = {br.value:.6f} "
          f"(branch gamma={br.gamma_branch:.4f}, {br.evaluations} evals)")

    rep = search.verify_epsilon_nash(UNENTANGLED, ident, ident, 0.0,
                                     starts=args.starts, seed=args.seed)
    print(f"unentangled identity/switch profile: {rep.verdict} "
          f"(gains bob={rep.bob_gain:.2e}, alice={rep.alice_gain:.2e})")

    rep = search.verify_epsilon_nash(ENTANGLED, mix, mix, 0.0,
                                     starts=args.starts, seed=args.seed)
    print(f"entangled uniform-shuffle mixture: {rep.verdict} "
          f"(gains bob={rep.bob_gain:.2e}, alice={rep.alice_gain:.2e})")

    cert = search.no_pure_nash_certificate(samples=args.samples, seed=args.seed)
    print(f"no-pure-equilibrium certificate: {cert.failures} failures "
          f"out of {args.samples} random pure profiles "
          f"-> {'PASS' if cert.passed else 'FAIL'}")

    print(f"done in {time.perf_counter() - t0:.1f}s")
    return 0 if cert.passed else 1


if __name__ == "__main__":
    sys.exit(main())
