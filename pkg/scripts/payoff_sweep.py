#!/usr/bin/env python3
"""Sweep the switch parameter and tabulate Bob's expected payoff for a few
canonical strategy profiles in both regimes.

Usage:
    python3 scripts/payoff_sweep.py [--points 13] [--csv out.csv]
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from quantum_monty import game, strategies
from quantum_monty.game import ENTANGLED, UNENTANGLED

PROFILES = [
    ("identity vs identity", strategies.IDENTITY, strategies.IDENTITY),
    ("identity vs shuffle1", strategies.IDENTITY, strategies.SHUFFLE_1),
    ("fair-h vs identity", strategies.FAIR_H, strategies.IDENTITY),
    ("shuffle1 vs conj-counter", strategies.SHUFFLE_1,
     strategies.SHUFFLE_1.conj()),
]


def sweep(points: int):
    gammas = np.linspace(0.0, math.pi / 2.0, points)
    rows = []
    for regime in (UNENTANGLED, ENTANGLED):
        for label, alice, bob in PROFILES:
            for gamma in gammas:
                p = game.expected_payoff(regime, alice, bob, gamma).bob
                rows.append((regime, label, float(gamma), p))
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=13,
                        help="gamma grid points per profile")
    parser.add_argument("--csv", default=None, help="write rows to this file")
    args = parser.parse_args(argv)

    rows = sweep(args.points)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["regime", "profile", "gamma", "bob_payoff"])
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv}")
        return 0

    current = None
    for regime, label, gamma, p in rows:
        if (regime, label) != current:
            current = (regime, label)
            print(f"\n[{regime}] {label}")
        print(f"  gamma={gamma:6.4f}  bob={p:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
