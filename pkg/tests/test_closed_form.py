import math

import numpy as np
import pytest

from quantum_monty import closed_form, game, linalg
from quantum_monty.game import ENTANGLED, UNENTANGLED, PayoffMode
from quantum_monty.strategies import FAIR_H, IDENTITY, SHUFFLE_1

HALF_PI = math.pi / 2


class TestUnentangledClosedForm:
    def test_identity_profile(self):
        for gamma in np.linspace(0, HALF_PI, 9):
            want = (2 / 3) * math.cos(gamma) ** 2 + (1 / 3) * math.sin(gamma) ** 2
            got = closed_form.payoff_unentangled_closed(IDENTITY, IDENTITY, gamma)
            assert got == pytest.approx(want, abs=1e-12)

    def test_flat_in_lone_quantum_strategy(self):
        rng = np.random.default_rng(40)
        for _ in range(50):
            u = linalg.random_su3(rng=rng)
            gamma = rng.uniform(0, HALF_PI)
            want = closed_form.payoff_unentangled_closed(IDENTITY, IDENTITY, gamma)
            assert closed_form.payoff_unentangled_closed(u, IDENTITY, gamma) \
                == pytest.approx(want, abs=1e-9)
            assert closed_form.payoff_unentangled_closed(IDENTITY, u, gamma) \
                == pytest.approx(want, abs=1e-9)

    def test_shuffle_bob_switching(self):
        got = closed_form.payoff_unentangled_closed(IDENTITY, SHUFFLE_1, 0.0)
        assert got == pytest.approx(2 / 3, abs=1e-12)

    def test_bounded(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            u = linalg.random_su3(rng=rng)
            v = linalg.random_su3(rng=rng)
            p = closed_form.payoff_unentangled_closed(u, v, rng.uniform(0, HALF_PI))
            assert -1e-12 <= p <= 1 + 1e-12


class TestEntangledClosedForm:
    def test_fair_operator_half(self):
        for gamma in (0.0, 0.3, HALF_PI):
            got = closed_form.payoff_entangled_closed(FAIR_H, IDENTITY, gamma)
            assert got == pytest.approx(0.5, abs=1e-12)

    def test_identity_stay_wins(self):
        got = closed_form.payoff_entangled_closed(IDENTITY, IDENTITY, HALF_PI)
        assert got == pytest.approx(1.0, abs=1e-12)

    def test_conjugate_counter_unit_payoff(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            a = linalg.random_su3(rng=rng)
            got = closed_form.payoff_entangled_closed(a, a.conj(), HALF_PI)
            assert got == pytest.approx(1.0, abs=1e-9)


class TestOracleMatch:
    def test_random_profiles_both_regimes(self):
        rng = np.random.default_rng(43)
        for regime in (UNENTANGLED, ENTANGLED):
            for _ in range(200):
                a = linalg.random_su3(rng=rng)
                b = linalg.random_su3(rng=rng)
                gamma = rng.uniform(0, HALF_PI)
                report = closed_form.oracle_match(regime, a, b, gamma)
                assert report.passed, report

    def test_coherent_interior_gamma_mismatches_by_design(self):
        # documented interference discrepancy: the coherent mode keeps the
        # cross terms the closed forms drop.  gamma = pi/4 is a degenerate
        # probe (unitarity forces both paths to exactly 1/2 there for every
        # profile), so generic interior gammas are sampled instead.
        ident = closed_form.oracle_match(
            UNENTANGLED, IDENTITY, IDENTITY, math.pi / 4,
            mode=PayoffMode.COHERENT_NORMALIZED)
        assert ident.passed  # the coincidental agreement, pinned down
        rng = np.random.default_rng(44)
        worst = 0.0
        for regime in (UNENTANGLED, ENTANGLED):
            for _ in range(20):
                a = linalg.random_su3(rng=rng)
                b = linalg.random_su3(rng=rng)
                gamma = rng.uniform(0.2, 1.3)
                report = closed_form.oracle_match(
                    regime, a, b, gamma,
                    mode=PayoffMode.COHERENT_NORMALIZED)
                worst = max(worst, report.diff)
        assert worst > 1e-3

    def test_no_closed_form_for_custom(self):
        with pytest.raises(ValueError):
            closed_form.closed_form_payoff("custom", IDENTITY, IDENTITY, 0.0)
