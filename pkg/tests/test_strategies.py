import math

import numpy as np
import pytest

from quantum_monty import game, linalg, strategies
from quantum_monty.errors import NonUnitaryResolution
from quantum_monty.game import ENTANGLED, PayoffMode
from quantum_monty.strategies import (
    FAIR_H,
    IDENTITY,
    SHUFFLE_1,
    SHUFFLE_2,
    Conjugate,
    ConjugateShuffled,
    Matrix,
    MixedStrategy,
    Params,
    Preset,
    classical_strategy,
    mixed_payoff,
    resolve,
    uniform_shuffle_mixture,
)

HALF_PI = math.pi / 2


class TestResolve:
    def test_presets(self):
        assert np.array_equal(resolve(Preset("identity")), IDENTITY)
        assert np.array_equal(resolve(Preset("shuffle1")), SHUFFLE_1)
        assert np.array_equal(resolve(Preset("shuffle2")), SHUFFLE_2)
        assert np.array_equal(resolve(Preset("fair-h")), FAIR_H)

    def test_shuffle1_column_zero(self):
        # shuffle1 sends box 0 to box 2
        assert resolve(Preset("shuffle1"))[2, 0] == 1.0

    def test_conjugate_of_identity(self):
        assert np.array_equal(resolve(Conjugate(of=Preset("identity"))), IDENTITY)

    def test_conjugate_shuffled_composition(self):
        u = linalg.random_su3(seed=9)
        got = resolve(ConjugateShuffled(of=Matrix(u), which=2))
        assert np.allclose(got, SHUFFLE_2 @ u.conj())

    def test_params(self):
        theta = np.zeros(8)
        theta[2] = math.pi
        assert np.allclose(resolve(Params(tuple(theta))), np.diag([-1, -1, 1]),
                           atol=1e-12)

    def test_matrix_validation(self):
        with pytest.raises(NonUnitaryResolution):
            resolve(Matrix(np.ones((3, 3))))

    def test_unknown_preset(self):
        with pytest.raises(NonUnitaryResolution):
            resolve(Preset("nope"))

    def test_idempotent_on_matrices(self):
        u = linalg.random_su3(seed=10)
        assert np.array_equal(resolve(Matrix(u)), resolve(Matrix(u)))


class TestFairOperator:
    def test_abs_value_pattern(self):
        assert np.allclose(np.abs(np.diagonal(FAIR_H)), 1 / math.sqrt(2), atol=1e-12)
        off = FAIR_H[~np.eye(3, dtype=bool)]
        assert np.allclose(np.abs(off), 0.5, atol=1e-12)

    def test_special_unitary(self):
        assert linalg.unitarity_defect(FAIR_H) <= 1e-9
        assert linalg.det_defect(FAIR_H) <= 1e-9


class TestCounterIdentities:
    N = 200

    def test_bob_conjugate_counter_wins(self):
        rng = np.random.default_rng(20)
        for _ in range(self.N):
            a = linalg.random_su3(rng=rng)
            bob = game.expected_payoff(ENTANGLED, a, a.conj(), HALF_PI).bob
            assert bob == pytest.approx(1.0, abs=1e-9)

    def test_alice_conjugate_counter_beats_switchers(self):
        rng = np.random.default_rng(21)
        for _ in range(self.N):
            b = linalg.random_su3(rng=rng)
            bob = game.expected_payoff(ENTANGLED, b.conj(), b, 0.0).bob
            assert bob == pytest.approx(0.0, abs=1e-9)

    def test_alice_shuffled_counter_beats_stayers(self):
        rng = np.random.default_rng(22)
        for _ in range(self.N):
            b = linalg.random_su3(rng=rng)
            alice_op = resolve(ConjugateShuffled(of=Matrix(b), which=1))
            bob = game.expected_payoff(ENTANGLED, alice_op, b, HALF_PI).bob
            assert bob == pytest.approx(0.0, abs=1e-9)

    def test_alice_fair_counter_pins_half(self):
        rng = np.random.default_rng(23)
        for _ in range(self.N):
            b = linalg.random_su3(rng=rng)
            alice_op = FAIR_H @ b.conj()
            for gamma in (0.0, HALF_PI):
                bob = game.expected_payoff(ENTANGLED, alice_op, b, gamma).bob
                assert bob == pytest.approx(0.5, abs=1e-9)


class TestClassicalStrategy:
    def test_choice_zero_is_identity_on_basis_ket(self):
        psi = linalg.basis_ket(0, 0, 0)
        state = game.initial_state(psi)
        out = linalg.embed_alice(classical_strategy(0)) @ state
        assert np.allclose(out, psi)

    def test_pairwise_distinct(self):
        ops = [classical_strategy(c) for c in range(3)]
        assert not np.allclose(ops[0], ops[1])
        assert not np.allclose(ops[1], ops[2])
        assert not np.allclose(ops[0], ops[2])

    def test_special_unitary(self):
        for c in range(3):
            assert linalg.is_special_unitary(classical_strategy(c), 1e-12)

    def test_rejects_bad_choice(self):
        with pytest.raises(ValueError):
            classical_strategy(3)


class TestMixedStrategy:
    def test_weights_must_normalize(self):
        with pytest.raises(ValueError):
            MixedStrategy(components=((Preset("identity"), 0.7),))

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            MixedStrategy(components=((Preset("identity"), 1.5),
                                      (Preset("shuffle1"), -0.5)))

    def test_singleton_reduces_to_expected_payoff(self):
        rng = np.random.default_rng(30)
        a = linalg.random_su3(rng=rng)
        b = linalg.random_su3(rng=rng)
        direct = game.expected_payoff(ENTANGLED, a, b, 0.3).bob
        mixed = mixed_payoff(ENTANGLED,
                             MixedStrategy.singleton(Matrix(a)),
                             MixedStrategy.singleton(Matrix(b)), 0.3).bob
        assert mixed == pytest.approx(direct, abs=1e-15)

    def test_uniform_shuffle_equilibrium_payoffs(self):
        mix = uniform_shuffle_mixture()
        assert mixed_payoff(ENTANGLED, mix, mix, 0.0).bob \
            == pytest.approx(2 / 3, abs=1e-12)
        assert mixed_payoff(ENTANGLED, mix, mix, HALF_PI).bob \
            == pytest.approx(1 / 3, abs=1e-12)

    def test_multilinear_in_weights(self):
        # payoff of a two-point mixture interpolates the pure payoffs
        b = MixedStrategy.singleton(Preset("identity"))
        p_pure = [
            mixed_payoff(ENTANGLED, MixedStrategy.singleton(s), b, 0.0).bob
            for s in (Preset("identity"), Preset("shuffle1"))
        ]
        for w in (0.25, 0.5, 0.9):
            mix = MixedStrategy(components=((Preset("identity"), w),
                                            (Preset("shuffle1"), 1 - w)))
            got = mixed_payoff(ENTANGLED, mix, b, 0.0).bob
            assert got == pytest.approx(w * p_pure[0] + (1 - w) * p_pure[1],
                                        abs=1e-12)

    def test_coherent_mode_propagates(self):
        mix = uniform_shuffle_mixture()
        res = mixed_payoff(game.UNENTANGLED, mix, mix, math.pi / 4,
                           PayoffMode.COHERENT_NORMALIZED)
        assert 0.0 <= res.bob <= 1.0
