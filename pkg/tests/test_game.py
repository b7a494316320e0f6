import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quantum_monty import game, linalg
from quantum_monty.errors import (
    BadCustomState,
    GammaOutOfRange,
    IncoherentBranchOnly,
    NonUnitaryStrategy,
)
from quantum_monty.game import ENTANGLED, UNENTANGLED, PayoffMode
from quantum_monty.strategies import IDENTITY, SHUFFLE_1

HALF_PI = math.pi / 2


class TestOpenOperator:
    def test_hand_examples(self):
        perm = game.open_permutation()
        # |0 0 0> -> |1 0 0>: tie-break branch, m = (0 + 0 + 1) mod 3
        assert perm[linalg.ket_index(0, 0, 0)] == linalg.ket_index(1, 0, 0)
        # |0 1 2> -> |0 1 2>: distinct branch, third box is 0, n = 0
        assert perm[linalg.ket_index(0, 1, 2)] == linalg.ket_index(0, 1, 2)
        # |2 1 1> -> |1 1 1>: m = (1 + 2 + 1) mod 3
        assert perm[linalg.ket_index(2, 1, 1)] == linalg.ket_index(1, 1, 1)

    def test_bijective_unit_weight(self):
        op = game.build_open_operator()
        assert linalg.permutation_table(op) is not None
        assert linalg.unitarity_defect(op) <= 1e-12

    def test_marks_box_anticorrelated_with_distinct_choices(self):
        perm = game.open_permutation()
        for j in range(3):
            for k in range(3):
                if j == k:
                    continue
                out = perm[linalg.ket_index(0, j, k)]
                o, b, a = linalg.index_to_ket(out)
                assert (b, a) == (j, k)
                assert o not in (j, k)


class TestSwitchOperator:
    def test_hand_examples(self):
        perm = game.switch_permutation()
        # |2 0 1> -> |2 1 1>: Bob moves to the box neither held nor open
        assert perm[linalg.ket_index(2, 0, 1)] == linalg.ket_index(2, 1, 1)
        # |2 2 0> -> itself: unitarity filler term
        assert perm[linalg.ket_index(2, 2, 0)] == linalg.ket_index(2, 2, 0)

    def test_involution(self):
        op = game.build_switch_operator()
        assert np.allclose(op @ op, np.eye(27), atol=1e-15)
        assert linalg.permutation_table(op) is not None


class TestInitialStates:
    def test_unentangled_uniform(self):
        psi = game.initial_state(UNENTANGLED)
        assert np.allclose(psi[:9], 1.0 / 3.0)
        assert np.allclose(psi[9:], 0.0)
        assert linalg.norm2(psi) == pytest.approx(1.0, abs=1e-12)

    def test_entangled_diagonal(self):
        psi = game.initial_state(ENTANGLED)
        for j in range(3):
            assert psi[linalg.ket_index(0, j, j)] == pytest.approx(1 / math.sqrt(3))
        assert linalg.norm2(psi) == pytest.approx(1.0, abs=1e-12)

    def test_custom_basis_ket(self):
        psi = game.initial_state(linalg.basis_ket(0, 1, 2))
        assert np.allclose(psi, linalg.basis_ket(0, 1, 2))

    def test_custom_rejects_bad_norm(self):
        with pytest.raises(BadCustomState):
            game.initial_state(0.5 * linalg.basis_ket(0, 1, 2))

    def test_custom_rejects_open_box_support(self):
        with pytest.raises(BadCustomState):
            game.initial_state(linalg.basis_ket(1, 0, 0))

    def test_unknown_regime(self):
        with pytest.raises(BadCustomState):
            game.initial_state("nonsense")


class TestFinalState:
    def test_gamma_zero_modes_agree(self):
        for mode in PayoffMode:
            psi, n2 = game.final_state(UNENTANGLED, IDENTITY, IDENTITY, 0.0, mode)
            assert n2 == pytest.approx(1.0, abs=1e-12)
            # switch branch wins on the 6 components |i k k>, i != k
            for i in range(3):
                for k in range(3):
                    if i != k:
                        amp = psi[linalg.ket_index(i, k, k)]
                        assert amp == pytest.approx(1.0 / 3.0, abs=1e-12)

    def test_entangled_stay_branch(self):
        psi, n2 = game.final_state(ENTANGLED, IDENTITY, IDENTITY, HALF_PI)
        assert n2 == pytest.approx(1.0, abs=1e-12)
        for j in range(3):
            amp = psi[linalg.ket_index((j + 1) % 3, j, j)]
            assert amp == pytest.approx(1 / math.sqrt(3), abs=1e-12)

    def test_incoherent_interior_gamma_rejected(self):
        with pytest.raises(IncoherentBranchOnly):
            game.final_state(UNENTANGLED, IDENTITY, IDENTITY, 0.3)

    def test_gamma_out_of_range(self):
        with pytest.raises(GammaOutOfRange):
            game.final_state(UNENTANGLED, IDENTITY, IDENTITY, 2.0)

    def test_non_unitary_strategy(self):
        with pytest.raises(NonUnitaryStrategy):
            game.final_state(UNENTANGLED, 2 * IDENTITY, IDENTITY, 0.0)


class TestExpectedPayoff:
    def test_classical_values(self):
        assert game.expected_payoff(UNENTANGLED, IDENTITY, IDENTITY, 0.0).bob \
            == pytest.approx(2 / 3, abs=1e-12)
        assert game.expected_payoff(UNENTANGLED, IDENTITY, IDENTITY, HALF_PI).bob \
            == pytest.approx(1 / 3, abs=1e-12)

    def test_coherent_interference_value(self):
        # frozen from an independent 27-amplitude expansion: the cross terms
        # double three winning and three losing amplitudes, total norm 5/3,
        # winning weight 15/18 of it
        res = game.expected_payoff(UNENTANGLED, IDENTITY, IDENTITY,
                                   math.pi / 4, PayoffMode.COHERENT_NORMALIZED)
        assert res.bob == pytest.approx(0.5, abs=1e-12)
        assert res.final_norm2 == pytest.approx(5.0 / 3.0, abs=1e-12)

    def test_entangled_stay_wins(self):
        res = game.expected_payoff(ENTANGLED, IDENTITY, IDENTITY, HALF_PI)
        assert res.bob == pytest.approx(1.0, abs=1e-12)

    def test_pure_branches_agree_across_modes(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            a = linalg.random_su3(rng=rng)
            b = linalg.random_su3(rng=rng)
            for regime in (UNENTANGLED, ENTANGLED):
                for gamma in (0.0, HALF_PI):
                    inc = game.expected_payoff(regime, a, b, gamma).bob
                    coh = game.expected_payoff(
                        regime, a, b, gamma, PayoffMode.COHERENT_NORMALIZED).bob
                    assert inc == pytest.approx(coh, abs=1e-12)

    def test_affine_in_cos2(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            a = linalg.random_su3(rng=rng)
            b = linalg.random_su3(rng=rng)
            gamma = rng.uniform(0.0, HALF_PI)
            regime = ENTANGLED if rng.random() < 0.5 else UNENTANGLED
            p0 = game.expected_payoff(regime, a, b, 0.0).bob
            p1 = game.expected_payoff(regime, a, b, HALF_PI).bob
            want = math.cos(gamma) ** 2 * p0 + math.sin(gamma) ** 2 * p1
            got = game.expected_payoff(regime, a, b, gamma).bob
            assert got == pytest.approx(want, abs=1e-12)

    def test_payoffs_sum_to_one(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            a = linalg.random_su3(rng=rng)
            b = linalg.random_su3(rng=rng)
            res = game.expected_payoff(ENTANGLED, a, b, rng.uniform(0, HALF_PI))
            assert res.bob + res.alice == pytest.approx(1.0, abs=1e-12)

    def test_unitarity_row_sum_identity(self):
        # any unitary has total squared output-amplitude mass 3 when fed the
        # uniform superposition on each box
        rng = np.random.default_rng(8)
        for _ in range(50):
            u = linalg.random_su3(rng=rng)
            total = sum(abs(np.sum(u[j, :])) ** 2 for j in range(3))
            assert total == pytest.approx(3.0, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1), st.floats(0.0, HALF_PI))
def test_payoff_bounds_property(seed, gamma):
    rng = np.random.default_rng(seed)
    a = linalg.random_su3(rng=rng)
    b = linalg.random_su3(rng=rng)
    for regime in (UNENTANGLED, ENTANGLED):
        res = game.expected_payoff(regime, a, b, gamma)
        assert 0.0 <= res.bob <= 1.0
        assert res.final_norm2 > 0.0
