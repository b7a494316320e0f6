"""Acceptance gate: every published claim reproduced at full fidelity.

The whole suite is executed once per session through
quantum_monty.verification.run_all (the same entry point the CLI `verify`
command uses) and each claim is asserted individually so a failure names
the exact criterion that broke.
"""

import pytest

from quantum_monty import verification

CLAIM_IDS = [name for name, _ in verification.CLAIMS]


@pytest.fixture(scope="session")
def claim_results():
    results = {r.claim_id: r for r in verification.run_all(seed=0, quick=False)}
    assert set(results) == set(CLAIM_IDS)
    return results


def test_exactly_eleven_claims():
    assert len(CLAIM_IDS) == 11
    assert len(set(CLAIM_IDS)) == 11


@pytest.mark.parametrize("claim_id", CLAIM_IDS)
def test_claim(claim_results, claim_id, capsys):
    r = claim_results[claim_id]
    status = "PASS" if r.passed else "FAIL"
    with capsys.disabled():
        print(f"\n{status}  {r.claim_id}: expected [{r.expected}] "
              f"computed [{r.computed}] tol={r.tolerance:g}")
    assert r.passed, (
        f"{r.claim_id}: {r.description}; expected [{r.expected}], "
        f"computed [{r.computed}], tolerance {r.tolerance:g}"
    )
