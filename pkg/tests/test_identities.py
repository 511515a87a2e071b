import numpy as np
import pytest

from tanglekit import identities
from tanglekit.errors import DimensionError
from tanglekit.monogamy import catalog
from tanglekit.qstate import permute_qubits, random_state, random_states


def test_random_batch_passes():
    results = identities.check_random(200, seed=3)
    assert [r.name for r in results] == list(identities.TOLERANCES)
    assert all(r.passed for r in results)
    assert identities.first_failure(results) is None


def test_ghz4_residuals_vanish():
    for r in identities.check_state(catalog("ghz4")):
        assert r.max_residual < 1e-15


def test_permute_batch_matches_single_state():
    states = random_states(4, 3, 1)
    amps = np.array([s.amps for s in states])
    out = identities.permute_batch(amps, (2, 4, 1, 3))
    for k, s in enumerate(states):
        assert np.allclose(out[k], permute_qubits(s, (2, 4, 1, 3)).amps)


def test_failure_is_reported():
    r = identities.CheckResult("j_sum", 1e-3, 1e-9)
    assert not r.passed
    assert r.line().startswith("FAIL")
    assert identities.first_failure([identities.CheckResult("a", 0, 1), r]) is r


def test_rejects_three_qubit_states():
    with pytest.raises(DimensionError):
        identities.run_checks([random_state(3, 0)])
