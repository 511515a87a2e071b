import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglekit import tri_inv
from tanglekit.errors import DimensionError
from tanglekit.qstate import (
    LocalUnitary,
    apply_local_unitaries,
    apply_local_unitary,
    one_tangle,
    permute_qubits,
    random_state,
)

seeds = st.integers(0, 2**32 - 1)


def test_ghz3_and_w3_values(ghz3, w3):
    g = tri_inv.ckw_report(ghz3)
    assert g.three_tangle == pytest.approx(1)
    assert g.tau12 == pytest.approx(0, abs=1e-12)
    assert g.ckw_residual == pytest.approx(0, abs=1e-12)
    w = tri_inv.ckw_report(w3)
    assert w.three_tangle == pytest.approx(0, abs=1e-12)
    assert w.tau12 == pytest.approx(2 / 3)
    assert w.tau13 == pytest.approx(2 / 3)
    assert w.one_tangle == pytest.approx(8 / 9)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ckw_identity_and_saturation(seed):
    s = random_state(3, seed)
    r = tri_inv.ckw_report(s)
    assert r.ckw_residual == pytest.approx(0, abs=1e-10)
    assert 4 * r.n_a3 == pytest.approx(r.tau12**2 + r.three_tangle / 2, abs=1e-10)
    assert 4 * r.n_a2 == pytest.approx(r.tau13**2 + r.three_tangle / 2, abs=1e-10)
    assert r.one_tangle == pytest.approx(4 * (r.n_a2 + r.n_a3), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_both_pair_forms_give_the_same_invariant(seed):
    s = random_state(3, seed)
    assert tri_inv.i34(s, "12") == pytest.approx(tri_inv.i34(s, "13"), abs=1e-12)


def test_pair13_is_pair12_after_swapping_two_and_three():
    s = random_state(3, 4)
    swapped = permute_qubits(s, (1, 3, 2))
    a = tri_inv.table1_triple(s, "13")
    b = tri_inv.table1_triple(swapped, "12")
    assert np.allclose(tuple(a), tuple(b))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_t_identity_with_dc(seed):
    s = random_state(3, seed)
    t = tri_inv.t_value(s, "12")
    assert 4 * abs(t) ** 2 == pytest.approx(
        tri_inv.three_tangle_pure(s) - tri_inv.dc_distance(s, "12"), abs=1e-10)


def test_dc_is_not_sign_definite(w3):
    assert tri_inv.dc_distance(w3, "12") == pytest.approx(0, abs=1e-12)
    dcs = [tri_inv.dc_distance(random_state(3, k), "12") for k in range(50)]
    assert min(dcs) < -1e-3 and max(dcs) > 1e-3


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_j0_forms_agree(seed):
    s = random_state(3, seed)
    assert tri_inv.j0(s) == pytest.approx(
        tri_inv.j0_from_triple(tri_inv.table1_triple(s)), abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_canonical_form(seed):
    s = random_state(3, seed)
    c = tri_inv.canonical_form(s, seed=seed)
    allowed = {int(b, 2) for b in tri_inv.CANONICAL_PATTERN}
    nz = {k for k in range(8) if abs(c.state.amps[k]) > 1e-10}
    assert nz <= allowed
    assert np.allclose(apply_local_unitaries(s, c.unitaries).amps, c.state.amps, atol=1e-10)
    tau3 = tri_inv.three_tangle_pure(s)
    assert 4 * abs(tri_inv.t_value(c.state, "12")) ** 2 == pytest.approx(tau3, abs=1e-8)
    assert 4 * abs(tri_inv.t_value(c.state, "13")) ** 2 == pytest.approx(tau3, abs=1e-8)


def test_canonical_form_flags_ghz(ghz3):
    c = tri_inv.canonical_form(ghz3)
    assert c.degenerate
    assert tri_inv.three_tangle_pure(c.state) == pytest.approx(1)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_zero_t12_unitary(seed):
    s = random_state(3, seed)
    u = tri_inv.zero_t12_unitary(s, seed)
    t = apply_local_unitary(s, u)
    assert abs(tri_inv.t_value(t, "12")) < 1e-9
    assert tri_inv.three_tangle_pure(t) == pytest.approx(tri_inv.three_tangle_pure(s), abs=1e-10)


def test_zero_t12_unitary_on_ghz(ghz3):
    t = apply_local_unitary(ghz3, tri_inv.zero_t12_unitary(ghz3))
    assert abs(tri_inv.t_value(t, "12")) < 1e-9
    assert tri_inv.three_tangle_pure(t) == pytest.approx(1)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 3))
def test_local_unitaries_leave_tangles_alone(seed, target):
    s = random_state(3, seed)
    t = apply_local_unitary(s, LocalUnitary.random(target, seed))
    a, b = tri_inv.ckw_report(s), tri_inv.ckw_report(t)
    for name in ("three_tangle", "tau12", "tau13", "one_tangle"):
        assert getattr(a, name) == pytest.approx(getattr(b, name), abs=1e-10)


def test_rejects_wrong_width_and_pair():
    with pytest.raises(DimensionError):
        tri_inv.ckw_report(random_state(4, 0))
    with pytest.raises(ValueError):
        tri_inv.table1_triple(random_state(3, 0), "23")


def test_one_tangle_of_report_matches_qstate():
    s = random_state(3, 11)
    assert tri_inv.ckw_report(s).one_tangle == pytest.approx(one_tangle(s))
