import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglekit import quad_inv
from tanglekit.errors import BadRowError, DimensionError, IdentityViolatedError
from tanglekit.fonts import font_arrays4
from tanglekit.monogamy import catalog
from tanglekit.qstate import (
    LocalUnitary,
    apply_local_unitary,
    make_pure,
    one_tangle,
    permute_qubits,
    random_state,
)

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_one_tangle_identity(seed):
    s = random_state(4, seed)
    lhs, rhs = quad_inv.one_tangle_identity(s)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_identity_violation_raises():
    with pytest.raises(IdentityViolatedError):
        quad_inv.one_tangle_identity(random_state(4, 0), atol=-1)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_j_sum_constraint(seed):
    s = random_state(4, seed)
    j12, j13, j14, betas = quad_inv.j_invariants(s)
    assert 4 * abs(j12 + j13 + j14) == pytest.approx(3 * quad_inv.tau0(s) ** 2, abs=1e-12)
    assert betas == pytest.approx(tuple(4 * abs(j) / 3 for j in (j12, j13, j14)))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_complementary_pairs_share_j(seed):
    s = random_state(4, seed)
    j = quad_inv.j_invariants(s)[:3]
    assert quad_inv.complementary_j(s) == pytest.approx(tuple(abs(x) for x in j), abs=1e-12)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_i48_is_permutation_invariant(seed):
    s = random_state(4, seed)
    ref = abs(quad_inv.i48(s))
    for perm in itertools.permutations((1, 2, 3, 4)):
        assert abs(quad_inv.i48(permute_qubits(s, perm))) == pytest.approx(ref, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(2, 4))
def test_invariants_ignore_unitaries_off_the_focus(seed, target):
    # every quantity below is invariant under a local unitary on qubits 2-4
    s = random_state(4, seed)
    t = apply_local_unitary(s, LocalUnitary.random(target, seed))
    a, b = quad_inv.quad_invariants(s), quad_inv.quad_invariants(t)
    assert a.tau0 == pytest.approx(b.tau0, abs=1e-12)
    assert a.genuine_four_tangle == pytest.approx(b.genuine_four_tangle, abs=1e-12)
    assert a.betas == pytest.approx(b.betas, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_focus_unitary_keeps_the_degree_eight_invariant(seed):
    s = random_state(4, seed)
    t = apply_local_unitary(s, LocalUnitary.random(1, seed))
    assert abs(quad_inv.i48(t)) == pytest.approx(abs(quad_inv.i48(s)), abs=1e-14)


def test_ghz4_values():
    q = quad_inv.quad_invariants(catalog("ghz4"))
    assert q.tau0 == pytest.approx(1)
    assert q.betas == pytest.approx((1 / 3,) * 3)
    assert q.genuine_four_tangle == pytest.approx(1)
    assert q.n48 == pytest.approx(1 / 6)
    assert q.degree4[2] == pytest.approx(1 / 24)


def test_phi_values():
    q = quad_inv.quad_invariants(catalog("phi"))
    assert q.betas == pytest.approx((2 / 3, 1 / 3, 1 / 3))
    assert q.tau0 == pytest.approx(0, abs=1e-15)
    assert q.genuine_four_tangle == pytest.approx(1)


def test_product_state_is_all_zero():
    q = quad_inv.quad_invariants(make_pure(np.eye(16)[5]))
    assert q.tau0 == 0 and q.genuine_four_tangle == 0 and q.betas == (0, 0, 0)


def test_rows_and_slices():
    s = random_state(4, 3)
    f = font_arrays4(s.amps)
    with pytest.raises(BadRowError):
        quad_inv.row_values(f, 7)
    # a sliced row on an unnormalized slice reproduces the three-qubit triple
    slice0 = quad_inv.slice_state(s, 4, 0)
    assert slice0.shape == (8,)
    total = sum(np.vdot(quad_inv.slice_state(s, 4, i), quad_inv.slice_state(s, 4, i)).real for i in (0, 1))
    assert total == pytest.approx(1)


def test_batch_matches_single():
    states = [random_state(4, k) for k in range(4)]
    b = quad_inv.batch_invariants(np.array([s.amps for s in states]))
    for k, s in enumerate(states):
        assert b["font_sum"][k] == pytest.approx(one_tangle(s), abs=1e-12)
        assert b["tau0"][k] == pytest.approx(quad_inv.tau0(s))
        assert b["i48"][k] == pytest.approx(quad_inv.i48(s))


def test_requires_four_qubits():
    with pytest.raises(DimensionError):
        quad_inv.quad_invariants(random_state(3, 0))
