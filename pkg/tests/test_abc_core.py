import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglekit import abc_core
from tanglekit.abc_core import InvariantTriple
from tanglekit.errors import DegenerateCError, DegenerateDenominatorError

finite = st.floats(-3, 3, allow_nan=False)
cplx = st.builds(complex, finite, finite)
triples = st.builds(InvariantTriple, cplx, cplx, cplx)


@settings(max_examples=200, deadline=None)
@given(triples, cplx)
def test_invariants_survive_the_spectator_rotation(t, x):
    u = abc_core.transform(t, x)
    assert abc_core.i1(u) == pytest.approx(abc_core.i1(t), abs=1e-10)
    assert abc_core.i2(u) == pytest.approx(abc_core.i2(t), abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(triples, st.floats(0, np.pi / 2), st.floats(0, 2 * np.pi))
def test_angle_form_matches_x_form(t, theta, phi):
    if theta > 1.5:
        return
    x = np.exp(1j * phi) * np.tan(theta)
    a = abc_core.transform(t, x)
    b = abc_core.transform_angle(t, theta, phi)
    assert np.allclose(tuple(a), tuple(b), atol=1e-9)


def test_transform_at_zero_is_identity():
    t = InvariantTriple(1 + 2j, -0.5j, 3)
    assert tuple(abc_core.transform(t, 0)) == pytest.approx(tuple(t))


def test_transform_arrays_broadcasts():
    A, B, C = np.ones(3), np.zeros(3), np.ones(3)
    x = np.array([0, 1j, 2])
    out = abc_core.transform_arrays(A, B, C, x)
    for k in range(3):
        ref = abc_core.transform(InvariantTriple(1, 0, 1), x[k])
        assert np.allclose([o[k] for o in out], tuple(ref))


@settings(max_examples=200, deadline=None)
@given(triples)
def test_x0_root_zeroes_a_on_both_branches(t):
    if abs(t.C) < 1e-3:
        return
    r1, r2 = abc_core.x0_root(t)
    assert abs(r1) <= abs(r2)
    for r in (r1, r2):
        u = abc_core.transform(t, r)
        assert abs(u.A) < 1e-9 * max(1, abs(r) ** 2)


def test_x0_root_degenerate_cases():
    assert abc_core.x0_root(InvariantTriple(0, 1, 0)) == (0j, 0j)
    with pytest.raises(DegenerateCError):
        abc_core.x0_root(InvariantTriple(1, 1, 0))


@settings(max_examples=200, deadline=None)
@given(triples)
def test_zero_b_root_zeroes_b(t):
    if abs(t.B) < 1e-3:
        return
    try:
        roots = abc_core.zero_b_root(t)
    except DegenerateDenominatorError:
        roots = (abc_core.zero_b_direct(t),)
    for r in roots:
        assert abs(abc_core.transform(t, r).B) < 1e-8 * max(1, abs(r) ** 2)


def test_zero_b_direct_handles_quotient_zero_over_zero():
    t = InvariantTriple(0, 0.5, 0)
    with pytest.raises(DegenerateDenominatorError):
        abc_core.zero_b_root(t)
    x = abc_core.zero_b_direct(t)
    assert abs(abc_core.transform(t, x).B) < 1e-12


def test_tau_upper_and_reduced_sum():
    t = InvariantTriple(0.2, 0.4 + 0.1j, -0.3j)
    bound = abc_core.tau_upper(t)
    assert bound == pytest.approx(4 * abc_core.i1(t) - 2 * abc_core.i2(t))
    # on the A = 0 branch the reduced sum reaches the bound
    x, _ = abc_core.x0_root(t)
    assert abc_core.reduced_sum(t, x) == pytest.approx(np.sqrt(bound), abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(triples)
def test_half_i2_never_exceeds_i1(t):
    assert abc_core.i1(t) - 0.5 * abc_core.i2(t) >= -1e-10
