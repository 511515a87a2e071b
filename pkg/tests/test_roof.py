import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglekit import roof, tri_inv
from tanglekit.errors import RankTooLargeError
from tanglekit.monogamy import family_g2ia, family_reference
from tanglekit.qstate import make_pure, partial_trace, random_state, random_states

FAST = roof.RoofOptions(restarts=4)
seeds = st.integers(0, 2**32 - 1)


def mixture(states, weights):
    return sum(w * np.outer(s.amps, s.amps.conj()) for s, w in zip(states, weights))


def test_concurrence_of_bell_and_product():
    bell = make_pure([1, 0, 0, 1])
    assert roof.concurrence(partial_trace(make_pure([1, 0, 0, 0, 0, 0, 0, 1]), (1, 2))) == pytest.approx(0, abs=1e-12)
    assert roof.concurrence(np.outer(bell.amps, bell.amps.conj())) == pytest.approx(1)


def test_concurrence_of_werner_state():
    bell = make_pure([0, 1, -1, 0])
    for p in (0.2, 0.5, 0.9):
        rho = p * np.outer(bell.amps, bell.amps.conj()) + (1 - p) * np.eye(4) / 4
        assert roof.concurrence(rho) == pytest.approx(max(0, (3 * p - 1) / 2), abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_pure_projectors_reproduce_pure_values(seed):
    s = random_state(3, seed)
    rho = np.outer(s.amps, s.amps.conj())
    assert roof.three_tangle_roof(rho, FAST) == pytest.approx(tri_inv.three_tangle_pure(s), abs=1e-9)
    assert roof.new_two_tangle_roof(rho, "12") == pytest.approx(2 * abs(tri_inv.t_value(s, "12")), abs=1e-9)
    assert roof.new_two_tangle_roof(rho, "13") == pytest.approx(2 * abs(tri_inv.t_value(s, "13")), abs=1e-9)


def test_support_reconstructs_rho():
    rho = partial_trace(random_state(4, 2), (1, 2, 3)).mat
    M = roof.support(rho)
    assert np.allclose(M.T @ M.conj(), rho)


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 4))
def test_givens_isometry_has_orthonormal_columns(seed, extra):
    r = 2
    L = r + extra
    p = np.random.default_rng(seed).uniform(-np.pi, np.pi, roof.n_params(L, r))
    U = roof.givens_isometry(p, L, r)[0]
    assert U.shape == (L, r)
    assert np.allclose(U.conj().T @ U, np.eye(r))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_ensembles_reconstruct_the_state(seed):
    rho = partial_trace(random_state(4, seed), (1, 2, 4)).mat
    r = roof.support(rho).shape[0]
    p = np.random.default_rng(seed).uniform(-np.pi, np.pi, roof.n_params(5, r))
    ens = roof.ensemble_from_isometry(rho, p, 5)
    assert ens.residual() < 1e-12
    assert ens.weights.sum() == pytest.approx(1)


def test_rank_too_large_for_length():
    with pytest.raises(RankTooLargeError):
        roof.RoofOptions(length=1).resolved_length(2)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_family_marginals_match_closed_forms(a):
    s = family_g2ia(a)
    ref = family_reference(a).three_tangle
    for triple in ((1, 2, 3), (1, 2, 4), (1, 3, 4)):
        rho = partial_trace(s, triple)
        est = roof.estimate_three_tangle_roof(rho, FAST)
        assert est.value == pytest.approx(ref, abs=1e-8)
        assert est.ensemble.residual() < 1e-10
        for pair in ("12", "13"):
            assert roof.new_two_tangle_roof(rho, pair) < 1e-10


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_hull_is_below_explicit_decompositions(seed):
    rho = partial_trace(random_state(4, seed), (1, 2, 3)).mat
    value, ens = roof.three_tangle_hull(rho)
    assert ens.residual() < 1e-10
    # the hull reports the minimized sum of p_i sqrt(tau_3), before squaring
    assert float(ens.weights @ roof.sqrt_tau3(ens.states)) == pytest.approx(value, abs=1e-12)
    rng = np.random.default_rng(seed)
    for _ in range(5):
        p = rng.uniform(-np.pi, np.pi, roof.n_params(4, 2))
        e = roof.ensemble_from_isometry(rho, p, 4)
        assert value <= float(e.weights @ roof.sqrt_tau3(e.states)) + 1e-9


def test_mixture_of_ghz_and_w_stays_below_its_decomposition(ghz3, w3):
    rho = mixture([ghz3, w3], [0.7, 0.3])
    est = roof.estimate_three_tangle_roof(rho, FAST, candidates=[[(0.7, ghz3), (0.3, w3)]])
    assert est.value <= 0.49 + 1e-12
    # the known zero-three-tangle region for GHZ/W mixtures ends near p = 0.627
    low = mixture([ghz3, w3], [0.5, 0.5])
    assert roof.three_tangle_roof(low, FAST) < 1e-8


def test_candidate_is_used_when_better(ghz3, w3):
    rho = mixture([ghz3, w3], [0.7, 0.3])
    plain = roof.estimate_three_tangle_roof(rho, FAST)
    with_c = roof.estimate_three_tangle_roof(rho, FAST, candidates=[[(0.7, ghz3), (0.3, w3)]])
    assert with_c.value <= plain.value + 1e-15


def test_new_two_tangle_fixed_versus_free():
    psi = make_pure(np.eye(16)[[0b0000, 0b0101, 0b1000, 0b1110]].sum(axis=0))
    rho = partial_trace(psi, (1, 2, 3))
    assert roof.new_two_tangle_roof(rho, "12") == pytest.approx(0.5, abs=1e-12)
    assert roof.new_two_tangle_roof(rho, "12", spectator="free") < 1e-9


def test_spectator_mode_is_checked():
    rho = partial_trace(random_state(4, 0), (1, 2, 3))
    with pytest.raises(ValueError):
        roof.new_two_tangle_roof(rho, "12", spectator="both")


def test_fixed_seed_is_bit_identical():
    states = random_states(3, 3, 9)
    rho = mixture(states, [0.5, 0.3, 0.2])
    a = roof.estimate_three_tangle_roof(rho, FAST)
    b = roof.estimate_three_tangle_roof(rho, FAST)
    assert a.value == b.value


def test_estimate_labels_are_upper_bounds():
    rho = partial_trace(random_state(4, 1), (1, 2, 3))
    est = roof.estimate_three_tangle_roof(rho, FAST)
    assert est.label == roof.UPPER_BOUND_LABEL
    assert float(est) == est.value


def test_pattern_search_finds_a_quadratic_minimum():
    res = roof.pattern_search(lambda x: np.sum((x - 0.3) ** 2, axis=-1), np.zeros((2, 3)), tol=1e-10)
    assert res.fun < 1e-12
    assert np.allclose(res.x, 0.3, atol=1e-5)


def test_fixed_roof_invariant_off_the_spectator():
    from tanglekit.qstate import LocalUnitary, apply_local_unitary

    s = random_state(4, 21)
    ref = roof.new_two_tangle_roof(partial_trace(s, (1, 2, 3)), "12")
    for q in (1, 2, 4):
        t = apply_local_unitary(s, LocalUnitary.random(q, 7))
        assert roof.new_two_tangle_roof(partial_trace(t, (1, 2, 3)), "12") == pytest.approx(ref, abs=1e-12)
    t = apply_local_unitary(s, LocalUnitary.random(3, 7))
    free = roof.new_two_tangle_roof(partial_trace(t, (1, 2, 3)), "12", spectator="free")
    assert free <= roof.new_two_tangle_roof(partial_trace(t, (1, 2, 3)), "12") + 1e-12
