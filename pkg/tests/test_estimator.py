import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from tanglekit.errors import BadLengthError, ZeroStateError
from tanglekit.estimator import INVARIANT_FEATURES, ROOF_FEATURES, TangleTransformer, check_states
from tanglekit.monogamy import catalog, report
from tanglekit.qstate import random_states
from tanglekit.roof import RoofOptions


@pytest.fixture
def X():
    return np.array([s.amps for s in random_states(4, 5, 0)])


def test_invariant_features_match_report(X):
    F = TangleTransformer(focus=2).fit_transform(X)
    assert F.shape == (5, len(INVARIANT_FEATURES))
    r = report(random_states(4, 5, 0)[1], focus=2, opts=RoofOptions(restarts=2))
    expected = [r.one_tangle, r.tau0, r.genuine_four_tangle, *r.betas, *r.two_tangles.values()]
    assert np.allclose(F[1], expected, atol=1e-12)


def test_roof_features():
    psi = catalog("psi").amps[None]
    t = TangleTransformer(roofs=True, restarts=2).fit(psi)
    F = t.transform(psi)
    names = list(t.get_feature_names_out())
    assert names == list(INVARIANT_FEATURES + ROOF_FEATURES)
    assert F[0, names.index("delta")] == pytest.approx(0, abs=1e-8)
    assert np.isnan(F[0, names.index("delta_lower_bound")])


def test_real_imaginary_halves_and_scaling(X):
    halves = np.hstack([X.real, X.imag])
    t = TangleTransformer().fit(X)
    assert np.allclose(t.transform(halves), t.transform(3 * X))


def test_params_and_clone():
    t = TangleTransformer(focus=3, restarts=5)
    assert t.get_params()["focus"] == 3
    assert clone(t).get_params() == t.get_params()
    t.set_params(focus=4)
    assert t.focus == 4


def test_pipeline(X):
    out = make_pipeline(TangleTransformer(), StandardScaler()).fit_transform(X)
    assert out.shape == (5, len(INVARIANT_FEATURES))


def test_validation(X):
    with pytest.raises(BadLengthError):
        check_states(np.ones((2, 8)))
    with pytest.raises(ZeroStateError):
        check_states(np.zeros((1, 16)))
    with pytest.raises(ValueError):
        check_states(np.full((1, 16), np.nan))
    with pytest.raises(ValueError):
        TangleTransformer(focus=0).fit(X)


def test_transform_before_fit(X):
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        TangleTransformer().transform(X)
