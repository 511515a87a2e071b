"""scikit-learn transformer that maps four-qubit amplitude rows to tangle features."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import monogamy, quad_inv
from .errors import BadLengthError, ZeroStateError
from .identities import one_tangle_batch, permute_batch
from .qstate import focus_permutation, make_pure, partial_trace
from .roof import RoofOptions, concurrence

INVARIANT_FEATURES = (
    "one_tangle", "tau0", "genuine_four_tangle",
    "beta_12", "beta_13", "beta_14",
    "two_tangle_sq_12", "two_tangle_sq_13", "two_tangle_sq_14",
)
ROOF_FEATURES = (
    "three_tangle_roof_123", "three_tangle_roof_124", "three_tangle_roof_134",
    "new_two_tangle_12", "new_two_tangle_13", "new_two_tangle_14",
    "delta", "delta1", "delta2", "delta_lower_bound",
)


def check_states(X):
    """Validate an ``(m, 16)`` complex array, or ``(m, 32)`` real/imag halves,
    and return normalized complex rows."""
    X = np.asarray(X)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2:
        raise BadLengthError(f"expected a 2-D array of amplitudes, got shape {X.shape}")
    if X.shape[1] == 32 and not np.iscomplexobj(X):
        X = X[:, :16] + 1j * X[:, 16:]
    if X.shape[1] != 16:
        raise BadLengthError(f"expected 16 amplitudes per row, got {X.shape[1]}")
    X = X.astype(complex)
    if not np.all(np.isfinite(X)):
        raise ValueError("amplitudes must be finite")
    norms = np.linalg.norm(X, axis=1)
    if np.any(norms < 1e-12):
        raise ZeroStateError(f"row {int(np.argmin(norms))} has zero norm")
    return X / norms[:, None]


class TangleTransformer(TransformerMixin, BaseEstimator):
    """Tangle features of four-qubit pure states.

    Parameters
    ----------
    focus : int
        Qubit whose entanglement with the rest is decomposed.
    roofs : bool
        Also compute the mixed-state roofs and the residuals. Costs roughly
        a second per row.
    restarts, seed : int
        Roof search settings, see :class:`tanglekit.roof.RoofOptions`.
    spectator : {"fixed", "free"}
        New two-tangle variant.

    Nothing is learned; ``fit`` only validates the input and records the
    feature names.
    """

    def __init__(self, focus=1, roofs=False, restarts=8, seed=0, spectator="fixed"):
        self.focus = focus
        self.roofs = roofs
        self.restarts = restarts
        self.seed = seed
        self.spectator = spectator

    def fit(self, X, y=None):
        if self.focus not in (1, 2, 3, 4):
            raise ValueError(f"focus must be 1..4, got {self.focus!r}")
        X = check_states(X)
        self.n_features_in_ = 16
        names = INVARIANT_FEATURES + (ROOF_FEATURES if self.roofs else ())
        self.feature_names_out_ = np.array(names, dtype=object)
        return self

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()

    def _focused(self, X):
        if self.focus == 1:
            return X
        return permute_batch(X, focus_permutation(4, self.focus))

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        X = self._focused(check_states(X))
        core = quad_inv.batch_invariants(X)
        betas = 4 * np.abs(core["j"]) / 3
        cols = [one_tangle_batch(X), core["tau0"], 16 * np.abs(12 * core["i48"]),
                betas[:, 0], betas[:, 1], betas[:, 2]]
        two = np.empty((len(X), 3))
        for k, row in enumerate(X):
            s = make_pure(row, 4)
            for j, p in enumerate((2, 3, 4)):
                two[k, j] = concurrence(partial_trace(s, (1, p))) ** 2
        cols += [two[:, 0], two[:, 1], two[:, 2]]
        out = np.column_stack(cols)
        if not self.roofs:
            return out
        opts = RoofOptions(restarts=self.restarts, seed=self.seed)
        extra = np.empty((len(X), len(ROOF_FEATURES)))
        for k, row in enumerate(X):
            rep = monogamy.report(make_pure(row, 4), 1, opts, spectator=self.spectator)
            new = rep.new_two_tangles["residual"]
            lb = rep.delta_lower_bound
            extra[k] = [rep.three_tangles["123"], rep.three_tangles["124"], rep.three_tangles["134"],
                        new[2], new[3], new[4], rep.delta, rep.delta1, rep.delta2,
                        np.nan if lb is None else lb]
        return np.hstack([out, extra])
