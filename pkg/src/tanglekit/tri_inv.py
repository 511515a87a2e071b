"""Three-qubit pure-state invariants, tangles and the canonical form.

Pair labels follow the focus qubit 1:

* ``"12"``: triple ``(D_(A3)0, D000 + D001, D_(A3)1)``, spectator qubit 3.
* ``"13"``: triple ``(D_(A2)0, D000 - D001, D_(A2)1)``, spectator qubit 2.

The middle entry of each triple is the pair's ``T`` value (``T12`` or
``T13``) and the discriminant of either triple is the degree-4 invariant
whose modulus, times four, is the three-tangle.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from . import abc_core
from .abc_core import InvariantTriple
from .errors import (
    DegenerateCError,
    DegenerateDenominatorError,
    DimensionError,
)
from .fonts import font_arrays3
from .qstate import (
    LocalUnitary,
    PureState,
    apply_local_unitaries,
    apply_local_unitary,
    one_tangle,
    partial_trace,
)
from .roof import concurrence

PAIRS = ("12", "13")
SPECTATOR = {"12": 3, "13": 2}
MAX_RETRIES = 8


def _require3(state):
    if state.n != 3:
        raise DimensionError(f"expected a 3-qubit state, got n={state.n}")


def _check_pair(pair):
    pair = str(pair).replace("A", "").replace("_", "")
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {PAIRS}, got {pair!r}")
    return pair


def triple_from_amps(amps, pair="12"):
    """Triple(s) for a pair from raw (possibly batched) amplitudes."""
    f = font_arrays3(amps)
    if pair == "12":
        return f["d3"][..., 0], f["t"][..., 0] + f["t"][..., 1], f["d3"][..., 1]
    return f["d2"][..., 0], f["t"][..., 0] - f["t"][..., 1], f["d2"][..., 1]


def i34_from_amps(amps):
    A, B, C = triple_from_amps(amps, "12")
    return B**2 - 4 * A * C


def table1_triple(state: PureState, pair="12") -> InvariantTriple:
    _require3(state)
    A, B, C = triple_from_amps(state.amps, _check_pair(pair))
    return InvariantTriple(complex(A), complex(B), complex(C))


def i34(state: PureState, pair="12") -> complex:
    """Degree-4 invariant evaluated from either pair's triple."""
    return complex(table1_triple(state, pair).discriminant)


def three_tangle_pure(state: PureState) -> float:
    return 4 * abs(i34(state, "12"))


def t_value(state: PureState, pair="12") -> complex:
    return table1_triple(state, pair).B


def two_tangle(state: PureState, pair="12") -> float:
    """Concurrence of the two-qubit marginal for the pair."""
    _require3(state)
    keep = (1, 2) if _check_pair(pair) == "12" else (1, 3)
    return concurrence(partial_trace(state, keep))


def dc_distance(state: PureState, pair="12") -> float:
    """Distance from the canonical form: ``8|A|^2 + 8|C|^2 - 2 tau_pair^2``."""
    t = table1_triple(state, pair)
    tau = two_tangle(state, pair)
    return float(8 * abs(t.A) ** 2 + 8 * abs(t.C) ** 2 - 2 * tau**2)


def j0(state: PureState, pair="12") -> float:
    """``tau_pair^2 (tau_pair^2 + tau_3)`` from the concurrence."""
    tau2 = two_tangle(state, pair) ** 2
    return float(tau2 * (tau2 + three_tangle_pure(state)))


def j0_from_triple(t: InvariantTriple) -> float:
    """Same quantity from the pair triple alone: ``16 I1^2 - 4 I2^2``."""
    return max(0.0, 16 * abc_core.i1(t) ** 2 - 4 * abc_core.i2(t) ** 2)


@dataclass(frozen=True)
class TriReport:
    """Invariants and tangles of a three-qubit pure state, focus qubit 1.

    ``n_a3`` comes from the pair-12 triple (fonts with qubit 3 held fixed)
    and ``n_a2`` from the pair-13 triple.
    """

    one_tangle: float
    n_a2: float
    n_a3: float
    i34: complex
    three_tangle: float
    t12: complex
    t13: complex
    tau12: float
    tau13: float
    dc: float
    j0: float

    @property
    def ckw_residual(self):
        """One-tangle minus squared two-tangles minus the three-tangle."""
        return self.one_tangle - self.tau12**2 - self.tau13**2 - self.three_tangle

    def as_dict(self):
        return asdict(self)


def ckw_report(state: PureState) -> TriReport:
    _require3(state)
    t12 = table1_triple(state, "12")
    t13 = table1_triple(state, "13")
    tau3 = 4 * abs(t12.discriminant)
    tau12 = two_tangle(state, "12")
    tau13 = two_tangle(state, "13")
    return TriReport(
        one_tangle=one_tangle(state, 1),
        n_a2=abc_core.i1(t13),
        n_a3=abc_core.i1(t12),
        i34=complex(t12.discriminant),
        three_tangle=tau3,
        t12=t12.B,
        t13=t13.B,
        tau12=tau12,
        tau13=tau13,
        dc=float(8 * abs(t12.A) ** 2 + 8 * abs(t12.C) ** 2 - 2 * tau12**2),
        j0=float(tau12**2 * (tau12**2 + tau3)),
    )


class CanonicalForm(NamedTuple):
    state: PureState
    unitaries: tuple
    degenerate: bool


def canonical_form(state: PureState, seed=0) -> CanonicalForm:
    """Rotate to the five-term pattern 000, 001, 101, 011, 111.

    Qubit 3 is rotated first so that the font ``D_(A3)0`` vanishes; the
    qubit-3 = 0 slice then has rank one and an SVD gives the rotations of
    qubits 1 and 2 that bring it to ``|00>``. ``degenerate`` is set when
    the pair-12 triple has ``A = C = 0`` and no qubit-3 rotation is needed.
    """
    _require3(state)
    rng = np.random.default_rng(seed)
    pre = LocalUnitary.identity(3)
    work = state
    for _ in range(MAX_RETRIES + 1):
        t = table1_triple(work, "12")
        degenerate = abs(t.A) < abc_core.SMALL and abs(t.C) < abc_core.SMALL
        try:
            x, _ = abc_core.x0_root(t)
            break
        except DegenerateCError:
            pre = LocalUnitary.random(3, rng).compose(pre)
            work = apply_local_unitary(state, pre)
    else:
        raise DegenerateCError("could not find a usable qubit-3 rotation")

    u3 = LocalUnitary.from_x(x, 3).compose(pre)
    b = apply_local_unitary(state, u3).tensor
    u, _, vh = np.linalg.svd(b[:, :, 0])
    u1 = LocalUnitary(u.conj().T, 1)
    u2 = LocalUnitary(vh.conj(), 2)
    unitaries = (u1, u2, u3)
    return CanonicalForm(apply_local_unitaries(state, unitaries), unitaries, degenerate)


CANONICAL_PATTERN = ("000", "001", "101", "011", "111")


def zero_t12_unitary(state: PureState, seed=0) -> LocalUnitary:
    """Qubit-3 unitary that makes ``T12`` vanish (smaller-``|x|`` branch).

    When the quotient formula is 0/0 (GHZ-like triples with ``A = C = 0``
    stay that way under every qubit-3 rotation) the condition is solved
    directly in angle form instead.
    """
    _require3(state)
    rng = np.random.default_rng(seed)
    pre = LocalUnitary.identity(3)
    work = state
    for _ in range(MAX_RETRIES + 1):
        t = table1_triple(work, "12")
        try:
            x, _ = abc_core.zero_b_root(t)
        except DegenerateDenominatorError:
            x = abc_core.zero_b_direct(t)
        if abs(abc_core.transform(t, x).B) < 1e-10:
            return LocalUnitary.from_x(x, 3).compose(pre)
        pre = LocalUnitary.random(3, rng).compose(pre)
        work = apply_local_unitary(state, pre)
    raise DegenerateDenominatorError(
        f"denominator stayed below 1e-12 after {MAX_RETRIES} random rotations"
    )
