"""Negativity-font determinants for focus qubit 1.

Every font is a 2x2 determinant ``a[0,0,...]a[1,1,...] - a[1,0,...]a[0,1,...]``
where qubit 1 and qubit 2 (or another partner) are flipped together. The
helpers accept amplitude arrays with arbitrary leading batch axes so the
downstream invariants can be evaluated on many states at once.

Array layouts (all ``(..., 2, 2)``):

==========  ==========================================  =========
name        meaning                                      indices
==========  ==========================================  =========
``d34``     two-way, qubits 3 and 4 held fixed           [i3, i4]
``d24``     two-way, qubits 2 and 4 held fixed           [i2, i4]
``d23``     two-way, qubits 2 and 3 held fixed           [i2, i3]
``t4``      three-way, qubit 4 fixed, qubit 3 flipped    [i4, i3]
``t3``      three-way, qubit 3 fixed, qubit 4 flipped    [i3, i4]
``t2``      three-way, qubit 2 fixed, qubit 4 flipped    [i2, i4]
``q``       four-way                                     [i3, i4]
==========  ==========================================  =========

The three-way font ``t2[i2, i4]`` pairs qubit 1 with qubit 3, so its second
factor flips qubits 1, 3 and 4; ``t4``/``t3`` pair qubit 1 with qubit 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .qstate import PureState

FONT_NAMES4 = ("d34", "d24", "d23", "t4", "t3", "t2", "q")


def _as_tensor(amps, n):
    a = np.asarray(amps, dtype=complex)
    if a.shape[-1] != 2**n:
        raise DimensionError(f"expected trailing axis of length {2**n}")
    return a.reshape(a.shape[:-1] + (2,) * n)


def font_arrays4(amps):
    """All 28 four-qubit fonts as a dict of ``(..., 2, 2)`` arrays."""
    a = _as_tensor(amps, 4)
    a00, a11 = a[..., 0, 0, :, :], a[..., 1, 1, :, :]
    a10, a01 = a[..., 1, 0, :, :], a[..., 0, 1, :, :]
    flip3 = lambda x: x[..., ::-1, :]
    flip4 = lambda x: x[..., :, ::-1]

    d34 = a00 * a11 - a10 * a01
    # qubit 3 flipped in the second factor; stored as [i4, i3]
    t4 = np.swapaxes(a00 * flip3(a11) - a10 * flip3(a01), -1, -2)
    t3 = a00 * flip4(a11) - a10 * flip4(a01)
    q = a00 * flip3(flip4(a11)) - a10 * flip3(flip4(a01))

    # pairs (1,3): axes of the remaining tensor are (i2, i4)
    b00, b11 = a[..., 0, :, 0, :], a[..., 1, :, 1, :]
    b10, b01 = a[..., 1, :, 0, :], a[..., 0, :, 1, :]
    d24 = b00 * b11 - b10 * b01
    t2 = b00 * flip4(b11) - b10 * flip4(b01)

    # pairs (1,4): remaining axes (i2, i3)
    c00, c11 = a[..., 0, :, :, 0], a[..., 1, :, :, 1]
    c10, c01 = a[..., 1, :, :, 0], a[..., 0, :, :, 1]
    d23 = c00 * c11 - c10 * c01

    return dict(d34=d34, d24=d24, d23=d23, t4=t4, t3=t3, t2=t2, q=q)


def font_arrays3(amps):
    """The seven three-qubit fonts: ``d3[i3]``, ``d2[i2]``, ``t[i3]``."""
    a = _as_tensor(amps, 3)
    d3 = a[..., 0, 0, :] * a[..., 1, 1, :] - a[..., 1, 0, :] * a[..., 0, 1, :]
    d2 = a[..., 0, :, 0] * a[..., 1, :, 1] - a[..., 1, :, 0] * a[..., 0, :, 1]
    t = (
        a[..., 0, 0, :] * a[..., 1, 1, ::-1]
        - a[..., 1, 0, :] * a[..., 0, 1, ::-1]
    )
    return dict(d3=d3, d2=d2, t=t)


@dataclass(frozen=True, eq=False)
class FontSet4:
    """Fonts of a four-qubit state; see the module docstring for layouts."""

    d34: np.ndarray
    d24: np.ndarray
    d23: np.ndarray
    t4: np.ndarray
    t3: np.ndarray
    t2: np.ndarray
    q: np.ndarray

    def as_dict(self):
        return {k: getattr(self, k) for k in FONT_NAMES4}

    def two_way(self):
        return np.concatenate([self.d34.ravel(), self.d24.ravel(), self.d23.ravel()])

    def three_way(self):
        return np.concatenate([self.t4.ravel(), self.t3.ravel(), self.t2.ravel()])

    def four_way(self):
        return self.q.ravel()


@dataclass(frozen=True, eq=False)
class FontSet3:
    d3: np.ndarray
    d2: np.ndarray
    t: np.ndarray

    def as_dict(self):
        return dict(d3=self.d3, d2=self.d2, t=self.t)


def _require(state, n):
    if state.n != n:
        raise DimensionError(f"expected a {n}-qubit state, got n={state.n}")


def fonts4(state: PureState) -> FontSet4:
    _require(state, 4)
    return FontSet4(**font_arrays4(state.amps))


def fonts3(state: PureState) -> FontSet3:
    _require(state, 3)
    return FontSet3(**font_arrays3(state.amps))


def one_tangle_font_sum(fonts: FontSet4) -> float:
    """Four times the summed squared moduli of all 28 fonts.

    Equals the one-tangle of qubit 1 for the state the fonts came from.
    """
    return float(4 * sum(np.sum(np.abs(v) ** 2) for v in fonts.as_dict().values()))


def one_tangle_font_sum3(fonts: FontSet3) -> float:
    return float(4 * sum(np.sum(np.abs(v) ** 2) for v in fonts.as_dict().values()))
