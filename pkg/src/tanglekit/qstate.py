"""Pure states, density matrices, local unitaries and the one-tangle.

Qubits are labelled 1..n. Amplitude index is ``sum_m i_m * 2**(n - m)``, so
qubit 1 is the most significant bit and ``amps.reshape((2,) * n)`` puts
qubit m on axis m - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    BadLengthError,
    BadPermutationError,
    BadSubsetError,
    DimensionError,
    NotUnitaryError,
    StateFileError,
    ZeroStateError,
)

SUPPORTED_QUBITS = (2, 3, 4)
ZERO_NORM = 1e-14


def _frozen(arr):
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over ``n`` qubits.

    ``norm`` keeps the norm of the vector the state was built from, which is
    handy when a family is written down unnormalized.
    """

    n: int
    amps: np.ndarray
    norm: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "amps", _frozen(self.amps))

    @property
    def tensor(self):
        return self.amps.reshape((2,) * self.n)

    def __repr__(self):
        nz = [
            f"{k:0{self.n}b}:{complex(a):.4g}"
            for k, a in enumerate(self.amps)
            if abs(a) > 1e-12
        ]
        return f"PureState(n={self.n}, {', '.join(nz)})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Reduced state over ``n`` qubits (kept qubits in ascending order)."""

    n: int
    mat: np.ndarray
    qubits: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "mat", _frozen(self.mat))
        if not self.qubits:
            object.__setattr__(self, "qubits", tuple(range(1, self.n + 1)))

    def eigh(self):
        return np.linalg.eigh(self.mat)

    def rank(self, tol=1e-12):
        return int(np.sum(np.linalg.eigvalsh(self.mat) > tol))

    @classmethod
    def from_state(cls, state: PureState):
        return cls(state.n, np.outer(state.amps, state.amps.conj()))


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """Single-qubit unitary acting on qubit ``target`` (1-based)."""

    matrix: np.ndarray
    target: int

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.shape != (2, 2):
            raise NotUnitaryError(f"expected 2x2 matrix, got shape {m.shape}")
        if not np.allclose(m.conj().T @ m, np.eye(2), rtol=0, atol=1e-12):
            raise NotUnitaryError("matrix is not unitary within 1e-12")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_x(cls, x, target):
        """The one-parameter family ``[[1, -x*], [x, 1]] / sqrt(1 + |x|^2)``."""
        x = complex(x)
        m = np.array([[1, -x.conjugate()], [x, 1]]) / np.sqrt(1 + abs(x) ** 2)
        return cls(m, target)

    @classmethod
    def random(cls, target, seed=None):
        rng = np.random.default_rng(seed)
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        q, r = np.linalg.qr(z)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        return cls(q, target)

    @classmethod
    def identity(cls, target):
        return cls(np.eye(2), target)

    def compose(self, other: "LocalUnitary"):
        """``self @ other`` (apply ``other`` first); targets must match."""
        if other.target != self.target:
            raise ValueError("cannot compose unitaries on different qubits")
        return LocalUnitary(self.matrix @ other.matrix, self.target)


def make_pure(amps, n=None):
    """Build a normalized :class:`PureState` from raw amplitudes.

    Parameters
    ----------
    amps : array_like
        Complex amplitudes, length ``2**n``.
    n : int, optional
        Qubit count; inferred from the length when omitted.
    """
    v = np.asarray(amps, dtype=complex).ravel()
    if n is None:
        n = int(round(np.log2(max(len(v), 1))))
    if n not in SUPPORTED_QUBITS:
        raise DimensionError(f"n must be one of {SUPPORTED_QUBITS}, got {n}")
    if len(v) != 2**n:
        raise BadLengthError(f"expected {2**n} amplitudes for n={n}, got {len(v)}")
    norm = float(np.linalg.norm(v))
    if norm < ZERO_NORM:
        raise ZeroStateError("amplitude vector has zero norm")
    return PureState(n, v / norm, norm)


def basis_state(bits: str):
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1
    return make_pure(v)


def _check_qubit(q, n):
    if not (isinstance(q, (int, np.integer)) and 1 <= q <= n):
        raise DimensionError(f"qubit index {q!r} outside 1..{n}")


def partial_trace(state: PureState, keep) -> DensityMatrix:
    """Reduced density matrix on the qubits in ``keep`` (ascending order)."""
    keep = sorted(set(keep))
    if not keep or len(keep) >= state.n:
        raise BadSubsetError("keep must be a nonempty proper subset of the qubits")
    for q in keep:
        if not (isinstance(q, (int, np.integer)) and 1 <= q <= state.n):
            raise BadSubsetError(f"qubit {q!r} outside 1..{state.n}")
    rest = [q for q in range(1, state.n + 1) if q not in keep]
    t = np.transpose(state.tensor, [q - 1 for q in keep + rest])
    m = t.reshape(2 ** len(keep), -1)
    return DensityMatrix(len(keep), m @ m.conj().T, tuple(keep))


def apply_local_unitary(state: PureState, u: LocalUnitary) -> PureState:
    _check_qubit(u.target, state.n)
    ax = u.target - 1
    t = np.tensordot(u.matrix, state.tensor, axes=([1], [ax]))
    t = np.moveaxis(t, 0, ax)
    return PureState(state.n, t.reshape(-1), state.norm)


def apply_local_unitaries(state: PureState, unitaries) -> PureState:
    for u in unitaries:
        state = apply_local_unitary(state, u)
    return state


def permute_qubits(state: PureState, perm) -> PureState:
    """Relabel qubits: qubit ``k`` of the input becomes qubit ``perm[k-1]``."""
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, state.n + 1)):
        raise BadPermutationError(f"{perm} is not a permutation of 1..{state.n}")
    inverse = [0] * state.n
    for old, new in enumerate(perm):
        inverse[new - 1] = old
    t = np.transpose(state.tensor, inverse)
    return PureState(state.n, t.reshape(-1), state.norm)


def focus_permutation(n: int, focus: int):
    """Permutation that moves ``focus`` to qubit 1, the others keeping their order."""
    _check_qubit(focus, n)
    others = [q for q in range(1, n + 1) if q != focus]
    perm = [0] * n
    perm[focus - 1] = 1
    for new, old in enumerate(others, start=2):
        perm[old - 1] = new
    return perm


def focus_first(state: PureState, focus: int) -> PureState:
    """Move ``focus`` to qubit 1, keeping the others in ascending order."""
    return permute_qubits(state, focus_permutation(state.n, focus))


def det2(m):
    """Determinant of a 2x2 (possibly batched) Hermitian matrix, as a real."""
    m = np.asarray(m)
    return (m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]).real


def one_tangle(state: PureState, focus: int = 1) -> float:
    """Four times the determinant of the single-qubit marginal of ``focus``."""
    _check_qubit(focus, state.n)
    rho = partial_trace(state, {focus}).mat
    return float(4 * det2(rho))


def random_state(n: int, seed=None) -> PureState:
    """Haar-random pure state: normalized vector of complex Gaussians."""
    if n not in SUPPORTED_QUBITS:
        raise DimensionError(f"n must be one of {SUPPORTED_QUBITS}, got {n}")
    rng = np.random.default_rng(seed)
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return make_pure(v, n)


def random_states(n: int, count: int, seed=None):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(count, 2**n)) + 1j * rng.normal(size=(count, 2**n))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return [PureState(n, row) for row in v]


# --- state files -----------------------------------------------------------

def parse_state(text: str) -> PureState:
    """Parse the ``<bitstring> <re> <im>`` text format.

    Lines starting with ``#`` and blank lines are skipped; bitstrings that do
    not appear get amplitude zero. ``n`` is the bitstring length.
    """
    entries = {}
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise StateFileError("expected '<bitstring> <re> <im>'", lineno)
        bits, re_s, im_s = parts
        if not bits or set(bits) - {"0", "1"}:
            raise StateFileError(f"bad bitstring {bits!r}", lineno)
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise StateFileError(
                f"bitstring length {len(bits)} differs from {width}", lineno
            )
        try:
            amp = complex(float(re_s), float(im_s))
        except ValueError:
            raise StateFileError(f"bad number in {line!r}", lineno) from None
        if not np.isfinite(amp):
            raise StateFileError("non-finite amplitude", lineno)
        if bits in entries:
            raise StateFileError(f"duplicate bitstring {bits}", lineno)
        entries[bits] = amp
    if width is None:
        raise StateFileError("no amplitudes found")
    if width not in SUPPORTED_QUBITS:
        raise DimensionError(f"{width}-qubit states are not supported")
    v = np.zeros(2**width, dtype=complex)
    for bits, amp in entries.items():
        v[int(bits, 2)] = amp
    try:
        return make_pure(v, width)
    except ZeroStateError as exc:
        raise StateFileError(str(exc)) from None


def load_state(path) -> PureState:
    return parse_state(Path(path).read_text(encoding="utf-8"))


def format_state(state: PureState, comment=None) -> str:
    lines = [f"# {c}" for c in (comment or "").splitlines()]
    for k, a in enumerate(state.amps):
        if a != 0:
            lines.append(f"{k:0{state.n}b} {a.real:.17g} {a.imag:.17g}")
    return "\n".join(lines) + "\n"
