"""Four-qubit pure-state invariants built from negativity fonts (focus qubit 1).

The six rows of the invariant table are stored as data. Each slot of a row
is a signed sum of font entries; ``"i"`` inside an index stands for the row
parameter ``i``:

====  =========  =====================  ===================================
row   pair       invariant              spectators
====  =========  =====================  ===================================
1     1-2        ``N_A4^(i)``           slice at qubit 4 = i
2     1-2        ``M_A3``               qubits 3 and 4 combined
3     1-3        ``N_A2^(i)``           slice at qubit 2 = i
4     1-3        ``M_A4``
5     1-4        ``N_A3^(i)``           slice at qubit 3 = i
6     1-4        ``M_A2``
====  =========  =====================  ===================================

The discriminants of the M rows are the "new" three-qubit invariants
``I3_new(A4)``, ``I3_new(A2)`` and ``I3_new(A3)`` respectively.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .abc_core import InvariantTriple
from .errors import BadRowError, DimensionError, IdentityViolatedError
from .fonts import font_arrays4
from .qstate import PureState, one_tangle, permute_qubits

# slot = tuple of (sign, font name, index); index entries may be "i"
ROWS = {
    1: (
        ((1, "d34", (0, "i")),),
        ((1, "t4", ("i", 0)), (1, "t4", ("i", 1))),
        ((1, "d34", (1, "i")),),
    ),
    2: (
        ((1, "t3", (0, 0)), (1, "t3", (0, 1))),
        ((1, "q", (0, 0)), (1, "q", (1, 0)), (1, "q", (0, 1)), (1, "q", (1, 1))),
        ((1, "t3", (1, 0)), (1, "t3", (1, 1))),
    ),
    3: (
        ((1, "d24", ("i", 0)),),
        ((1, "t2", ("i", 0)), (1, "t2", ("i", 1))),
        ((1, "d24", ("i", 1)),),
    ),
    4: (
        ((1, "t4", (0, 0)), (-1, "t4", (0, 1))),
        ((1, "q", (0, 0)), (1, "q", (0, 1)), (-1, "q", (1, 0)), (-1, "q", (1, 1))),
        ((1, "t4", (1, 0)), (-1, "t4", (1, 1))),
    ),
    5: (
        ((1, "d23", (0, "i")),),
        ((1, "t3", ("i", 0)), (-1, "t3", ("i", 1))),
        ((1, "d23", (1, "i")),),
    ),
    6: (
        ((1, "t2", (0, 0)), (-1, "t2", (0, 1))),
        ((1, "q", (0, 0)), (1, "q", (1, 0)), (-1, "q", (0, 1)), (-1, "q", (1, 1))),
        ((1, "t2", (1, 0)), (-1, "t2", (1, 1))),
    ),
}
SLICED_ROWS = (1, 3, 5)
# J for pair (1, q): (M row, N row)
J_ROWS = {2: (2, 1), 3: (4, 3), 4: (6, 5)}


def _require4(state):
    if state.n != 4:
        raise DimensionError(f"expected a 4-qubit state, got n={state.n}")


def _slot(fonts, slot, i):
    total = 0
    for sign, name, idx in slot:
        idx = tuple(i if k == "i" else k for k in idx)
        total = total + sign * fonts[name][(...,) + idx]
    return total


def row_values(fonts, row, i=None):
    """``(A, B, C)`` arrays of a row from precomputed (batched) fonts."""
    if row not in ROWS:
        raise BadRowError(f"row must be 1..6, got {row!r}")
    if row in SLICED_ROWS:
        if i not in (0, 1):
            raise BadRowError(f"row {row} needs i in {{0, 1}}, got {i!r}")
    return tuple(_slot(fonts, s, i) for s in ROWS[row])


def table2_triple(state: PureState, row: int, i=None) -> InvariantTriple:
    _require4(state)
    A, B, C = row_values(font_arrays4(state.amps), row, i)
    return InvariantTriple(complex(A), complex(B), complex(C))


def _i42(fonts):
    q = fonts["q"]
    return q[..., 0, 0] - q[..., 1, 0] - q[..., 0, 1] + q[..., 1, 1]


def i42(state: PureState) -> complex:
    _require4(state)
    return complex(_i42(font_arrays4(state.amps)))


def tau0(state: PureState) -> float:
    return 2 * abs(i42(state))


def _i1(A, B, C):
    return np.abs(A) ** 2 + 0.5 * np.abs(B) ** 2 + np.abs(C) ** 2


def _disc(A, B, C):
    return B * B - 4 * A * C


def identity_rhs(fonts):
    """``4 sum N + 2 sum M + |I42|^2`` for (batched) fonts."""
    total = 0
    for row in SLICED_ROWS:
        for i in (0, 1):
            total = total + 4 * _i1(*row_values(fonts, row, i))
    for row in (2, 4, 6):
        total = total + 2 * _i1(*row_values(fonts, row))
    return total + np.abs(_i42(fonts)) ** 2


def one_tangle_identity(state: PureState, atol=1e-8):
    """``(one_tangle, 4 sum N + 2 sum M + tau0^2 / 4)``.

    Raises
    ------
    IdentityViolatedError
        If the two sides differ by more than ``atol``; the identity is exact
        algebra, so this signals a bug rather than a state property.
    """
    _require4(state)
    lhs = one_tangle(state, 1)
    rhs = float(identity_rhs(font_arrays4(state.amps)))
    if abs(lhs - rhs) > atol:
        raise IdentityViolatedError(f"one-tangle identity off by {abs(lhs - rhs):.3e}")
    return lhs, rhs


def _j_values(fonts):
    out = []
    for q in (2, 3, 4):
        m_row, n_row = J_ROWS[q]
        Am, Bm, Cm = row_values(fonts, m_row)
        A0, B0, C0 = row_values(fonts, n_row, 0)
        A1, B1, C1 = row_values(fonts, n_row, 1)
        out.append(_disc(Am, Bm, Cm) - 4 * B0 * B1 + 8 * (A0 * C1 + A1 * C0))
    return out


def j_invariants(state: PureState):
    """``(J12, J13, J14, betas)`` with ``beta = 4|J| / 3``."""
    _require4(state)
    js = [complex(j) for j in _j_values(font_arrays4(state.amps))]
    betas = tuple(4 * abs(j) / 3 for j in js)
    return js[0], js[1], js[2], betas


def _degree4_parts(fonts):
    A0, B0, C0 = row_values(fonts, 3, 0)
    A1, B1, C1 = row_values(fonts, 3, 1)
    Am, Bm, Cm = row_values(fonts, 4)
    i40 = B0 * B0 - 4 * A0 * C0
    i04 = B1 * B1 - 4 * A1 * C1
    # the mixed terms pair A of one triple with C of another
    i31 = 0.5 * B0 * Bm - (C0 * Am + A0 * Cm)
    i13 = 0.5 * B1 * Bm - (C1 * Am + A1 * Cm)
    i22 = Bm * Bm / 6 - (2 / 3) * Am * Cm + B0 * B1 / 3 - (2 / 3) * (C0 * A1 + A0 * C1)
    return i40, i31, i22, i13, i04


def degree4_set(state: PureState):
    """The five degree-4 invariants of the triple 1, 3, 4, ordered by ``m``:
    ``(I^{4,0}, I^{3,1}, I^{2,2}, I^{1,3}, I^{0,4})``."""
    _require4(state)
    return tuple(complex(v) for v in _degree4_parts(font_arrays4(state.amps)))


def _i48(fonts):
    i40, i31, i22, i13, i04 = _degree4_parts(fonts)
    return 3 * i22 * i22 - 4 * i31 * i13 + i40 * i04


def i48(state: PureState) -> complex:
    _require4(state)
    return complex(_i48(font_arrays4(state.amps)))


def genuine_four_tangle(state: PureState) -> float:
    return 16 * abs(12 * i48(state))


def n48(state: PureState) -> float:
    """``16 N_{4,8}``, the weighted sum of squared moduli of the five set values."""
    i40, i31, i22, i13, i04 = degree4_set(state)
    return 16 * (
        6 * abs(i22) ** 2 + 4 * abs(i31) ** 2 + 4 * abs(i13) ** 2
        + abs(i40) ** 2 + abs(i04) ** 2
    )


def slice_state(state: PureState, qubit: int, value: int):
    """Unnormalized three-qubit amplitudes with ``qubit`` fixed to ``value``.

    The remaining qubits keep their relative order.
    """
    _require4(state)
    return np.take(state.tensor, value, axis=qubit - 1).reshape(-1)


@dataclass(frozen=True)
class QuadInvariants:
    """All invariants of a four-qubit pure state for focus qubit 1.

    ``n`` maps ``(q, i)`` to ``N_Aq^(i)`` and ``m``/``i3_new`` map ``q`` to
    ``M_Aq`` and ``I3_new(Aq)``. ``degree4`` is ordered as in
    :func:`degree4_set`.
    """

    n: dict
    m: dict
    i3_new: dict
    i42: complex
    tau0: float
    j: tuple
    betas: tuple
    degree4: tuple
    n48: float
    i48: complex
    genuine_four_tangle: float

    def as_dict(self):
        d = asdict(self)
        d["n"] = {f"A{q}^{i}": v for (q, i), v in self.n.items()}
        d["m"] = {f"A{q}": v for q, v in self.m.items()}
        d["i3_new"] = {f"A{q}": v for q, v in self.i3_new.items()}
        return d


# N/M rows keyed by the spectator-qubit label of the invariant
N_ROW = {4: 1, 2: 3, 3: 5}
M_ROW = {3: 2, 4: 4, 2: 6}
# the new three-invariant heads: I3_new(A4) is the row-2 discriminant, ...
I3_NEW_ROW = {4: 2, 2: 4, 3: 6}


def quad_invariants(state: PureState) -> QuadInvariants:
    _require4(state)
    f = font_arrays4(state.amps)
    n = {(q, i): float(_i1(*row_values(f, r, i))) for q, r in N_ROW.items() for i in (0, 1)}
    m = {q: float(_i1(*row_values(f, r))) for q, r in M_ROW.items()}
    i3n = {q: complex(_disc(*row_values(f, r))) for q, r in I3_NEW_ROW.items()}
    js = tuple(complex(v) for v in _j_values(f))
    b = tuple(complex(v) for v in _degree4_parts(f))
    v48 = complex(_i48(f))
    return QuadInvariants(
        n=n,
        m=m,
        i3_new=i3n,
        i42=complex(_i42(f)),
        tau0=2 * abs(complex(_i42(f))),
        j=js,
        betas=tuple(4 * abs(v) / 3 for v in js),
        degree4=b,
        n48=16 * (6 * abs(b[2]) ** 2 + 4 * abs(b[1]) ** 2 + 4 * abs(b[3]) ** 2
                  + abs(b[0]) ** 2 + abs(b[4]) ** 2),
        i48=v48,
        genuine_four_tangle=16 * abs(12 * v48),
    )


# --- batched helpers used by the identity suite --------------------------------

def batch_invariants(amps):
    """Vectorized core quantities for an ``(m, 16)`` array of states.

    Returns a dict with ``font_sum``, ``identity_rhs``, ``tau0``, ``j``
    (``(m, 3)``) and ``i48``.
    """
    f = font_arrays4(amps)
    font_sum = 4 * sum(np.sum(np.abs(v) ** 2, axis=(-2, -1)) for v in f.values())
    return dict(
        font_sum=font_sum,
        identity_rhs=identity_rhs(f),
        tau0=2 * np.abs(_i42(f)),
        j=np.stack(_j_values(f), axis=-1),
        i48=_i48(f),
    )


def pair_partner_permutation(q):
    """A qubit relabelling that turns pair (1, q) into its complementary pair.

    ``|J^{1q}|`` of the permuted state equals ``|J^{rs}|`` of the original,
    where ``{r, s}`` is the complement of ``{1, q}``.
    """
    r, s = [k for k in (2, 3, 4) if k != q]
    perm = [0] * 4
    # original qubit r -> 1, s -> q, 1 -> r, q -> s
    perm[r - 1], perm[s - 1], perm[0], perm[q - 1] = 1, q, r, s
    return perm


def complementary_j(state: PureState):
    """``(|J^{34}|, |J^{24}|, |J^{23}|)`` via qubit relabelling."""
    out = []
    for q in (2, 3, 4):
        permuted = permute_qubits(state, pair_partner_permutation(q))
        out.append(abs(j_invariants(permuted)[q - 2]))
    return tuple(out)
