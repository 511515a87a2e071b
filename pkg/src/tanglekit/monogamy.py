"""Monogamy bookkeeping for four-qubit pure states.

:func:`report` collects the one-tangle of the focus qubit, the squared
two-tangles, roof estimates of the marginal three-tangles and new
two-tangles, the pure-state invariants, and the four residuals:

* ``delta``: one-tangle minus squared two-tangles, half the three-tangles
  and half the squared new two-tangles;
* ``delta1``: one-tangle minus squared two-tangles and the three-tangles;
* ``delta2``: as ``delta1`` with the three-tangles raised to 3/2;
* ``delta_lower_bound``: ``sum(beta)/4 + tau0^2/4 + sqrt(tau_4)/2``, only
  when ``sum_{i<j} beta_i beta_j`` is nonzero.

New two-tangles are reported under two marginal assignments. The default
(``"residual"``) pairs 1-2 with the marginal on 1,2,3, pair 1-3 with 1,3,4
and pair 1-4 with 1,2,4, as in the residual formula. The ``"table"``
assignment pairs 1-2 with 1,2,4, pair 1-3 with 1,2,3 and pair 1-4 with
1,3,4, as in the row inequalities.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import asdict, dataclass, field

import numpy as np

from . import quad_inv
from .errors import DimensionError, UnknownStateError
from .fonts import font_arrays4
from .qstate import PureState, focus_first, make_pure, one_tangle, partial_trace
from .roof import (
    RoofOptions,
    concurrence,
    estimate_new_two_tangle_roof,
    estimate_three_tangle_roof,
)

TRIPLES = ((1, 2, 3), (1, 2, 4), (1, 3, 4))
PAIRS = (2, 3, 4)
# partner qubit -> (marginal, pair label inside that marginal)
NEW_ASSIGNMENTS = {
    "residual": {2: ((1, 2, 3), "12"), 3: ((1, 3, 4), "12"), 4: ((1, 2, 4), "13")},
    "table": {2: ((1, 2, 4), "12"), 3: ((1, 2, 3), "13"), 4: ((1, 3, 4), "13")},
}
DELTA_SLACK = 1e-6
BETA_THRESHOLD = 1e-10


def _key(qubits):
    return "".join(str(q) for q in qubits)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    slack: float


@dataclass(frozen=True)
class TangleReport:
    """Tangles, invariants, residuals and inequality verdicts of one state.

    ``two_tangles`` are squared concurrences keyed by the partner qubit;
    ``three_tangles`` are roof estimates (upper bounds) keyed by the
    marginal, e.g. ``"123"``; ``new_two_tangles`` maps an assignment name
    to values keyed by the partner qubit. All keys refer to qubit labels
    after the focus has been moved to position 1.
    """

    focus: int
    one_tangle: float
    two_tangles: dict
    three_tangles: dict
    new_two_tangles: dict
    tau0: float
    genuine_four_tangle: float
    betas: tuple
    delta: float
    delta_table: float
    delta1: float
    delta2: float
    delta_lower_bound: float | None
    verdicts: dict
    roof_converged: bool
    roof_label: str = "roof-estimate (upper bound)"
    invariants: dict = field(default_factory=dict, repr=False)

    @property
    def delta_applicable(self):
        return self.delta_lower_bound is not None

    def as_dict(self):
        d = asdict(self)
        d["verdicts"] = {k: {"passed": v.passed, "slack": v.slack} for k, v in self.verdicts.items()}
        d["two_tangles"] = {str(k): v for k, v in self.two_tangles.items()}
        d["new_two_tangles"] = {
            name: {str(k): v for k, v in vals.items()}
            for name, vals in self.new_two_tangles.items()
        }
        d["betas"] = list(self.betas)
        return d


def _residuals(t1, two, three, new):
    s2 = sum(two.values())
    s3 = sum(three.values())
    delta = t1 - s2 - 0.5 * s3 - 0.5 * sum(v**2 for v in new.values())
    delta1 = t1 - s2 - s3
    delta2 = t1 - s2 - sum(max(v, 0.0) ** 1.5 for v in three.values())
    return delta, delta1, delta2


def lower_bound(betas, tau0, tau4):
    """``delta`` lower bound, or ``None`` when the beta products all vanish."""
    b = betas
    if b[0] * b[1] + b[0] * b[2] + b[1] * b[2] <= BETA_THRESHOLD:
        return None
    return sum(b) / 4 + tau0**2 / 4 + 0.5 * np.sqrt(max(tau4, 0.0))


def _slice_candidates(state, triple):
    """The two slices at the traced-out qubit, as a decomposition of the marginal."""
    traced = [q for q in (1, 2, 3, 4) if q not in triple][0]
    out = []
    for v in (0, 1):
        amps = quad_inv.slice_state(state, traced, v)
        p = float(np.vdot(amps, amps).real)
        if p > 1e-300:
            out.append((p, amps / np.sqrt(p)))
    return [out]


def slice_inequalities(state: PureState):
    """Slack of ``4 N^(i) >= tau_pair(slice)^2 + 2|I34(slice)|`` per row and slice.

    The slices are unnormalized; every term is homogeneous of degree four.
    """
    from .tri_inv import i34_from_amps

    q = quad_inv.quad_invariants(state)
    out = {}
    # spectator q of N_Aq, sliced qubit, pair partner
    for spect, partner in ((4, 2), (2, 3), (3, 4)):
        for i in (0, 1):
            amps = quad_inv.slice_state(state, spect, i)
            rest = [k for k in (1, 2, 3, 4) if k != spect]
            t = amps.reshape(2, 2, 2)
            ax = [rest.index(1), rest.index(partner)]
            other = [k for k in range(3) if k not in ax][0]
            m = np.transpose(t, ax + [other]).reshape(4, 2)
            tau = concurrence(m @ m.conj().T)
            # reorder so that the partner sits in the middle for the pair-12 form
            amps3 = np.transpose(t, ax + [other]).reshape(-1)
            rhs = tau**2 + 2 * abs(complex(i34_from_amps(amps3)))
            out[f"slice_N{spect}_{i}"] = Verdict(bool(4 * q.n[(spect, i)] - rhs >= -1e-9),
                                                 float(4 * q.n[(spect, i)] - rhs))
    return out


def report(state: PureState, focus: int = 1, opts: RoofOptions | None = None,
           spectator: str = "fixed") -> TangleReport:
    """Build the :class:`TangleReport` of a four-qubit state.

    ``spectator`` selects the new two-tangle variant (see
    :func:`tanglekit.roof.estimate_new_two_tangle_roof`).
    """
    if state.n != 4:
        raise DimensionError(f"expected a 4-qubit state, got n={state.n}")
    opts = opts or RoofOptions()
    psi = focus_first(state, focus) if focus != 1 else state
    t1 = one_tangle(psi, 1)
    two = {p: concurrence(partial_trace(psi, (1, p))) ** 2 for p in PAIRS}

    converged = True
    three = {}
    marginals = {}
    for triple in TRIPLES:
        rho = partial_trace(psi, triple)
        marginals[triple] = rho
        est = estimate_three_tangle_roof(rho, opts, _slice_candidates(psi, triple))
        converged &= est.converged
        three[_key(triple)] = est.value

    new = {}
    cache = {}
    for name, assign in NEW_ASSIGNMENTS.items():
        new[name] = {}
        for p, (triple, label) in assign.items():
            if (triple, label) not in cache:
                est = estimate_new_two_tangle_roof(marginals[triple], label, opts,
                                                   spectator=spectator)
                converged &= est.converged
                cache[(triple, label)] = est.value
            new[name][p] = cache[(triple, label)]

    qi = quad_inv.quad_invariants(psi)
    delta, delta1, delta2 = _residuals(t1, two, three, new["residual"])
    delta_table = _residuals(t1, two, three, new["table"])[0]
    lb = lower_bound(qi.betas, qi.tau0, qi.genuine_four_tangle)

    verdicts = {
        "residual_nonnegative": Verdict(delta >= -DELTA_SLACK, delta),
        "residual_nonnegative_table": Verdict(delta_table >= -DELTA_SLACK, delta_table),
        "ckw_extension": Verdict(delta1 >= -DELTA_SLACK, delta1),
        "three_halves_conjecture": Verdict(delta2 >= -DELTA_SLACK, delta2),
    }
    if lb is not None:
        verdicts["lower_bound_below_residual"] = Verdict(lb <= delta + DELTA_SLACK, delta - lb)
    # pair sums: 4 sum_i N >= tau_pair^2 + tau_3 / 2 over the matching marginal
    for spect, partner, triple in ((4, 2, "123"), (2, 3, "134"), (3, 4, "124")):
        lhs = 4 * (qi.n[(spect, 0)] + qi.n[(spect, 1)])
        rhs = two[partner] + 0.5 * three[triple]
        verdicts[f"pair_sum_1{partner}"] = Verdict(lhs - rhs >= -DELTA_SLACK, lhs - rhs)
    # M rows: 4 M - tau3_new / 2 >= new two-tangle^2 (table assignment)
    for m_spect, partner, head in ((3, 2, 4), (4, 3, 2), (2, 4, 3)):
        lhs = 4 * qi.m[m_spect] - 0.5 * 4 * abs(qi.i3_new[head])
        rhs = new["table"][partner] ** 2
        verdicts[f"pair_new_1{partner}"] = Verdict(lhs - rhs >= -DELTA_SLACK, lhs - rhs)
    verdicts.update(slice_inequalities(psi))

    return TangleReport(
        focus=focus,
        one_tangle=t1,
        two_tangles=two,
        three_tangles=three,
        new_two_tangles=new,
        tau0=qi.tau0,
        genuine_four_tangle=qi.genuine_four_tangle,
        betas=tuple(qi.betas),
        delta=delta,
        delta_table=delta_table,
        delta1=delta1,
        delta2=delta2,
        delta_lower_bound=lb,
        verdicts=verdicts,
        roof_converged=bool(converged),
        invariants=qi.as_dict(),
    )


# --- states ---------------------------------------------------------------------

def family_g2(a, b, c) -> PureState:
    """The two-parameter-degenerate family with amplitudes ``(a+b)/2`` on
    0000/1111, ``(a-b)/2`` on 0011/1100, ``c`` on 0101/1010 and 1 on 0110."""
    v = np.zeros(16, dtype=complex)
    v[0b0000] = v[0b1111] = (a + b) / 2
    v[0b0011] = v[0b1100] = (a - b) / 2
    v[0b0101] = v[0b1010] = c
    v[0b0110] = 1
    return make_pure(v, 4)


def family_g2ia(a) -> PureState:
    return family_g2(a, 1j * a, 1j * a)


@dataclass(frozen=True)
class FamilyPoint:
    """Closed-form values on the ``b = c = i a`` line of the family."""

    a: float
    one_tangle: float
    tau0: float
    three_tangle: float
    delta_lower_bound: float
    genuine_four_tangle: float = 0.0
    new_two_tangle: float = 0.0


def family_reference(a) -> FamilyPoint:
    a = float(a)
    if a < 0:
        raise ValueError("the family parameter must be nonnegative")
    d = 4 * a * a + 1
    return FamilyPoint(
        a=a,
        one_tangle=(8 * a**2 + 16 * a**4) / d**2,
        tau0=2 * a * a / d,
        three_tangle=8 * a**3 / d**2,
        delta_lower_bound=6 * a**4 / d**2,
    )


def _basis(*bits, n):
    v = np.zeros(2**n)
    for b in bits:
        v[int(b, 2)] = 1
    return v


_CATALOG = {
    "ghz4": lambda: make_pure(_basis("0000", "1111", n=4)),
    "phi": lambda: make_pure(_basis("1111", "1100", "0010", "0001", n=4)),
    "psi": lambda: make_pure(_basis("0000", "0101", "1000", "1110", n=4)),
    "ghz3": lambda: make_pure(_basis("000", "111", n=3)),
    "w3": lambda: make_pure(_basis("001", "010", "100", n=3)),
}
_G2_NAME = re.compile(r"^g2\s*[\(:=]\s*([-+0-9.eE]+)\s*\)?$")


def catalog_names():
    return tuple(_CATALOG) + ("g2(a)",)


def catalog(name: str) -> PureState:
    """States quoted in the text: ``ghz4``, ``phi``, ``psi``, ``ghz3``,
    ``w3`` and ``g2(a)`` (the ``b = c = i a`` family member)."""
    key = name.strip().lower()
    if key in _CATALOG:
        return _CATALOG[key]()
    m = _G2_NAME.match(key)
    if m:
        return family_g2ia(float(m.group(1)))
    raise UnknownStateError(f"unknown state {name!r}; known: {', '.join(catalog_names())}")


# --- sweep ----------------------------------------------------------------------

SWEEP_COLUMNS = (
    "a",
    "delta", "delta1", "delta2", "delta_lower_bound", "delta_table",
    "one_tangle", "tau0", "genuine_four_tangle",
    "two_tangle_sq_12", "two_tangle_sq_13", "two_tangle_sq_14",
    "three_tangle_roof_123", "three_tangle_roof_124", "three_tangle_roof_134",
    "new_two_tangle_12", "new_two_tangle_13", "new_two_tangle_14",
    "new_two_tangle_table_12", "new_two_tangle_table_13", "new_two_tangle_table_14",
    "roof_converged",
    "ref_one_tangle", "ref_tau0", "ref_three_tangle", "ref_delta_lower_bound",
    "ref_delta", "ref_delta1", "ref_delta2",
)


def sweep_grid(a_min, a_max, steps):
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if a_min < 0 or a_max < a_min:
        raise ValueError("need 0 <= a_min <= a_max")
    # a degenerate interval collapses to a single point
    return np.unique(np.linspace(a_min, a_max, steps))


def reference_residuals(a, two_tangles_sq):
    """Residuals from closed-form three-tangles, zero new two-tangles and the
    given squared two-tangles."""
    ref = family_reference(a)
    three = {k: ref.three_tangle for k in ("123", "124", "134")}
    new = {p: 0.0 for p in PAIRS}
    return _residuals(ref.one_tangle, dict(two_tangles_sq), three, new)


def sweep_row(a, focus=1, opts: RoofOptions | None = None, roofs=True):
    state = family_g2ia(a)
    ref = family_reference(a)
    psi = focus_first(state, focus) if focus != 1 else state
    if roofs:
        rep = report(state, focus, opts)
        two = rep.two_tangles
    else:
        rep = None
        two = {p: concurrence(partial_trace(psi, (1, p))) ** 2 for p in PAIRS}
    r_delta, r_delta1, r_delta2 = reference_residuals(a, two)
    row = {"a": float(a)}
    if rep is not None:
        row.update(
            delta=rep.delta, delta1=rep.delta1, delta2=rep.delta2,
            delta_lower_bound=rep.delta_lower_bound, delta_table=rep.delta_table,
            one_tangle=rep.one_tangle, tau0=rep.tau0,
            genuine_four_tangle=rep.genuine_four_tangle,
            three_tangle_roof_123=rep.three_tangles["123"],
            three_tangle_roof_124=rep.three_tangles["124"],
            three_tangle_roof_134=rep.three_tangles["134"],
            roof_converged=int(rep.roof_converged),
        )
        for p in PAIRS:
            row[f"new_two_tangle_1{p}"] = rep.new_two_tangles["residual"][p]
            row[f"new_two_tangle_table_1{p}"] = rep.new_two_tangles["table"][p]
    else:
        qi = quad_inv.quad_invariants(psi)
        row.update(
            one_tangle=one_tangle(psi, 1), tau0=qi.tau0,
            genuine_four_tangle=qi.genuine_four_tangle,
            delta_lower_bound=lower_bound(qi.betas, qi.tau0, qi.genuine_four_tangle),
        )
    for p in PAIRS:
        row[f"two_tangle_sq_1{p}"] = two[p]
    row.update(
        ref_one_tangle=ref.one_tangle, ref_tau0=ref.tau0, ref_three_tangle=ref.three_tangle,
        ref_delta_lower_bound=ref.delta_lower_bound,
        ref_delta=r_delta, ref_delta1=r_delta1, ref_delta2=r_delta2,
    )
    return row


def sweep(a_min=0.0, a_max=5.0, steps=201, focus=1, opts: RoofOptions | None = None,
          roofs=True):
    """Rows over the family grid, in grid order. Missing values are ``None``."""
    rows = []
    for a in sweep_grid(a_min, a_max, steps):
        row = sweep_row(a, focus, opts, roofs)
        rows.append({c: row.get(c) for c in SWEEP_COLUMNS})
    return rows


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.12g" % float(v)


def rows_to_csv(rows, columns=SWEEP_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def batch_fonts(states):
    return font_arrays4(np.array([s.amps for s in states]))
