"""Batched checks of the exact four-qubit identities.

Every check returns the largest residual over the batch. The identities are
exact algebra, so a failure points at a bug, not at a state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import quad_inv
from .errors import DimensionError
from .qstate import PureState, random_states

TOLERANCES = {
    "font_sum": 1e-10,
    "one_tangle_identity": 1e-10,
    "j_sum": 1e-9,
    "pair_symmetry": 1e-9,
    "i48_permutation": 1e-9,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    tol: float

    @property
    def passed(self):
        return bool(self.max_residual <= self.tol)

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name:<22} max residual {self.max_residual:.3e} (tol {self.tol:.0e})"


def _amps(states):
    if isinstance(states, np.ndarray):
        a = np.asarray(states, dtype=complex)
        return a.reshape(1, -1) if a.ndim == 1 else a
    arr = []
    for s in states:
        if s.n != 4:
            raise DimensionError(f"identity checks need 4-qubit states, got n={s.n}")
        arr.append(s.amps)
    return np.array(arr, dtype=complex)


def permute_batch(amps, perm):
    """Relabel qubits of every row; ``perm[k-1]`` is the new label of qubit k."""
    t = amps.reshape(-1, 2, 2, 2, 2)
    src = [0] * 4
    for k, p in enumerate(perm):
        src[p - 1] = k
    return t.transpose([0] + [1 + s for s in src]).reshape(-1, 16)


def one_tangle_batch(amps):
    m = amps.reshape(-1, 2, 8)
    rho = m @ m.conj().transpose(0, 2, 1)
    return 4 * np.abs(np.linalg.det(rho))


def run_checks(states) -> list[CheckResult]:
    """Run the five identity checks on a list of states or an ``(m, 16)`` array."""
    amps = _amps(states)
    core = quad_inv.batch_invariants(amps)
    tau1 = one_tangle_batch(amps)
    res = {
        "font_sum": np.abs(core["font_sum"] - tau1),
        "one_tangle_identity": np.abs(core["identity_rhs"] - tau1),
        "j_sum": np.abs(4 * np.abs(core["j"].sum(axis=-1)) - 3 * core["tau0"] ** 2),
    }
    sym = []
    for q in (2, 3, 4):
        other = quad_inv.batch_invariants(
            permute_batch(amps, quad_inv.pair_partner_permutation(q)))
        sym.append(np.abs(np.abs(core["j"][:, q - 2]) - np.abs(other["j"][:, q - 2])))
    res["pair_symmetry"] = np.max(sym, axis=0)
    ref = np.abs(core["i48"])
    perm_res = np.zeros(len(amps))
    for perm in itertools.permutations((1, 2, 3, 4)):
        other = quad_inv.batch_invariants(permute_batch(amps, perm))["i48"]
        perm_res = np.maximum(perm_res, np.abs(np.abs(other) - ref))
    res["i48_permutation"] = perm_res
    return [CheckResult(k, float(np.max(v)), TOLERANCES[k]) for k, v in res.items()]


def check_random(count, seed=0):
    return run_checks(random_states(4, count, seed))


def first_failure(results):
    for r in results:
        if not r.passed:
            return r
    return None


def check_state(state: PureState):
    return run_checks([state])
