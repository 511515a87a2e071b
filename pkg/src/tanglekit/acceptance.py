"""The acceptance suite: seven criteria, each a list of tolerance checks.

Every criterion runs at its stated tolerance. ``run_all`` is what
``tanglekit selftest`` and ``tests/test_acceptance.py`` call.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import abc_core, monogamy, quad_inv, roof, tri_inv
from .abc_core import InvariantTriple
from .identities import check_random
from .qstate import one_tangle, partial_trace, random_states


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tol: float
    passed: bool

    def line(self):
        mark = "ok  " if self.passed else "FAIL"
        return f"    {mark} {self.name}: {self.value:.3e} (tol {self.tol:g})"


@dataclass
class Criterion:
    number: int
    title: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def add_max(self, name, residual, tol):
        """Record a check that passes when ``residual <= tol``."""
        residual = float(residual)
        self.checks.append(Check(name, residual, tol, bool(residual <= tol)))

    def add_min(self, name, value, bound):
        """Record a check that passes when ``value >= bound``."""
        value = float(value)
        self.checks.append(Check(name, value, bound, bool(value >= bound)))

    def add_flag(self, name, ok):
        self.checks.append(Check(name, float(bool(ok)), 1.0, bool(ok)))

    def summary(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.elapsed:.1f} s)"


def _timed(number, title, budget=None):
    def wrap(fn):
        def run(*args, **kwargs):
            crit = Criterion(number, title)
            t0 = time.perf_counter()
            fn(crit, *args, **kwargs)
            crit.elapsed = time.perf_counter() - t0
            if budget is not None:
                crit.add_max("runtime seconds", crit.elapsed, budget)
            return crit
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@_timed(1, "four-qubit identity suite on 1000 random states", budget=10.0)
def criterion_identities(crit, count=1000, seed=1):
    for r in check_random(count, seed):
        crit.add_max(r.name, r.max_residual, r.tol)


@_timed(2, "three-qubit suite on 1000 random states", budget=10.0)
def criterion_three_qubit(crit, count=1000, seed=2):
    states = random_states(3, count, seed)
    amps = np.array([s.amps for s in states])
    t12 = tri_inv.triple_from_amps(amps, "12")
    t13 = tri_inv.triple_from_amps(amps, "13")
    d12 = t12[1] ** 2 - 4 * t12[0] * t12[2]
    d13 = t13[1] ** 2 - 4 * t13[0] * t13[2]
    crit.add_max("two forms of the degree-4 invariant agree", np.max(np.abs(d12 - d13)), 1e-12)

    tau3 = 4 * np.abs(d12)
    i1_12 = np.abs(t12[0]) ** 2 + 0.5 * np.abs(t12[1]) ** 2 + np.abs(t12[2]) ** 2
    i1_13 = np.abs(t13[0]) ** 2 + 0.5 * np.abs(t13[1]) ** 2 + np.abs(t13[2]) ** 2
    tau12 = np.array([tri_inv.two_tangle(s, "12") for s in states])
    tau13 = np.array([tri_inv.two_tangle(s, "13") for s in states])
    tau1 = np.array([one_tangle(s, 1) for s in states])
    crit.add_max("4 N_A3 = tau_12^2 + tau_3 / 2", np.max(np.abs(4 * i1_12 - tau12**2 - tau3 / 2)), 1e-8)
    crit.add_max("4 N_A2 = tau_13^2 + tau_3 / 2", np.max(np.abs(4 * i1_13 - tau13**2 - tau3 / 2)), 1e-8)
    crit.add_max("tau_1 = tau_12^2 + tau_13^2 + tau_3",
                 np.max(np.abs(tau1 - tau12**2 - tau13**2 - tau3)), 1e-8)
    t4 = 4 * np.abs(t12[1]) ** 2
    crit.add_min("tau_3 - 4|T12|^2 (over all states)", np.min(tau3 - t4), -1e-9)
    dc = 8 * np.abs(t12[0]) ** 2 + 8 * np.abs(t12[2]) ** 2 - 2 * tau12**2
    crit.add_max("4|T12|^2 = tau_3 - D_c (companion)", np.max(np.abs(t4 - tau3 + dc)), 1e-8)

    worst_terms, worst_pattern, worst_16, worst_4 = 0, 0, 0.0, 0.0
    allowed = {int(b, 2) for b in tri_inv.CANONICAL_PATTERN}
    for s, tau in zip(states, tau3):
        c = tri_inv.canonical_form(s).state
        nz = {i for i in range(8) if abs(c.amps[i]) > 1e-10}
        worst_terms = max(worst_terms, len(nz))
        worst_pattern = max(worst_pattern, len(nz - allowed))
        T12 = tri_inv.t_value(c, "12")
        T13 = tri_inv.t_value(c, "13")
        worst_16 = max(worst_16, abs(16 * abs(T12) ** 2 - tau), abs(16 * abs(T13) ** 2 - tau))
        worst_4 = max(worst_4, abs(4 * abs(T12) ** 2 - tau), abs(4 * abs(T13) ** 2 - tau))
    crit.add_max("canonical form: nonzero coefficients", worst_terms, 5)
    crit.add_max("canonical form: coefficients outside the pattern", worst_pattern, 0)
    crit.add_max("canonical form: 16|T12|^2 = 16|T13|^2 = tau_3", worst_16, 1e-8)
    # companion: the relation that the canonical form does satisfy
    crit.add_max("canonical form: 4|T12|^2 = 4|T13|^2 = tau_3 (companion)", worst_4, 1e-8)


@_timed(3, "exact values of the quoted states")
def criterion_quoted_states(crit):
    ghz = monogamy.catalog("ghz4")
    q = quad_inv.quad_invariants(ghz)
    lb = monogamy.lower_bound(q.betas, q.tau0, q.genuine_four_tangle)
    crit.add_max("GHZ4 one-tangle", abs(one_tangle(ghz) - 1), 1e-12)
    crit.add_max("GHZ4 tau0^2", abs(q.tau0**2 - 1), 1e-12)
    crit.add_max("GHZ4 genuine four-tangle", abs(q.genuine_four_tangle - 1), 1e-12)
    crit.add_max("GHZ4 betas", np.max(np.abs(np.array(q.betas) - 1 / 3)), 1e-12)
    crit.add_max("GHZ4 delta lower bound", abs(lb - 1), 1e-12)

    phi = monogamy.catalog("phi")
    q = quad_inv.quad_invariants(phi)
    lb = monogamy.lower_bound(q.betas, q.tau0, q.genuine_four_tangle)
    crit.add_max("Phi betas", np.max(np.abs(np.array(q.betas) - [2 / 3, 1 / 3, 1 / 3])), 1e-12)
    crit.add_max("Phi delta lower bound", abs(lb - 5 / 6), 1e-12)
    crit.add_max("Phi tau0", abs(q.tau0), 1e-12)
    crit.add_max("Phi genuine four-tangle", abs(q.genuine_four_tangle - 1), 1e-12)

    rep = monogamy.report(monogamy.catalog("psi"))
    crit.add_max("Psi delta", abs(rep.delta), 1e-8)
    crit.add_max("Psi delta2", abs(rep.delta2 - 3 / 8), 1e-8)


@_timed(4, "family values at a = 0.5, 1, 2, 5")
def criterion_family_values(crit, points=(0.5, 1.0, 2.0, 5.0)):
    for a in points:
        s = monogamy.family_g2ia(a)
        ref = monogamy.family_reference(a)
        q = quad_inv.quad_invariants(s)
        lb = monogamy.lower_bound(q.betas, q.tau0, q.genuine_four_tangle)
        crit.add_max(f"a={a:g} one-tangle", abs(one_tangle(s) - ref.one_tangle), 1e-9)
        crit.add_max(f"a={a:g} tau0", abs(q.tau0 - ref.tau0), 1e-9)
        crit.add_max(f"a={a:g} genuine four-tangle", abs(q.genuine_four_tangle), 1e-9)
        crit.add_max(f"a={a:g} delta lower bound",
                     abs((lb if lb is not None else np.nan) - ref.delta_lower_bound), 1e-9)


@_timed(5, "residual curves over the family, 201 points on [0, 5]", budget=60.0)
def criterion_sweep(crit, steps=201, restarts=8):
    rows = monogamy.sweep(0.0, 5.0, steps, opts=roof.RoofOptions(restarts=restarts))
    ref_d = np.array([r["ref_delta"] for r in rows])
    ref_d1 = np.array([r["ref_delta1"] for r in rows])
    ref_d2 = np.array([r["ref_delta2"] for r in rows])
    crit.add_max("rows", abs(len(rows) - steps), 0)
    crit.add_max("min reference delta1 (must be negative)", np.min(ref_d1), -1e-12)
    crit.add_min("min reference delta", np.min(ref_d), -1e-9)
    crit.add_min("min reference delta2", np.min(ref_d2), -1e-9)


def _random_density(rank, seed, n=3):
    rng = np.random.default_rng(seed)
    d = 2**n
    v = rng.normal(size=(rank, d)) + 1j * rng.normal(size=(rank, d))
    p = rng.dirichlet(np.ones(rank))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return (v.T * p) @ v.conj()


@_timed(6, "roof optimizer properties")
def criterion_roof(crit, seed=6):
    opts = roof.RoofOptions(restarts=8)
    # pure projectors
    worst_tri = worst_new = worst_conc = 0.0
    for s in random_states(3, 10, seed):
        rho = np.outer(s.amps, s.amps.conj())
        worst_tri = max(worst_tri, abs(roof.three_tangle_roof(rho, opts) - tri_inv.three_tangle_pure(s)))
        worst_new = max(worst_new, abs(roof.new_two_tangle_roof(rho, "12", opts)
                                       - 2 * abs(tri_inv.t_value(s, "12"))))
    for s in random_states(2, 10, seed):
        a = s.amps
        rho = np.outer(a, a.conj())
        worst_conc = max(worst_conc, abs(roof.concurrence(rho) - 2 * abs(a[0] * a[3] - a[1] * a[2])))
    crit.add_max("pure projector three-tangle", worst_tri, 1e-6)
    crit.add_max("pure projector new two-tangle", worst_new, 1e-6)
    crit.add_max("pure projector concurrence", worst_conc, 1e-6)

    # the family marginals
    for a in (0.5, 1.0, 2.0):
        s = monogamy.family_g2ia(a)
        ref = monogamy.family_reference(a).three_tangle
        for triple in monogamy.TRIPLES:
            rho = partial_trace(s, triple)
            key = "".join(map(str, triple))
            crit.add_max(f"a={a:g} three-tangle roof {key} minus reference",
                         roof.three_tangle_roof(rho, opts) - ref, 1e-3)
            for pair in ("12", "13"):
                crit.add_max(f"a={a:g} new two-tangle {key}/{pair}",
                             roof.new_two_tangle_roof(rho, pair, opts), 1e-4)

    # never worse than an explicit decomposition
    rng = np.random.default_rng(seed)
    worst = -np.inf
    mats = [partial_trace(s, (1, 2, 3)).mat for s in random_states(4, 4, seed)]
    mats += [_random_density(3, seed + k) for k in range(2)]
    for m in mats:
        M = roof.support(m)
        r = M.shape[0]
        tri_val = roof.three_tangle_roof(m, opts)
        new_val = roof.new_two_tangle_roof(m, "12", opts)
        for _ in range(5):
            L = r + 2
            ens = roof.ensemble_from_isometry(m, rng.uniform(-np.pi, np.pi, roof.n_params(L, r)), L)
            tri_obj = float(ens.weights @ roof.sqrt_tau3(ens.states)) ** 2
            new_obj = float(ens.weights @ roof.new_objective(ens.states[:, None, :], 0.0, 0.0))
            worst = max(worst, tri_val - tri_obj, new_val - new_obj)
    crit.add_max("estimate minus explicit decomposition objective", worst, 1e-9)

    # determinism
    m = _random_density(3, seed + 10)
    a = roof.estimate_three_tangle_roof(m, opts).value
    b = roof.estimate_three_tangle_roof(m, opts).value
    c = roof.estimate_new_two_tangle_roof(m, "12", opts, spectator="free").value
    d = roof.estimate_new_two_tangle_roof(m, "12", opts, spectator="free").value
    crit.add_flag("fixed seed gives bit-identical estimates", a == b and c == d)


@_timed(7, "spectator-rotation algebra on 10^4 random triples")
def criterion_triple_algebra(crit, count=10_000, seed=7):
    rng = np.random.default_rng(seed)
    A, B, C = (rng.normal(size=count) + 1j * rng.normal(size=count) for _ in range(3))
    x = rng.normal(size=count) + 1j * rng.normal(size=count)
    A2, B2, C2 = abc_core.transform_arrays(A, B, C, x)
    i1 = np.abs(A) ** 2 + 0.5 * np.abs(B) ** 2 + np.abs(C) ** 2
    i1x = np.abs(A2) ** 2 + 0.5 * np.abs(B2) ** 2 + np.abs(C2) ** 2
    i2 = np.abs(B**2 - 4 * A * C)
    i2x = np.abs(B2**2 - 4 * A2 * C2)
    crit.add_max("I1 invariance", np.max(np.abs(i1 - i1x)), 1e-12)
    crit.add_max("I2 invariance", np.max(np.abs(i2 - i2x)), 1e-10)

    worst_a = 0.0
    for k in range(count):
        t = InvariantTriple(complex(A[k]), complex(B[k]), complex(C[k]))
        for root in abc_core.x0_root(t):
            worst_a = max(worst_a, abs(abc_core.transform(t, root).A))
    crit.add_max("A(x0) on both branches", worst_a, 1e-10)

    r = np.linspace(0, 10, 100)
    th = np.linspace(0, 2 * np.pi, 100, endpoint=False)
    grid = (r[:, None] * np.exp(1j * th)[None, :]).ravel()
    bound = np.sqrt(np.maximum(0.0, 4 * i1 - 2 * i2))
    worst = -np.inf
    for lo in range(0, count, 500):
        sl = slice(lo, lo + 500)
        Ax, _, Cx = abc_core.transform_arrays(A[sl, None], B[sl, None], C[sl, None], grid[None, :])
        best = np.min(2 * (np.abs(Ax) + np.abs(Cx)), axis=1)
        worst = max(worst, float(np.max(bound[sl] - best)))
    crit.add_max("grid minimum below the closed-form bound", worst, 1e-6)


CRITERIA = (
    criterion_identities,
    criterion_three_qubit,
    criterion_quoted_states,
    criterion_family_values,
    criterion_sweep,
    criterion_roof,
    criterion_triple_algebra,
)


def run_all(out=None):
    """Run every criterion; print one summary line each (plus failing checks)."""
    results = []
    for fn in CRITERIA:
        crit = fn()
        results.append(crit)
        if out is not None:
            print(crit.summary(), file=out)
            for c in crit.checks:
                if not c.passed:
                    print(c.line(), file=out)
    return results
