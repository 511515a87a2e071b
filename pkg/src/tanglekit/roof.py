"""Mixed-state tangles: Wootters concurrence and convex-roof estimates.

Roof values are minima over pure-state decompositions and every routine
here returns the objective of an explicit decomposition, so the numbers are
upper bounds on the true roof. Three routes are combined and the smallest
value wins:

* a derivative-free pattern search over ``L x r`` isometries written as
  products of Givens rotations (any rank);
* for rank-2 inputs of the three-tangle, an exact convex-envelope problem
  on the Bloch sphere of the two-dimensional support, solved as a linear
  program with constraint generation;
* for the new two-tangle, the closed form for roofs of ``|phi^T S phi|``
  with a symmetric ``S`` (largest singular value minus the rest of
  ``M S M^T``), minimized over the spectator-qubit unitary.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import linprog

from . import abc_core
from .errors import DimensionError, RankTooLargeError
from .fonts import font_arrays3
from .qstate import DensityMatrix, PureState

EIG_CUTOFF = 1e-12
OBJECTIVE_FLOOR = 1e-12
NEW_SEARCH_THRESHOLD = 1e-9
UPPER_BOUND_LABEL = "roof-estimate (upper bound)"

# sigma_y (x) sigma_y in the computational basis
_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


def _matrix(rho, n=None):
    m = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if n is not None and m.shape != (2**n, 2**n):
        raise DimensionError(f"expected a {2**n}x{2**n} density matrix, got {m.shape}")
    return m


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    With ``rho = W W^dagger`` the spin-flipped overlaps are the singular
    values of ``W^T (Y x Y) W``; this avoids the square roots of
    eigenvalues of a non-Hermitian product.
    """
    m = _matrix(rho, 2)
    m = 0.5 * (m + m.conj().T)
    w, v = np.linalg.eigh(m)
    W = v * np.sqrt(np.clip(w, 0, None))
    s = np.linalg.svd(W.T @ _YY @ W, compute_uv=False)
    return float(max(0.0, s[0] - s[1:].sum()))


# --- ensembles --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Ensemble:
    """Pure-state decomposition ``sum_i p_i |phi_i><phi_i|`` of ``parent``."""

    weights: np.ndarray
    states: np.ndarray
    parent: np.ndarray

    @classmethod
    def from_unnormalized(cls, members, parent):
        members = np.asarray(members, dtype=complex)
        p = np.sum(np.abs(members) ** 2, axis=1)
        keep = p > 1e-300
        states = members[keep] / np.sqrt(p[keep])[:, None]
        return cls(p[keep], states, _matrix(parent))

    @property
    def members(self):
        n = int(round(np.log2(self.states.shape[1])))
        return [(float(p), PureState(n, s)) for p, s in zip(self.weights, self.states)]

    def reconstruct(self):
        return (self.states.T * self.weights) @ self.states.conj()

    def residual(self):
        return float(np.linalg.norm(self.reconstruct() - self.parent))

    def __len__(self):
        return len(self.weights)


def _as_ensemble(candidate, parent):
    if isinstance(candidate, Ensemble):
        return candidate
    pairs = list(candidate)
    weights = np.array([float(p) for p, _ in pairs])
    states = np.array(
        [s.amps if isinstance(s, PureState) else np.asarray(s, complex) for _, s in pairs]
    )
    states = states / np.linalg.norm(states, axis=1, keepdims=True)
    return Ensemble(weights, states, _matrix(parent))


@dataclass(frozen=True)
class RoofOptions:
    """Settings for the roof searches.

    ``length`` is the ensemble length ``L``; ``None`` means twice the rank,
    capped at 8.
    """

    length: int | None = None
    restarts: int = 32
    max_iter: int = 2000
    tol: float = 1e-8
    seed: int = 0

    def resolved_length(self, rank):
        L = self.length if self.length is not None else min(2 * rank, 8)
        if L < rank:
            raise RankTooLargeError(f"ensemble length {L} is below the rank {rank}")
        return L


@dataclass(frozen=True, eq=False)
class RoofEstimate:
    value: float
    converged: bool
    method: str
    ensemble: Ensemble | None = None
    label: str = UPPER_BOUND_LABEL

    def __float__(self):
        return float(self.value)


def support(rho):
    """Eigen-members ``sqrt(lambda_k) e_k`` as rows, largest weight first."""
    m = _matrix(rho)
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    keep = w > EIG_CUTOFF
    w, v = w[keep][::-1], v[:, keep][:, ::-1]
    return (np.sqrt(w) * v).T


def n_params(L, r):
    """Phases of the ``r`` columns plus an angle and phase per Givens pair."""
    return r + 2 * (r * L - r * (r + 1) // 2)


def givens_isometry(params, L, r):
    """Batched ``L x r`` isometries from parameter rows of length ``n_params``."""
    params = np.atleast_2d(np.asarray(params, dtype=float))
    batch = params.shape[0]
    pairs = [(k, j) for k in range(r) for j in range(k + 1, L)]
    X = np.zeros((batch, L, r), dtype=complex)
    for k in range(r):
        X[:, k, k] = np.exp(1j * params[:, k])
    off = r
    for idx in range(len(pairs) - 1, -1, -1):
        k, j = pairs[idx]
        th = params[:, off + 2 * idx]
        e = np.exp(1j * params[:, off + 2 * idx + 1])[:, None]
        c, s = np.cos(th)[:, None], np.sin(th)[:, None]
        xk = X[:, k].copy()
        xj = X[:, j]
        X[:, k] = c * xk - e.conj() * s * xj
        X[:, j] = e * s * xk + c * xj
    return X


def ensemble_from_isometry(rho, params, L) -> Ensemble:
    """Members ``Phi_i = sum_k V_ik sqrt(lambda_k) e_k`` for ``V`` from ``params``."""
    M = support(rho)
    r = M.shape[0]
    if L < r:
        raise RankTooLargeError(f"ensemble length {L} is below the rank {r}")
    params = np.asarray(params, dtype=float).ravel()
    if params.size != n_params(L, r):
        raise ValueError(f"expected {n_params(L, r)} parameters, got {params.size}")
    V = givens_isometry(params[None], L, r)[0]
    return Ensemble.from_unnormalized(V @ M, rho)


# --- objectives --------------------------------------------------------------

def tri_objective(members):
    """``sum_i p_i sqrt(tau_3(phi_i))`` for unnormalized members ``(..., L, 8)``."""
    f = font_arrays3(members)
    A, C = f["d3"][..., 0], f["d3"][..., 1]
    B = f["t"][..., 0] + f["t"][..., 1]
    return np.sum(2 * np.sqrt(np.abs(B * B - 4 * A * C)), axis=-1)


def sqrt_tau3(states):
    """``sqrt(tau_3)`` of each row (degree two in the amplitudes)."""
    return tri_objective(np.asarray(states)[..., None, :])


def _pair_triple(members):
    f = font_arrays3(members)
    return f["d3"][..., 0], f["t"][..., 0] + f["t"][..., 1], f["d3"][..., 1]


def new_objective(members, theta, phi):
    """``sum_i 2|T12(U phi_i)|`` with ``U = U(exp(i phi) tan(theta))`` on qubit 3."""
    A, B, C = _pair_triple(members)
    theta = np.asarray(theta)[..., None]
    e = np.exp(1j * np.asarray(phi))[..., None]
    Bu = np.cos(2 * theta) * B - np.sin(2 * theta) * (e.conj() * C - e * A)
    return np.sum(2 * np.abs(Bu), axis=-1)


def _swap23(mat):
    t = np.asarray(mat).reshape((2,) * 6)
    return t.transpose(0, 2, 1, 3, 5, 4).reshape(8, 8)


def _pair_matrix(rho, pair):
    pair = str(pair)
    if pair not in ("12", "13"):
        raise ValueError(f"pair must be '12' or '13', got {pair!r}")
    m = _matrix(rho, 3)
    # swapping qubits 2 and 3 maps the pair-13 triple onto the pair-12 one
    return _swap23(m) if pair == "13" else m


# --- pattern search ------------------------------------------------------------

@dataclass
class SearchResult:
    x: np.ndarray
    fun: float
    converged: bool
    iterations: int
    all_fun: np.ndarray = field(repr=False, default=None)
    all_x: np.ndarray = field(repr=False, default=None)


def pattern_search(f, x0, tol=1e-8, max_iter=2000, step=0.5, max_step=1.0,
                   floor=OBJECTIVE_FLOOR):
    """Batched compass search; each row of ``x0`` is an independent start.

    ``f`` maps an ``(m, P)`` array to ``m`` objective values. Each start
    keeps its own step, doubled (up to ``max_step``) on success and halved
    on failure; it stops once the step is below ``tol`` or the objective
    reaches ``floor``.
    """
    x = np.array(x0, dtype=float)
    R, P = x.shape
    fx = np.asarray(f(x), dtype=float)
    steps = np.full(R, float(step))
    E = np.vstack([np.eye(P), -np.eye(P)])
    it = 0
    while it < max_iter:
        active = np.nonzero((steps > tol) & (fx > floor))[0]
        if active.size == 0:
            break
        cand = x[active, None, :] + steps[active, None, None] * E[None]
        fc = np.asarray(f(cand.reshape(-1, P)), dtype=float).reshape(active.size, 2 * P)
        best = fc.argmin(axis=1)
        fb = fc[np.arange(active.size), best]
        better = fb < fx[active] - 1e-15
        win = active[better]
        x[win] = cand[better, best[better]]
        fx[win] = fb[better]
        steps[win] = np.minimum(steps[win] * 2, max_step)
        steps[active[~better]] *= 0.5
        it += 1
    k = int(np.argmin(fx))
    done = bool(steps[k] <= tol or fx[k] <= floor)
    return SearchResult(x[k], float(fx[k]), done, it, fx, x)


def _starts(P, opts):
    x0 = np.zeros((opts.restarts, P))
    for k in range(1, opts.restarts):
        x0[k] = np.random.default_rng([opts.seed, k]).uniform(-np.pi, np.pi, P)
    return x0


def _search_ensembles(M, objective, extra, opts, rho, floor=OBJECTIVE_FLOOR):
    """Pattern search over isometries (plus ``extra`` trailing parameters).

    Restarts stop early once they reach ``floor``, typically a value that
    another route has already certified.
    """
    r = M.shape[0]
    L = opts.resolved_length(r)
    P = n_params(L, r)

    def f(p):
        members = givens_isometry(p[:, :P], L, r) @ M
        return objective(members, p[:, P:])

    res = pattern_search(f, _starts(P + extra, opts), opts.tol, opts.max_iter,
                         floor=floor)
    members = givens_isometry(res.x[None, :P], L, r)[0] @ M
    return res, Ensemble.from_unnormalized(members, rho), res.x[P:]


# --- rank-2 convex envelope on the Bloch sphere -------------------------------

def _fibonacci_angles(n):
    i = np.arange(n) + 0.5
    return np.stack([np.arccos(1 - 2 * i / n), np.mod(np.pi * (1 + 5**0.5) * i, 2 * np.pi)], 1)


def _angles_to_bloch(ang):
    t, p = ang[..., 0], ang[..., 1]
    return np.stack([np.sin(t) * np.cos(p), np.sin(t) * np.sin(p), np.cos(t)], axis=-1)


def _angles_to_vec(ang):
    t, p = ang[..., 0], ang[..., 1]
    return np.stack([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)], axis=-1)


def quartic_coefficients(M):
    """Coefficients ``c_k`` with ``I34(v M) = sum_k c_k v0^(4-k) v1^k``."""
    zs = np.exp(2j * np.pi * np.arange(5) / 5)
    vals = tri_sqrt_quartic(M, np.stack([np.ones(5), zs], 1), raw=True)
    return np.linalg.solve(np.vander(zs, 5, increasing=True), vals)


def _quartic_zero_angles(c):
    """Sphere angles where ``sum_k c_k v0^(4-k) v1^k`` vanishes."""
    scale = np.max(np.abs(c))
    if scale < 1e-300:
        return np.zeros((0, 2))
    c = c / scale
    pts = []
    deg = 4
    while deg > 0 and abs(c[deg]) < 1e-12:
        deg -= 1
    if deg < 4:
        # a vanishing top coefficient puts a zero at v0 = 0 (the south pole)
        pts.append([np.pi, 0.0])
    if deg > 0:
        for z in np.roots(c[: deg + 1][::-1]):
            pts.append([2 * np.arctan(abs(z)), np.angle(z)])
    return np.array(pts, dtype=float).reshape(-1, 2)


def tri_sqrt_quartic(M, v, raw=False):
    """``2 sqrt|I34(v M)|`` for rows ``v`` (or the raw invariant)."""
    phi = v @ M
    A, B, C = _pair_triple(phi)
    val = B * B - 4 * A * C
    return val if raw else 2 * np.sqrt(np.abs(val))


def _solve_lp(S, h):
    A_eq = np.vstack([np.ones(len(S)), S.T])
    res = linprog(h, A_eq=A_eq, b_eq=np.array([1.0, 0, 0, 0]), bounds=(0, None),
                  method="highs")
    if res.status != 0:
        return None
    return res.fun, res.x, res.eqlin.marginals


def three_tangle_hull(rho, rounds=40, grid=1500, tol=1e-9):
    """Exact rank-2 roof of ``sqrt(tau_3)`` by constraint generation.

    Decompositions of a rank-2 state correspond to points ``s_i`` on the
    Bloch sphere of its support with weights ``w_i >= 0``, ``sum w_i = 2``
    and ``sum w_i s_i = 0``; the objective is ``sum w_i h(s_i)`` with ``h``
    homogeneous of degree two. The linear program over a finite point set
    is refined by adding points of negative reduced cost until none is
    found. The zeros of ``h`` (cusps of the objective) are seeded exactly.
    Returns ``(value, Ensemble)`` with ``value`` the minimized
    ``sum p_i sqrt(tau_3)``.
    """
    M = support(rho)
    if M.shape[0] != 2:
        raise ValueError("the Bloch-sphere hull needs a rank-2 density matrix")
    c = quartic_coefficients(M)
    powers = np.arange(5)

    def h(ang):
        v = _angles_to_vec(ang)
        terms = v[..., :1] ** (4 - powers) * v[..., 1:] ** powers
        return 2 * np.sqrt(np.abs(terms @ c))

    dense = _fibonacci_angles(grid)
    dense_s = _angles_to_bloch(dense)
    dense_h = h(dense)
    seeds = np.array([[0, 0], [np.pi, 0], [np.pi / 2, 0], [np.pi / 2, np.pi],
                      [np.pi / 2, np.pi / 2], [np.pi / 2, -np.pi / 2]])
    ang = np.vstack([_fibonacci_angles(200), seeds, _quartic_zero_angles(c)])
    S, hS = _angles_to_bloch(ang), h(ang)
    sol = None
    for _ in range(rounds):
        out = _solve_lp(S, hS)
        if out is None:
            break
        sol = (ang.copy(), out)
        _, _, dual = out
        alpha, beta = dual[0], dual[1:]

        def reduced(a):
            return h(a) - alpha - _angles_to_bloch(a) @ beta

        g = dense_h - alpha - dense_s @ beta
        starts = dense[np.argsort(g)[:6]]
        res = pattern_search(reduced, starts, tol=1e-9, max_iter=200, step=0.05,
                             max_step=0.2, floor=-np.inf)
        if res.fun >= -tol:
            break
        # every refined start with negative reduced cost joins the point set
        new = res.all_x[res.all_fun < -tol]
        ang = np.vstack([ang, new])
        S = np.vstack([S, _angles_to_bloch(new)])
        hS = np.concatenate([hS, h(new)])
    if sol is None:
        return np.inf, None
    ang, (fun, w, _) = sol
    keep = w > 1e-14
    ang, w = ang[keep], w[keep]
    # re-solve the weights on the support so the ensemble is exactly feasible
    A_eq = np.vstack([np.ones(len(ang)), _angles_to_bloch(ang).T])
    w_exact = np.linalg.lstsq(A_eq, np.array([1.0, 0, 0, 0]), rcond=None)[0]
    if np.all(w_exact >= 0) and np.allclose(A_eq @ w_exact, [1, 0, 0, 0], atol=1e-13):
        w = w_exact
    vecs = _angles_to_vec(ang) * np.sqrt(2 * w)[:, None]
    ens = Ensemble.from_unnormalized(vecs @ M, rho)
    # score the final ensemble directly; the quartic is only a search proxy
    return float(ens.weights @ sqrt_tau3(ens.states)), ens


# --- three-tangle roof -----------------------------------------------------------

def _candidate_tri(candidates, rho):
    best, ens = np.inf, None
    for c in candidates:
        e = _as_ensemble(c, rho)
        val = float(e.weights @ sqrt_tau3(e.states))
        if val < best:
            best, ens = val, e
    return best, ens


def estimate_three_tangle_roof(rho, opts: RoofOptions | None = None, candidates=()):
    """Roof estimate of the three-tangle with provenance.

    The returned value is ``(min sum_i p_i sqrt(tau_3(phi_i)))^2``.
    """
    opts = opts or RoofOptions()
    m = _matrix(rho, 3)
    M = support(m)
    r = M.shape[0]
    if r == 0:
        return RoofEstimate(0.0, True, "zero")
    if r == 1:
        val = float(tri_objective(M)[()])
        return RoofEstimate(val**2, True, "pure", Ensemble.from_unnormalized(M, m))

    results = []
    floor = OBJECTIVE_FLOOR
    if r == 2:
        val, ens = three_tangle_hull(m)
        results.append((val, True, "hull", ens))
        floor = max(floor, val)
    res, ens, _ = _search_ensembles(
        M, lambda members, extra: tri_objective(members), 0, opts, m, floor
    )
    results.append((res.fun, res.converged, "pattern", ens))
    cval, cens = _candidate_tri(candidates, m)
    if cens is not None:
        results.append((cval, True, "candidate", cens))
    val, conv, method, ens = min(results, key=lambda t: t[0])
    return RoofEstimate(float(val) ** 2, conv, method, ens)


def three_tangle_roof(rho, opts: RoofOptions | None = None, candidates=()) -> float:
    """Upper-bound estimate of the mixed-state three-tangle."""
    return estimate_three_tangle_roof(rho, opts, candidates).value


# --- new two-tangle roof ----------------------------------------------------------

def _symmetric_forms():
    """``S_A, S_B, S_C`` with ``X(phi) = phi^T S_X phi`` for the pair-12 triple."""
    eye = np.eye(8)
    diag = np.array(_pair_triple(eye))
    out = []
    for k in range(3):
        S = np.zeros((8, 8), dtype=complex)
        for i in range(8):
            for j in range(i + 1, 8):
                val = _pair_triple(eye[i] + eye[j])[k] - diag[k, i] - diag[k, j]
                S[i, j] = S[j, i] = 0.5 * val
        out.append(S)
    return out


_S_ABC = _symmetric_forms()


def _takagi_gap(K):
    s = np.linalg.svd(K, compute_uv=False)
    return np.maximum(0.0, s[..., 0] - s[..., 1:].sum(axis=-1))


def _k_matrices(M):
    return [M @ S @ M.T for S in _S_ABC]


def _gap_at(K, ang):
    KA, KB, KC = K
    th = ang[:, 0][:, None, None]
    e = np.exp(1j * ang[:, 1])[:, None, None]
    Ku = np.cos(2 * th) * KB - np.sin(2 * th) * (e.conj() * KC - e * KA)
    return _takagi_gap(Ku)


def new_two_tangle_closed(M, n_theta=13, n_phi=24):
    """``2 min_U`` of the closed-form roof of ``|T12(U phi)|``.

    Returns ``(value, theta, phi)``. The grid always contains ``theta = 0``
    so the value never exceeds the identity-unitary roof.
    """
    K = _k_matrices(M)
    th = np.linspace(0, np.pi / 2, n_theta)
    ph = np.linspace(0, 2 * np.pi, n_phi, endpoint=False)
    grid = np.array([(a, b) for a in th for b in ph])
    g = _gap_at(K, grid)
    order = np.argsort(g)[:4]
    if g[order[0]] <= OBJECTIVE_FLOOR:
        a = grid[order[0]]
        return 2 * float(g[order[0]]), float(a[0]), float(a[1])
    res = pattern_search(lambda a: _gap_at(K, a), grid[order], tol=1e-10,
                         max_iter=400, step=0.1, max_step=0.5)
    return 2 * res.fun, float(res.x[0]), float(res.x[1])


def _member_triple(phi):
    A, B, C = _pair_triple(phi)
    return abc_core.InvariantTriple(complex(A), complex(B), complex(C))


def pair_zeroing_value(M):
    """Two-member candidate: zero ``T12`` on one eigen-member with a qubit-3
    unitary and pay ``2|T12|`` of the other; minimum over both orders and
    both roots. Returns ``inf`` when no root can be formed."""
    if M.shape[0] != 2:
        return np.inf
    best = np.inf
    for a, b in ((0, 1), (1, 0)):
        ta, tb = _member_triple(M[a]), _member_triple(M[b])
        try:
            roots = abc_core.zero_b_root(ta)
        except ArithmeticError:
            roots = (abc_core.zero_b_direct(ta),)
        for x in roots:
            best = min(best, 2 * abs(abc_core.transform(tb, x).B))
    return best


def _candidate_new(candidates, rho):
    best, ens = np.inf, None
    for c in candidates:
        e = _as_ensemble(c, rho)
        val = float(e.weights @ new_objective(e.states[:, None, :], 0.0, 0.0))
        if val < best:
            best, ens = val, e
    return best, ens


def new_two_tangle_fixed(M):
    """Exact roof of ``2|T12|`` with the spectator left alone.

    ``T12(phi) = phi^T S_B phi`` is a symmetric quadratic form, so its convex
    roof over decompositions of ``M^H M`` is the Takagi gap
    ``max(0, s_1 - s_2 - ...)`` of ``M S_B M^T``.
    """
    return 2 * float(_takagi_gap(M @ _S_ABC[1] @ M.T))


SPECTATOR_MODES = ("fixed", "free")


def estimate_new_two_tangle_roof(rho, pair="12", opts: RoofOptions | None = None,
                                 candidates=(), spectator="fixed"):
    """Roof of ``2|T_pair|`` over decompositions of ``rho``.

    ``pair`` is relative to the three qubits of ``rho``: ``"12"`` pairs its
    first qubit with the second (spectator third), ``"13"`` with the third
    (spectator second).

    With ``spectator="fixed"`` the value is the exact Takagi-gap roof. With
    ``spectator="free"`` it is additionally minimized over one common
    unitary on the spectator qubit, which makes it vanish on generic rank-2
    marginals. Candidate ensembles are scored with the spectator untouched.
    """
    if spectator not in SPECTATOR_MODES:
        raise ValueError(f"spectator must be one of {SPECTATOR_MODES}")
    opts = opts or RoofOptions()
    m = _pair_matrix(rho, pair)
    M = support(m)
    r = M.shape[0]
    if r == 0:
        return RoofEstimate(0.0, True, "zero")
    results = [(new_two_tangle_fixed(M), True, "closed-form", None)]
    if spectator == "free":
        closed, th, ph = new_two_tangle_closed(M)
        results.append((closed, True, "closed-form-free", None))
        if r == 2:
            results.append((pair_zeroing_value(M), True, "pair-zeroing", None))
        # below this the closed form is zero up to round-off and a search is moot
        if closed > NEW_SEARCH_THRESHOLD:
            res, ens, _ = _search_ensembles(
                M, lambda members, ex: new_objective(members, ex[:, 0], ex[:, 1]), 2,
                opts, m, max(OBJECTIVE_FLOOR, closed),
            )
            results.append((res.fun, res.converged, "pattern", ens))
    if candidates:
        cm = [_as_ensemble(c, rho) for c in candidates]
        if pair == "13":
            cm = [Ensemble(e.weights, _swap_states23(e.states), m) for e in cm]
        cval, cens = _candidate_new(cm, m)
        results.append((cval, True, "candidate", cens))
    val, conv, method, ens = min(results, key=lambda t: t[0])
    if ens is not None and pair == "13":
        ens = Ensemble(ens.weights, _swap_states23(ens.states), _matrix(rho))
    return RoofEstimate(float(max(val, 0.0)), conv, method, ens)


def _swap_states23(states):
    s = np.asarray(states).reshape(-1, 2, 2, 2)
    return s.transpose(0, 1, 3, 2).reshape(-1, 8)


def new_two_tangle_roof(rho, pair="12", opts: RoofOptions | None = None,
                        candidates=(), spectator="fixed") -> float:
    """New two-tangle of the pair; see :func:`estimate_new_two_tangle_roof`."""
    return estimate_new_two_tangle_roof(rho, pair, opts, candidates, spectator).value


def with_restarts(opts: RoofOptions, restarts: int) -> RoofOptions:
    return replace(opts, restarts=restarts)
