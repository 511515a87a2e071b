"""Algebra of an (A, B, C) invariant triple under a spectator-qubit unitary.

A unitary ``[[1, -x*], [x, 1]] / sqrt(1 + |x|^2)`` on the spectator qubit
mixes the triple as

    A(x) = (A - x* B + x*^2 C) / (1 + |x|^2)
    B(x) = (B (1 - |x|^2) - 2 x* C + 2 x A) / (1 + |x|^2)
    C(x) = (C + x B + x^2 A) / (1 + |x|^2)

leaving ``I1 = |A|^2 + |B|^2/2 + |C|^2`` and ``|B^2 - 4AC|`` unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCError, DegenerateDenominatorError, NegativeBoundError

SMALL = 1e-12


@dataclass(frozen=True)
class InvariantTriple:
    A: complex
    B: complex
    C: complex

    def __iter__(self):
        return iter((self.A, self.B, self.C))

    @property
    def discriminant(self):
        return self.B**2 - 4 * self.A * self.C


def transform_arrays(A, B, C, x):
    """Broadcasting version of :func:`transform` on raw arrays."""
    x = np.asarray(x, dtype=complex)
    xc = x.conj()
    r2 = np.abs(x) ** 2
    s = 1 + r2
    return (
        (A - xc * B + xc**2 * C) / s,
        (B * (1 - r2) - 2 * xc * C + 2 * x * A) / s,
        (C + x * B + x**2 * A) / s,
    )


def transform(t: InvariantTriple, x) -> InvariantTriple:
    return InvariantTriple(*(complex(v) for v in transform_arrays(*t, complex(x))))


def transform_angle(t: InvariantTriple, theta, phi) -> InvariantTriple:
    """Same map with ``x = exp(i phi) tan(theta)``; ``theta`` may reach pi/2."""
    A, B, C = t
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    ec = e.conjugate()
    return InvariantTriple(
        c * c * A - c * s * ec * B + s * s * ec * ec * C,
        np.cos(2 * theta) * B - np.sin(2 * theta) * (ec * C - e * A),
        c * c * C + c * s * e * B + s * s * e * e * A,
    )


def i1(t: InvariantTriple) -> float:
    return float(abs(t.A) ** 2 + 0.5 * abs(t.B) ** 2 + abs(t.C) ** 2)


def i2(t: InvariantTriple) -> float:
    return float(abs(t.discriminant))


def x0_root(t: InvariantTriple):
    """Both values of ``x`` with ``A(x) = 0``, smaller ``|x|`` first.

    Raises
    ------
    DegenerateCError
        When ``|C| < 1e-12`` while ``A`` is not already zero. The caller is
        expected to rotate the spectator qubit at random and retry. When
        ``A`` and ``C`` both vanish the triple is already reduced and
        ``(0, 0)`` is returned.
    """
    A, B, C = t
    if abs(C) < SMALL:
        if abs(A) < SMALL:
            return 0j, 0j
        raise DegenerateCError("|C| below 1e-12; re-randomize the spectator and retry")
    root = np.sqrt(complex(t.discriminant))
    roots = [np.conj((B + sg * root) / (2 * C)) for sg in (1, -1)]
    roots.sort(key=abs)
    return complex(roots[0]), complex(roots[1])


def zero_b_root(t: InvariantTriple):
    """Both values of ``x`` with ``B(x) = 0``, smaller ``|x|`` first.

    Uses ``x* = (|A|^2 - |C|^2 +- sqrt(J0)/4) / (C B* + A* B)`` with
    ``J0 = 16 I1^2 - 4 I2^2``. Since ``J0 / 16 = (|A|^2 - |C|^2)^2 + |den|^2``
    the square root is taken in that form, and the two values of ``x*``
    multiply to ``-conj(den)/den``, which gives the smaller one without
    cancellation.
    """
    A, B, C = t
    if abs(B) < SMALL:
        return 0j, 0j
    den = C * np.conj(B) + np.conj(A) * B
    if abs(den) < SMALL:
        raise DegenerateDenominatorError("vanishing denominator; rotate and retry")
    num0 = abs(A) ** 2 - abs(C) ** 2
    big = num0 + np.copysign(np.hypot(num0, abs(den)), num0)
    large = np.conj(big / den)
    small = np.conj(-np.conj(den) / big)
    return complex(small), complex(large)


def zero_b_direct(t: InvariantTriple) -> complex:
    """A value of ``x`` with ``B(x) = 0`` that exists even when the quotient
    form above is 0/0 (for instance ``A = C = 0``).

    With ``x = exp(i phi) tan(theta)`` the condition reads
    ``cos(2 theta) B = sin(2 theta) K(phi)``, ``K = exp(-i phi) C - exp(i phi) A``.
    ``phi`` is chosen so that ``B / K`` is real, then ``theta`` follows.
    """
    A, B, C = t
    if abs(B) < SMALL:
        return 0j
    p, q = B * np.conj(C), B * np.conj(A)
    phi = float(np.arctan2(-(p.imag - q.imag), p.real + q.real))
    K = np.exp(-1j * phi) * C - np.exp(1j * phi) * A
    if abs(K) < SMALL * max(1.0, abs(B)):
        theta = np.pi / 4
    else:
        theta = 0.5 * np.arctan((B / K).real)
    return complex(np.exp(1j * phi) * np.tan(theta))


def tau_upper(t: InvariantTriple) -> float:
    """Upper bound ``4 I1 - 2 I2`` on the squared two-tangle of the pair."""
    val = 4 * i1(t) - 2 * i2(t)
    if val < -1e-10:
        raise NegativeBoundError(f"4*I1 - 2*I2 = {val:.3e} is negative")
    return max(val, 0.0)


def reduced_sum(t: InvariantTriple, x) -> float:
    """``2(|A(x)| + |C(x)|)``, the quantity the bound minimizes over ``x``."""
    u = transform(t, x)
    return 2 * (abs(u.A) + abs(u.C))
