"""Gauge slices of the reduced Hermitian matrix flow.

Two slices of the constraint surface [X, P] = i g (v v^T - 1), v = (1...1):

  position-diagonal    Q_jk = q_j d_jk,
                       L_jk = p_j d_jk + i g (1 - d_jk) / (q_j - q_k)

  momentum-diagonal    Qd_jk = phi_j d_jk - i g (1 - d_jk) / (lam_j - lam_k)
                       Ld_jk = lam_j d_jk

The commuting integrals are H_k = tr(L^k) / k; H_2 is the physical
Hamiltonian (kinetic energy plus inverse-square pair repulsion).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONFIG, KOutOfRange, ValidationError

__all__ = [
    "Gauge",
    "LaxPair",
    "build_lax",
    "build_dual",
    "hamiltonian",
    "hamiltonian_direct",
    "momentum_map_residual",
]


class Gauge(enum.Enum):
    POSITION_DIAGONAL = "position_diagonal"
    MOMENTUM_DIAGONAL = "momentum_diagonal"


def _hermitian_defect(m):
    return np.linalg.norm(m - m.conj().T)


def _check_real_descending_diagonal(m, label, tol):
    scale = 1.0 + np.linalg.norm(m)
    off = m - np.diag(np.diag(m))
    if np.abs(off).max(initial=0.0) > tol * scale:
        raise ValidationError(f"{label} must be diagonal in this gauge")
    d = np.diag(m)
    if np.abs(d.imag).max(initial=0.0) > tol * scale:
        raise ValidationError(f"{label} diagonal must be real")
    dr = d.real
    if dr.size > 1 and not np.all(dr[:-1] > dr[1:]):
        raise ValidationError(f"{label} diagonal must be strictly decreasing")


@dataclass(frozen=True, eq=False)
class LaxPair:
    """Hermitian matrix pair (X-like, P-like) on one of the two gauge slices."""

    gauge: Gauge
    x_like: np.ndarray
    p_like: np.ndarray
    g: float

    def __post_init__(self):
        x = np.array(self.x_like, dtype=complex)
        p = np.array(self.p_like, dtype=complex)
        if x.shape != p.shape or x.ndim != 2 or x.shape[0] != x.shape[1]:
            raise ValidationError("x_like and p_like must be square matrices of equal size")
        tol = DEFAULT_CONFIG.identity_tol
        for m, label in ((x, "x_like"), (p, "p_like")):
            if _hermitian_defect(m) > tol * (1.0 + np.linalg.norm(m)):
                raise ValidationError(f"{label} is not Hermitian")
        if self.gauge is Gauge.POSITION_DIAGONAL:
            _check_real_descending_diagonal(x, "x_like", tol)
        elif self.gauge is Gauge.MOMENTUM_DIAGONAL:
            _check_real_descending_diagonal(p, "p_like", tol)
        else:
            raise ValidationError(f"unknown gauge {self.gauge!r}")
        x.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "x_like", x)
        object.__setattr__(self, "p_like", p)
        object.__setattr__(self, "g", float(self.g))

    @property
    def n(self):
        return self.x_like.shape[0]


def _coupling_matrix(x, g):
    """Off-diagonal matrix g / (x_j - x_k); exactly antisymmetric."""
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    k = g / diff
    np.fill_diagonal(k, 0.0)
    return k


def build_lax(pt):
    """Position-diagonal pair (Q, L) of a phase-space point.

    L is Hermitian by construction: the diagonal is real and the
    off-diagonal part is i times an exactly antisymmetric real matrix.
    """
    q_mat = np.diag(pt.q).astype(complex)
    l_mat = np.diag(pt.p).astype(complex) + 1j * _coupling_matrix(pt.q, pt.g)
    return LaxPair(gauge=Gauge.POSITION_DIAGONAL, x_like=q_mat, p_like=l_mat, g=pt.g)


def build_dual(aa):
    """Momentum-diagonal pair (Qd, Ld) of an action-angle point.

    The off-diagonal sign of Qd is opposite to that of L in the
    position-diagonal gauge.
    """
    qd = np.diag(aa.phi).astype(complex) - 1j * _coupling_matrix(aa.lam, aa.g)
    ld = np.diag(aa.lam).astype(complex)
    return LaxPair(gauge=Gauge.MOMENTUM_DIAGONAL, x_like=qd, p_like=ld, g=aa.g)


def hamiltonian(pt, k):
    """k-th commuting integral H_k = tr(L^k) / k, for k in 1..n."""
    if not 1 <= k <= pt.n:
        raise KOutOfRange(f"k must lie in 1..{pt.n}, got {k}")
    l_mat = build_lax(pt).p_like
    return float(np.trace(np.linalg.matrix_power(l_mat, k)).real) / k


def hamiltonian_direct(pt):
    """H_2 evaluated from its defining formula, as an independent cross-check:

        H = (1/2) sum_j p_j^2 + g^2 sum_{j<k} (q_j - q_k)^{-2}
    """
    kinetic = 0.5 * float(np.dot(pt.p, pt.p))
    potential = 0.0
    for j in range(pt.n):
        for k in range(j + 1, pt.n):
            potential += 1.0 / (pt.q[j] - pt.q[k]) ** 2
    return kinetic + pt.g**2 * potential


def momentum_map_residual(pair):
    """Frobenius norm of [X, P] - i g (v v^T - 1) with v the all-ones vector.

    Zero (to rounding) for pairs produced by build_lax/build_dual; for n = 1
    both sides vanish identically.
    """
    x, p = pair.x_like, pair.p_like
    n = pair.n
    target = 1j * pair.g * (np.ones((n, n)) - np.eye(n))
    return float(np.linalg.norm(x @ p - p @ x - target))
