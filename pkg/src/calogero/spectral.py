"""Characteristic and adjugate polynomials of the Lax matrix, and the
spectral Darboux coordinates built from them.

For a Hermitian n x n matrix L write

    A(z)   = det(z 1 - L)                   (monic, real coefficients)
    adj(z) = adj(z 1 - L) = sum_k z^k M_k   (matrix coefficients M_k)

and, for a phase-space point with position matrix Q and the all-ones
vector v,

    C(z) = tr(Q adj(z 1 - L) v v^T) = v^T Q adj(z 1 - L) v
    D(z) = tr(Q adj(z 1 - L)).

At the (simple) eigenvalues lam_k of L, Sklyanin's coordinates are

    theta_k = C(lam_k) / A'(lam_k),     mu_k = D(lam_k) / A'(lam_k),

related by theta_k = mu_k + i g sum_{l != k} 1/(lam_k - lam_l) and by the
polynomial identity C(z) - D(z) = (i g / 2) A''(z), valid for every z.

The adjugate is computed by the Faddeev-LeVerrier recursion rather than
via A(z) (z 1 - L)^{-1}: the coordinates are evaluated at z = lam_k,
where the resolvent is singular but the adjugate stays finite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONFIG, DegenerateSpectrum, ValidationError
from .lax import build_lax

__all__ = [
    "SpectralData",
    "SpectralCoordinates",
    "adjugate_polynomial",
    "adjugate_eval",
    "eval_A",
    "eval_C",
    "eval_D",
    "sklyanin_coordinates",
    "theorem_residual",
    "residual_scale",
    "coordinates_via_projectors",
    "eigenbasis_diagonal",
    "angle_correction",
    "eigh_descending",
    "check_simple_spectrum",
]


@dataclass(frozen=True, eq=False)
class SpectralData:
    """Coefficients of A(z) (ascending, a_coeffs[n] = 1) and of the adjugate
    matrix polynomial (adj_coeffs[k] is the matrix weight of z^k)."""

    n: int
    a_coeffs: np.ndarray
    adj_coeffs: np.ndarray

    def __post_init__(self):
        self.a_coeffs.setflags(write=False)
        self.adj_coeffs.setflags(write=False)


@dataclass(frozen=True, eq=False)
class SpectralCoordinates:
    """Actions lam (descending) with the conjugate spectral values.

    theta is complex; its real part equals mu and its imaginary part
    (stored again in f_im) is g * sum_{l != k} 1/(lam_k - lam_l).
    """

    n: int
    g: float
    lam: np.ndarray
    theta: np.ndarray
    mu: np.ndarray
    f_im: np.ndarray


def _require_hermitian(m, config):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError("expected a square matrix")
    if np.linalg.norm(m - m.conj().T) > config.identity_tol * (1.0 + np.linalg.norm(m)):
        raise ValidationError("matrix is not Hermitian")
    return m


def eigh_descending(m):
    """Eigenvalues (descending) and matching eigenvector columns of a Hermitian matrix."""
    vals, vecs = np.linalg.eigh(m)
    return vals[::-1], vecs[:, ::-1]


def check_simple_spectrum(lam, config=DEFAULT_CONFIG):
    """Reject spectra whose minimal gap falls below the configured threshold.

    The threshold is relative to the spectral diameter (plus one, so that
    tightly clustered spectra near zero are still screened).
    """
    lam = np.asarray(lam, dtype=float)
    if lam.size < 2:
        return
    gaps = lam[:-1] - lam[1:]
    diameter = lam[0] - lam[-1]
    floor = config.eig_gap_tol * (diameter + 1.0)
    if gaps.min() < floor:
        raise DegenerateSpectrum(
            f"minimal eigenvalue gap {gaps.min():.3e} below threshold {floor:.3e}"
        )


def adjugate_polynomial(l_mat, config=DEFAULT_CONFIG):
    """Characteristic polynomial and adjugate expansion via Faddeev-LeVerrier.

    Starting from M_{n-1} = 1, each step multiplies by L and applies a trace
    correction; the coefficients of A(z) fall out alongside the matrix
    weights M_k of adj(z 1 - L). All arithmetic is polynomial in L, so the
    result stays finite at eigenvalues of L.
    """
    l_mat = _require_hermitian(l_mat, config)
    n = l_mat.shape[0]
    a = np.zeros(n + 1)
    a[n] = 1.0
    adj = np.zeros((n, n, n), dtype=complex)
    b = np.eye(n, dtype=complex)
    for j in range(n):
        adj[n - 1 - j] = b
        lb = l_mat @ b
        a[n - 1 - j] = -np.trace(lb).real / (j + 1)
        b = lb + a[n - 1 - j] * np.eye(n)
    return SpectralData(n=n, a_coeffs=a, adj_coeffs=adj)


def eval_A(sd, z, derivative=0):
    """Horner evaluation of A, A' or A'' at a (complex) point z."""
    if derivative not in (0, 1, 2):
        raise ValidationError(f"derivative must be 0, 1 or 2, got {derivative}")
    b = c = d = 0j
    for coeff in sd.a_coeffs[::-1]:
        d = d * z + c
        c = c * z + b
        b = b * z + coeff
    if derivative == 0:
        return b
    if derivative == 1:
        return c
    return 2.0 * d


def adjugate_eval(sd, z):
    """adj(z 1 - L) at a point z, by matrix Horner over the stored weights."""
    out = np.array(sd.adj_coeffs[sd.n - 1])
    for k in range(sd.n - 2, -1, -1):
        out = out * z + sd.adj_coeffs[k]
    return out


def _q_adj(pt, sd, z):
    """Q adj(z 1 - L); Q is diagonal so this scales the rows of the adjugate."""
    return pt.q[:, None] * adjugate_eval(sd, z)


def eval_C(pt, z, config=DEFAULT_CONFIG):
    """C(z) = v^T Q adj(z 1 - L) v, i.e. the sum of all entries of Q adj(z 1 - L)."""
    sd = adjugate_polynomial(build_lax(pt).p_like, config)
    return complex(_q_adj(pt, sd, z).sum())


def eval_D(pt, z, config=DEFAULT_CONFIG):
    """D(z) = tr(Q adj(z 1 - L))."""
    sd = adjugate_polynomial(build_lax(pt).p_like, config)
    return complex(np.trace(_q_adj(pt, sd, z)))


def angle_correction(lam, g):
    """The shift g * sum_{l != k} 1/(lam_k - lam_l) separating Im(theta) from mu.

    Depends on the actions alone; its Jacobian is symmetric, which is what
    makes theta and mu conjugate to lam simultaneously.
    """
    lam = np.asarray(lam, dtype=float)
    diff = lam[:, None] - lam[None, :]
    np.fill_diagonal(diff, 1.0)
    inv = 1.0 / diff
    np.fill_diagonal(inv, 0.0)
    return g * inv.sum(axis=1)


def sklyanin_coordinates(pt, config=DEFAULT_CONFIG):
    """Spectral coordinates (lam, theta, mu) through the adjugate polynomial.

    Requires a simple spectrum: A'(lam_k) is a product of eigenvalue gaps,
    and the divisions in theta_k and mu_k lose all digits when gaps close.
    """
    l_mat = build_lax(pt).p_like
    lam = np.linalg.eigvalsh(l_mat)[::-1]
    check_simple_spectrum(lam, config)
    sd = adjugate_polynomial(l_mat, config)
    theta = np.empty(pt.n, dtype=complex)
    mu = np.empty(pt.n)
    for k in range(pt.n):
        qa = _q_adj(pt, sd, lam[k])
        a_prime = eval_A(sd, lam[k], derivative=1)
        theta[k] = qa.sum() / a_prime
        mu[k] = (np.trace(qa) / a_prime).real
    lam = lam.copy()
    for arr in (lam, theta, mu):
        arr.setflags(write=False)
    f_im = theta.imag.copy()
    f_im.setflags(write=False)
    return SpectralCoordinates(n=pt.n, g=pt.g, lam=lam, theta=theta, mu=mu, f_im=f_im)


def coordinates_via_projectors(pt, config=DEFAULT_CONFIG):
    """Same coordinates through eigenvector projectors, as an independent path.

    For a simple eigenvalue, adj(lam_k 1 - L) = A'(lam_k) w_k w_k^+ with unit
    eigenvector w_k, so

        mu_k = w_k^+ Q w_k,    theta_k = (v^T Q w_k)(w_k^+ v).

    The arbitrary eigenvector phase cancels in both bilinear forms.
    """
    l_mat = build_lax(pt).p_like
    lam, vecs = eigh_descending(l_mat)
    check_simple_spectrum(lam, config)
    theta = np.empty(pt.n, dtype=complex)
    mu = np.empty(pt.n)
    for k in range(pt.n):
        w = vecs[:, k]
        mu[k] = np.vdot(w, pt.q * w).real
        theta[k] = (pt.q @ w) * np.conj(w).sum()
    lam = lam.copy()
    for arr in (lam, theta, mu):
        arr.setflags(write=False)
    f_im = theta.imag.copy()
    f_im.setflags(write=False)
    return SpectralCoordinates(n=pt.n, g=pt.g, lam=lam, theta=theta, mu=mu, f_im=f_im)


def eigenbasis_diagonal(m, companion, config=DEFAULT_CONFIG):
    """Eigenvalues of m (descending) paired with the diagonal matrix elements
    of the companion in m's eigenbasis, w_k^+ N w_k.

    This is the gauge-invariant quantity tr(N adj(z 1 - M)) / A'(z) at
    z = lam_k, evaluated through eigenvectors for backward stability; both
    duality directions reduce to it.
    """
    m = _require_hermitian(m, config)
    lam, vecs = eigh_descending(m)
    check_simple_spectrum(lam, config)
    vals = np.array([np.vdot(vecs[:, k], companion @ vecs[:, k]).real for k in range(m.shape[0])])
    return lam, vals


def residual_scale(pt, z):
    """Magnitude scale (1+|z|)^(n-1) (1+max|q|) (1+||L||_F)^(n-1) used to
    normalize residuals of the polynomial identity checks."""
    l_norm = np.linalg.norm(build_lax(pt).p_like)
    q_norm = np.abs(pt.q).max()
    return (1.0 + abs(z)) ** (pt.n - 1) * (1.0 + q_norm) * (1.0 + l_norm) ** (pt.n - 1)


def theorem_residual(pt, z, config=DEFAULT_CONFIG):
    """|C(z) - D(z) - (i g / 2) A''(z)|; zero in exact arithmetic for every z."""
    sd = adjugate_polynomial(build_lax(pt).p_like, config)
    qa = _q_adj(pt, sd, z)
    c_val = qa.sum()
    d_val = np.trace(qa)
    a_second = eval_A(sd, z, derivative=2)
    return float(abs(c_val - d_val - 0.5j * pt.g * a_second))
