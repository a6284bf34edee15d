"""Action-angle duality maps.

The two gauge slices expose the same reduced point, so passing between
them is pure spectral data: diagonalize one matrix of the pair and read
the conjugate variables off the other in that eigenbasis.

    forward:  lam = spec(L),  phi_k = w_k^+ Q w_k   (= D(lam_k)/A'(lam_k))
    backward: q = spec(Qd),   p_k = u_k^+ Ld u_k

Both use descending eigenvalue order, so q stays in the configuration
domain and lam in its dual copy without any permutation tracking. The
diagonalizing unitaries themselves are never constructed; the formulas
are invariant under the eigenvector phases.
"""

from __future__ import annotations

from .core import DEFAULT_CONFIG, ActionAnglePoint, PhaseSpacePoint
from .lax import build_dual, build_lax
from .spectral import eigenbasis_diagonal

__all__ = ["forward_map", "backward_map"]


def forward_map(pt, config=DEFAULT_CONFIG):
    """Map a phase-space point to its action-angle coordinates."""
    pair = build_lax(pt)
    lam, phi = eigenbasis_diagonal(pair.p_like, pair.x_like, config)
    return ActionAnglePoint(n=pt.n, g=pt.g, lam=lam, phi=phi)


def backward_map(aa, config=DEFAULT_CONFIG):
    """Map action-angle coordinates back to the phase space.

    Mirrors the forward map with the roles of the matrices exchanged:
    positions are the spectrum of Qd, momenta the matching diagonal
    values of Ld.
    """
    pair = build_dual(aa)
    q, p = eigenbasis_diagonal(pair.x_like, pair.p_like, config)
    return PhaseSpacePoint(n=aa.n, g=aa.g, q=q, p=p)
