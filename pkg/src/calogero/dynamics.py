"""Exact time evolution and scattering asymptotics.

Every flow H_k = (1/k) sum_j lam_j^k is linear in action-angle variables:
the actions freeze and the angles drift with rate lam^(k-1). Evolution is
therefore a round trip through the duality maps with a shifted angle, and
is exact up to linear algebra rounding; no integrator is involved.

For the k = 2 flow there is a second, independent route: the position
matrix of the unreduced free flow grows linearly, so the positions at
time t are the (sorted) eigenvalues of Q + t L.
"""

from __future__ import annotations

import numpy as np

from .core import DEFAULT_CONFIG, ActionAnglePoint, KOutOfRange, ValidationError
from .duality import backward_map, forward_map
from .lax import build_lax
from .spectral import check_simple_spectrum

__all__ = ["evolve", "evolve_projection", "scattering_data"]


def evolve(pt, t, k=2, config=DEFAULT_CONFIG):
    """Evolve a point for time t under the flow of H_k.

    Only k = 1..n give independent integrals, but the angle shift is well
    defined for any k >= 1 (H_k for k > n is a function of the first n),
    and the physical k = 2 flow must stay available at n = 1.
    """
    if k < 1:
        raise KOutOfRange(f"flow index k must be a positive integer, got {k}")
    aa = forward_map(pt, config)
    shifted = ActionAnglePoint(n=pt.n, g=pt.g, lam=aa.lam, phi=aa.phi + t * aa.lam ** (k - 1))
    return backward_map(shifted, config)


def evolve_projection(pt, t, config=DEFAULT_CONFIG):
    """Positions of the H_2 flow at time t as eigenvalues of Q + t L.

    Raises DegenerateSpectrum when eigenvalues of Q + t L collide at the
    requested time (a particle collision in this gauge); for g != 0 generic
    points never reach such times.
    """
    pair = build_lax(pt)
    positions = np.linalg.eigvalsh(pair.x_like + t * pair.p_like)[::-1]
    check_simple_spectrum(positions, config)
    return positions.copy()


def scattering_data(pt, t_large, config=DEFAULT_CONFIG):
    """Finite-time estimates of the asymptotic momenta and offsets.

    momenta_j = (q_j(2 t) - q_j(t)) / t and offsets_j = q_j(t) - t momenta_j,
    both at t = t_large. As t_large grows the momenta converge to the
    actions lam (descending; the outgoing particle order matches the
    action order).
    """
    if not t_large > 0:
        raise ValidationError("t_large must be positive")
    q_once = evolve(pt, t_large, k=2, config=config).q
    q_twice = evolve(pt, 2.0 * t_large, k=2, config=config).q
    momenta = (q_twice - q_once) / t_large
    offsets = q_once - t_large * momenta
    return momenta, offsets
