"""Domain types for the rational Calogero-Moser system.

Positions live in the ordered configuration domain

    C = {q in R^n : q_1 > q_2 > ... > q_n},

and the same descending convention is used for the actions (Lax
eigenvalues) and for every eigenvalue array produced by this package.
Keeping one ordering everywhere avoids permutation bookkeeping when
points travel through the duality maps and back.

All types are immutable after construction (arrays are made read-only),
so values can be shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CalogeroError",
    "ValidationError",
    "OrderingViolation",
    "NonFinite",
    "KOutOfRange",
    "NumericalError",
    "DegenerateSpectrum",
    "StepLeavesDomain",
    "NumericConfig",
    "DEFAULT_CONFIG",
    "PhaseSpacePoint",
    "ActionAnglePoint",
    "validate_phase_point",
    "random_phase_point",
    "random_action_angle_point",
    "state_to_dict",
    "state_from_dict",
    "dump_state",
    "parse_state",
]


class CalogeroError(Exception):
    """Base class for everything raised deliberately by this package."""


class ValidationError(CalogeroError):
    """Rejected input: bad ordering, non-finite entries, broken state schema."""


class OrderingViolation(ValidationError):
    """A coordinate array that must be strictly decreasing is not."""


class NonFinite(ValidationError):
    """NaN or infinity in an input array."""


class KOutOfRange(ValidationError):
    """Integral index k outside 1..n."""


class NumericalError(CalogeroError):
    """A computation on valid input that cannot be carried out reliably."""


class DegenerateSpectrum(NumericalError):
    """Eigenvalue gap below tolerance; spectral denominators lose all digits."""


class StepLeavesDomain(NumericalError):
    """A finite-difference step cannot be kept inside the ordered domain."""


@dataclass(frozen=True)
class NumericConfig:
    """Numerical tolerances shared across the package.

    eig_gap_tol: minimum admissible eigenvalue gap, relative to the
        spectral diameter; below it spectral coordinates are refused.
    fd_step: finite-difference step scale; the per-coordinate step is
        fd_step * (1 + |x|).
    identity_tol: residual tolerance for relations that are exact in
        real arithmetic, relative to a stated scale per check.
    """

    eig_gap_tol: float = 1e-9
    fd_step: float = 1e-5
    identity_tol: float = 1e-10

    def __post_init__(self):
        if not (self.eig_gap_tol > 0 and self.fd_step > 0 and self.identity_tol > 0):
            raise ValueError("all tolerances must be positive")
        if not self.fd_step < 1:
            raise ValueError("fd_step must be < 1")


DEFAULT_CONFIG = NumericConfig()


def _clean_array(values, name):
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be a one-dimensional real array")
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains NaN or infinite entries")
    arr.setflags(write=False)
    return arr


def _require_descending(arr, name):
    if arr.size > 1 and not np.all(arr[:-1] > arr[1:]):
        raise OrderingViolation(f"{name} must be strictly decreasing, got {arr.tolist()}")


def _clean_coupling(g):
    g = float(g)
    if not np.isfinite(g):
        raise NonFinite("coupling g is not finite")
    return g


@dataclass(frozen=True, eq=False)
class PhaseSpacePoint:
    """A point of T*C: positions q (strictly decreasing), momenta p, coupling g."""

    n: int
    g: float
    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("particle count n must be >= 1")
        q = _clean_array(self.q, "q")
        p = _clean_array(self.p, "p")
        if len(q) != self.n or len(p) != self.n:
            raise ValidationError(f"q and p must both have length n={self.n}")
        _require_descending(q, "q")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "g", _clean_coupling(self.g))


@dataclass(frozen=True, eq=False)
class ActionAnglePoint:
    """Dual-side point: actions lam (strictly decreasing), angles phi, coupling g."""

    n: int
    g: float
    lam: np.ndarray
    phi: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("particle count n must be >= 1")
        lam = _clean_array(self.lam, "lambda")
        phi = _clean_array(self.phi, "phi")
        if len(lam) != self.n or len(phi) != self.n:
            raise ValidationError(f"lambda and phi must both have length n={self.n}")
        _require_descending(lam, "lambda")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "g", _clean_coupling(self.g))


def validate_phase_point(q, p, g):
    """Build a PhaseSpacePoint from raw arrays, enforcing the domain invariants.

    Raises OrderingViolation when q is not strictly decreasing (the point
    would lie outside C) and NonFinite on NaN/Inf input.
    """
    q = np.atleast_1d(np.asarray(q, dtype=float))
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if len(q) != len(p):
        raise ValidationError("q and p must have equal length")
    return PhaseSpacePoint(n=len(q), g=g, q=q, p=p)


def random_phase_point(seed, n, g, min_gap=0.5):
    """Deterministic random point with consecutive position gaps >= min_gap.

    Momenta are drawn uniformly from [-2, 2]; positions are centered so the
    center of mass sits at the origin. The same seed always yields the same
    point.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    if not min_gap > 0:
        raise ValidationError("min_gap must be positive")
    rng = np.random.default_rng(seed)
    gaps = min_gap + rng.uniform(0.0, 1.0, size=n - 1)
    q = np.concatenate([[0.0], -np.cumsum(gaps)])
    q = q - q.mean()
    p = rng.uniform(-2.0, 2.0, size=n)
    return PhaseSpacePoint(n=n, g=g, q=q, p=p)


def random_action_angle_point(seed, n, g, min_gap=0.5):
    """Deterministic random dual-side point; actions spaced by >= min_gap."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if not min_gap > 0:
        raise ValidationError("min_gap must be positive")
    rng = np.random.default_rng(seed)
    gaps = min_gap + rng.uniform(0.0, 1.0, size=n - 1)
    lam = np.concatenate([[0.0], -np.cumsum(gaps)])
    lam = lam - lam.mean()
    phi = rng.uniform(-2.0, 2.0, size=n)
    return ActionAnglePoint(n=n, g=g, lam=lam, phi=phi)


# ---------------------------------------------------------------------------
# State files: a single JSON object carrying either (q, p) or (lambda, phi).
# json round-trips python floats through repr, so finite doubles survive
# serialization bit for bit.

def state_to_dict(point):
    if isinstance(point, PhaseSpacePoint):
        return {"n": point.n, "g": point.g, "q": point.q.tolist(), "p": point.p.tolist()}
    if isinstance(point, ActionAnglePoint):
        return {
            "n": point.n,
            "g": point.g,
            "lambda": point.lam.tolist(),
            "phi": point.phi.tolist(),
        }
    raise TypeError(f"not a phase-space or action-angle point: {type(point)!r}")


def state_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError("state must be a JSON object")
    for key in ("n", "g"):
        if key not in data:
            raise ValidationError(f"state is missing required field '{key}'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValidationError("field 'n' must be an integer")
    has_qp = "q" in data and "p" in data
    has_aa = "lambda" in data and "phi" in data
    if has_qp and has_aa:
        raise ValidationError("state must carry exactly one of (q, p) or (lambda, phi), not both")
    if has_qp:
        return PhaseSpacePoint(n=n, g=data["g"], q=data["q"], p=data["p"])
    if has_aa:
        return ActionAnglePoint(n=n, g=data["g"], lam=data["lambda"], phi=data["phi"])
    raise ValidationError("state must carry either the (q, p) pair or the (lambda, phi) pair")


def dump_state(point):
    """Serialize a point to its JSON state representation."""
    return json.dumps(state_to_dict(point))


def parse_state(text):
    """Parse a JSON state string; raises json.JSONDecodeError on bad JSON."""
    return state_from_dict(json.loads(text))
