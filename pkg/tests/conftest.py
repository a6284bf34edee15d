import numpy as np
import pytest

from calogero import (
    ActionAnglePoint,
    random_action_angle_point,
    random_phase_point,
    validate_phase_point,
)


@pytest.fixture
def rest_point():
    """Two particles at rest: q = (1, -1), p = (0, 0), g = 1.

    Hand-evaluated reference data: L = [[0, i/2], [-i/2, 0]],
    A(z) = z^2 - 1/4, lam = (1/2, -1/2), C(z) = i, D(z) = 0,
    theta = (i, -i), mu = (0, 0), H_2 = 1/4.
    """
    return validate_phase_point([1.0, -1.0], [0.0, 0.0], 1.0)


@pytest.fixture
def moving_point():
    """q = (1, -1), p = (1, -1), g = 1: A(z) = z^2 - 5/4, C = 2 + i, D = 2."""
    return validate_phase_point([1.0, -1.0], [1.0, -1.0], 1.0)


@pytest.fixture
def rest_dual_point():
    """Dual image of the rest point: lam = (1/2, -1/2), phi = (0, 0)."""
    return ActionAnglePoint(n=2, g=1.0, lam=[0.5, -0.5], phi=[0.0, 0.0])


def sweep_phase_points(count, n_values=(1, 2, 3, 4, 5, 6, 7, 8), g_max=5.0, min_gap=0.5, base_seed=42):
    """Deterministic sweep of random phase-space points."""
    rng = np.random.default_rng(base_seed)
    points = []
    for _ in range(count):
        n = int(rng.choice(n_values))
        g = float(rng.uniform(-g_max, g_max))
        seed = int(rng.integers(0, 2**31 - 1))
        points.append(random_phase_point(seed, n, g, min_gap))
    return points


def sweep_action_angle_points(count, n_values=(1, 2, 3, 4, 5, 6, 7, 8), g_max=5.0, min_gap=0.5, base_seed=43):
    rng = np.random.default_rng(base_seed)
    points = []
    for _ in range(count):
        n = int(rng.choice(n_values))
        g = float(rng.uniform(-g_max, g_max))
        seed = int(rng.integers(0, 2**31 - 1))
        points.append(random_action_angle_point(seed, n, g, min_gap))
    return points
