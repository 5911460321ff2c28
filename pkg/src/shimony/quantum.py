"""Bloch-vector measurements and Werner-state correlations.

Measurement directions are unit vectors on the Bloch sphere; a two-qubit
Werner state with visibility V gives the joint spin correlation
E(a, b) = -V (a . b). The module also evaluates AS Bell functionals on
direction sets and provides the closed-form quantum maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin, sqrt

import numpy as np

from .matrices import as_coefficient_matrix, require_even_settings

# Inputs within this distance of unit norm are renormalized; worse is an error.
UNIT_ACCEPT_TOL = 1e-9
# Norm guaranteed after construction.
UNIT_NORM_TOL = 1e-12

# Canonical direction reported for degenerate (zero-resultant) cases.
DEGENERATE_DIRECTION = np.array([0.0, 0.0, 1.0])

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# (|01> - |10>) / sqrt(2)
SINGLET_KET = np.array([0.0, 1.0, -1.0, 0.0]) / sqrt(2.0)


@dataclass(frozen=True)
class WernerState:
    """Mixture V |psi-><psi-| + (1 - V) I/4 with visibility V in [0, 1]."""

    visibility: float

    def __post_init__(self):
        v = float(self.visibility)
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"visibility must lie in [0, 1], got {self.visibility!r}")
        object.__setattr__(self, "visibility", v)

    def density_matrix(self) -> np.ndarray:
        """Explicit 4x4 density matrix of the state."""
        projector = np.outer(SINGLET_KET, SINGLET_KET)
        return self.visibility * projector + (1.0 - self.visibility) * np.eye(4) / 4.0


SINGLET = WernerState(1.0)


def as_bloch_vector(direction) -> np.ndarray:
    """Validate and renormalize a single Bloch direction."""
    arr = np.asarray(direction, dtype=np.float64)
    if arr.shape != (3,):
        raise ValueError(f"direction must have 3 components, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > UNIT_ACCEPT_TOL:
        raise ValueError(
            f"direction must be unit length within {UNIT_ACCEPT_TOL}, got norm {norm}"
        )
    return arr / norm


def as_measurement_set(directions, n: int | None = None) -> np.ndarray:
    """Validate an (n, 3) stack of unit directions, renormalizing rows."""
    arr = np.asarray(directions, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"measurement set must have shape (n, 3), got {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise ValueError(f"measurement set has {arr.shape[0]} directions, expected {n}")
    norms = np.linalg.norm(arr, axis=1)
    bad = np.nonzero(np.abs(norms - 1.0) > UNIT_ACCEPT_TOL)[0]
    if bad.size:
        raise ValueError(
            f"direction {bad[0]} must be unit length within {UNIT_ACCEPT_TOL}, "
            f"got norm {norms[bad[0]]}"
        )
    return arr / norms[:, None]


def bloch_from_spherical(theta: float, phi: float) -> np.ndarray:
    """Unit vector (sin t cos p, sin t sin p, cos t)."""
    return np.array([sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta)])


def correlation(a, b, state: WernerState = SINGLET) -> float:
    """Joint +-1-outcome correlation -V (a . b) for spin measurements."""
    a = as_bloch_vector(a)
    b = as_bloch_vector(b)
    return -state.visibility * float(a @ b)


def spin_observable(direction) -> np.ndarray:
    """sigma . a for a Bloch direction a."""
    d = as_bloch_vector(direction)
    return d[0] * PAULI_X + d[1] * PAULI_Y + d[2] * PAULI_Z


def correlation_density_matrix(a, b, state: WernerState = SINGLET) -> float:
    """Same correlation via the explicit trace tr[rho (sigma.a x sigma.b)].

    Slow path kept as an independent cross-check of `correlation`.
    """
    rho = state.density_matrix().astype(complex)
    observable = np.kron(spin_observable(a), spin_observable(b))
    return float(np.trace(rho @ observable).real)


def bell_quantum_value(m, alice, bob, state: WernerState = SINGLET) -> float:
    """Evaluate sum_ij m[i][j] E(a_i, b_j) on the Werner state.

    Scales exactly linearly in the visibility: the V=1 value times V.
    """
    m = as_coefficient_matrix(m)
    n = m.shape[0]
    a = as_measurement_set(alice, n)
    b = as_measurement_set(bob, n)
    return -state.visibility * float(np.sum(m * (a @ b.T)))


def max_quantum_closed_form(n: int) -> float:
    """Maximal singlet value of AS_N: (N+1) sqrt(N(N+2)) / 3."""
    n = require_even_settings(n)
    return (n + 1) * sqrt(n * (n + 2)) / 3.0
