"""Abner-Shimony (AS) coefficient matrices and exact local bounds.

AS_N is the N-setting bipartite correlation Bell functional, defined for even
N. Over 1-indexed setting pairs (i, j) its coefficients follow a three-zone
rule:

    m[i][j] = 1               if i + j <= N + 1
    m[i][j] = -(min(i, j)-1)  if i + j == N + 2
    m[i][j] = 0               if i + j >  N + 2

so the matrix is symmetric with an all-ones first row and column and an
anti-diagonal band of growing negative weights. The local hidden variable
(LHV) bound is the exact integer (N/2)(N/2+1).

Everything in this module is integer arithmetic; bounds are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

# Enumerations scan 2**n deterministic assignments; refuse anything beyond
# this many settings rather than hang.
MAX_ENUMERATION_SETTINGS = 24


class ResourceLimitError(RuntimeError):
    """Enumeration refused: 2**n assignments is unreasonable for this n."""


def require_even_settings(n: int) -> int:
    """Validate a setting count (even integer >= 2) and return it as int."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"number of settings must be an integer, got {n!r}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"number of settings must be an even integer >= 2, got {n}")
    return int(n)


def build_as_matrix(n: int) -> np.ndarray:
    """Return the N x N AS coefficient matrix as a read-only int64 array."""
    n = require_even_settings(n)
    i = np.arange(1, n + 1, dtype=np.int64)[:, None]
    j = np.arange(1, n + 1, dtype=np.int64)[None, :]
    m = np.where(i + j <= n + 1, 1, 0)
    m = np.where(i + j == n + 2, -(np.minimum(i, j) - 1), m).astype(np.int64)
    m.setflags(write=False)
    return m


def as_coefficient_matrix(m) -> np.ndarray:
    """Coerce to a square int64 coefficient matrix, rejecting non-integers."""
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(
            f"coefficient matrix must be square and non-empty, got shape {arr.shape}"
        )
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficient matrix entries must be finite integers")
        rounded = np.rint(arr)
        if np.any(arr != rounded):
            raise ValueError("coefficient matrix entries must be integers")
        arr = rounded
    return np.ascontiguousarray(arr, dtype=np.int64)


def as_assignment(values, n: int | None = None) -> np.ndarray:
    """Coerce to a 1-D vector of +-1 settings outcomes."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"assignment must be one-dimensional, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise ValueError(f"assignment length {arr.shape[0]} does not match n={n}")
    if not np.all(np.isin(arr, (-1, 1))):
        raise ValueError("assignment entries must be +1 or -1")
    return arr.astype(np.int64)


def lhv_bound_closed_form(n: int) -> int:
    """Exact LHV maximum of AS_N: (N/2)(N/2 + 1)."""
    n = require_even_settings(n)
    return (n // 2) * (n // 2 + 1)


def assignment_from_index(index: int, n: int) -> np.ndarray:
    """Decode an enumeration index into a +-1 assignment.

    Bit n-1-i of the index holds setting i, with a clear bit meaning -1, so
    numeric order on indices equals lexicographic order on assignments under
    -1 < +1.
    """
    bits = (int(index) >> np.arange(n - 1, -1, -1, dtype=np.int64)) & 1
    return (2 * bits - 1).astype(np.int64)


@dataclass(frozen=True)
class LhvBoundResult:
    """Exact LHV maximum together with a deterministic attaining pair."""

    value: int
    alice_witness: np.ndarray
    bob_witness: np.ndarray


def classical_value(m, alice, bob) -> int:
    """Evaluate sum_ij m[i][j] * alice[i] * bob[j] exactly."""
    m = as_coefficient_matrix(m)
    a = as_assignment(alice, m.shape[0])
    b = as_assignment(bob, m.shape[0])
    return int(a @ m @ b)


def lhv_bound_bruteforce(m) -> LhvBoundResult:
    """Maximize the functional over deterministic +-1 assignments.

    Bob is eliminated analytically (his optimal outcome on setting j is the
    sign of the j-th column sum), so only Alice's 2**n assignments are
    enumerated. Ties resolve to the lexicographically smallest Alice witness
    (-1 < +1); Bob's witness takes -1 on zero column sums for the same reason.
    """
    m = as_coefficient_matrix(m)
    n = m.shape[0]
    if n > MAX_ENUMERATION_SETTINGS:
        raise ResourceLimitError(
            f"brute force over 2**{n} assignments exceeds the cap of "
            f"{MAX_ENUMERATION_SETTINGS} settings"
        )
    value, index = _kernels.lhv_max(m)
    alice = assignment_from_index(index, n)
    column_sums = alice @ m
    bob = np.where(column_sums > 0, 1, -1).astype(np.int64)
    return LhvBoundResult(value=int(value), alice_witness=alice, bob_witness=bob)
