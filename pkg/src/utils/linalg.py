"""Rank and null space with an explicit tolerance.

Rank comes from a column-pivoted QR: the count of |R_ii| above
eps * max|A|. The null space is read off the SVD using that rank.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


def numerical_rank(a: np.ndarray, eps: float) -> int:
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if scale == 0.0:
        return 0
    r = scipy.linalg.qr(a, mode="r", pivoting=True)[0]
    diag = np.abs(np.diag(r))
    return int(np.sum(diag > eps * scale))


def null_space(a: np.ndarray, eps: float) -> np.ndarray:
    """Columns span the numerical null space of ``a``."""
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    rank = numerical_rank(a, eps)
    _, _, vh = scipy.linalg.svd(a, full_matrices=True)
    return vh[rank:].conj().T


def _unit_rows(a: np.ndarray) -> np.ndarray:
    norms = np.max(np.abs(a), axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return a / norms


def in_row_space(basis: np.ndarray, rows: np.ndarray, eps: float) -> bool:
    """True when every row of ``rows`` lies in the row space of ``basis``.

    Rows are scaled to unit max-modulus first, so the comparison does not
    depend on how large the transformed constants are.
    """
    basis = _unit_rows(np.atleast_2d(np.asarray(basis, dtype=complex)))
    rows = _unit_rows(np.atleast_2d(np.asarray(rows, dtype=complex)))
    return numerical_rank(np.vstack([basis, rows]), eps) == numerical_rank(basis, eps)
