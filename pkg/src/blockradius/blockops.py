"""2 x 2 block operator matrices and the block identities they satisfy.

Blocks are assembled eagerly into dense ``2n x 2n`` arrays.  The ``check_*``
functions return both sides of an identity; deciding pass or fail is left to
the caller's tolerance policy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, check_psd, check_same_dim, op_norm
from .numradius import numerical_radius

__all__ = [
    "FullBlock",
    "OffDiagBlock",
    "check_block_diag_radius",
    "check_block_norms",
    "check_pinched_radius",
    "make_full",
    "make_offdiag",
    "positive_offdiag_radius",
]

INNER_TOL = 1e-10


@dataclass(frozen=True)
class OffDiagBlock:
    b: np.ndarray
    c: np.ndarray
    assembled: np.ndarray

    @property
    def n(self) -> int:
        return self.b.shape[0]


@dataclass(frozen=True)
class FullBlock:
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    assembled: np.ndarray


def make_offdiag(B, C) -> OffDiagBlock:
    """Assemble ``[[0, B], [C, 0]]``."""
    B, C = as_matrix(B), as_matrix(C)
    n = check_same_dim(B, C)
    S = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    S[:n, n:] = B
    S[n:, :n] = C
    return OffDiagBlock(B, C, S)


def make_full(A, B, C, D) -> FullBlock:
    """Assemble ``[[A, B], [C, D]]``, acting as ``(A x1 + B x2, C x1 + D x2)``."""
    A, B, C, D = (as_matrix(X) for X in (A, B, C, D))
    check_same_dim(A, B, C, D)
    return FullBlock(A, B, C, D, np.block([[A, B], [C, D]]))


def _w(X, tol):
    return numerical_radius(X, tol=tol).estimate


def check_block_diag_radius(A, D, tol: float = INNER_TOL):
    """``(w([[A, 0], [0, D]]), max(w(A), w(D)))``."""
    A, D = as_matrix(A), as_matrix(D)
    Z = np.zeros_like(A)
    lhs = _w(make_full(A, Z, Z, D).assembled, tol)
    return lhs, max(_w(A, tol), _w(D, tol))


def check_pinched_radius(A, B, tol: float = INNER_TOL):
    """``(w([[A, B], [B, A]]), max(w(A + B), w(A - B)))``."""
    A, B = as_matrix(A), as_matrix(B)
    lhs = _w(make_full(A, B, B, A).assembled, tol)
    return lhs, max(_w(A + B, tol), _w(A - B, tol))


def check_block_norms(A, D):
    """``(||[[A, 0], [0, D]]||, ||[[0, A], [D, 0]]||, max(||A||, ||D||))``."""
    A, D = as_matrix(A), as_matrix(D)
    Z = np.zeros_like(A)
    diag = op_norm(make_full(A, Z, Z, D).assembled)
    anti = op_norm(make_offdiag(A, D).assembled)
    return diag, anti, max(op_norm(A), op_norm(D))


def positive_offdiag_radius(B, C, tol: float = INNER_TOL):
    """For PSD `B`, `C`: ``(w([[0, B], [C, 0]]), ||B + C|| / 2)``."""
    B, C = check_psd(B, "B"), check_psd(C, "C")
    S = make_offdiag(B, C).assembled
    return _w(S, tol), op_norm(B + C) / 2
