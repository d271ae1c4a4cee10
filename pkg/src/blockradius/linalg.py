"""Dense complex-matrix kernel.

Every operand in the package is a square ``complex128`` :class:`numpy.ndarray`.
This module validates such operands, reads and writes them in the matrix JSON
format, and provides the Hermitian spectral primitives the rest of the package
is built on: eigendecomposition, PSD square roots, the absolute value
``|A| = (A*A)^(1/2)``, operator norms and the spectral radius of a product of
two PSD matrices.

Two Hermitian eigensolvers are available.  ``method="lapack"`` calls
:func:`numpy.linalg.eigh` and is the default because it is used inside tight
loops.  ``method="jacobi"`` is a self-contained cyclic Jacobi solver kept as
an independent reference; the test-suite checks that both agree.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import DimMismatch, MatrixFormatError, NoConvergence, NotHermitian, NotPSD

__all__ = [
    "HermitianEig",
    "REL_SLACK",
    "adjoint",
    "as_matrix",
    "check_psd",
    "check_same_dim",
    "dump_matrix",
    "hermitian_eig",
    "holds",
    "imag_part",
    "inequality_slack",
    "is_hermitian",
    "jacobi_eig",
    "lambda_max",
    "load_matrix",
    "matrix_abs",
    "matrix_from_json",
    "matrix_to_json",
    "op_norm",
    "psd_sqrt",
    "real_part",
    "spectral_radius_psd_product",
    "square_abs",
    "symmetrize",
]

#: Relative slack of the library-wide inequality policy.
REL_SLACK = 1e-9

_HERMITIAN_TOL = 1e-8
_PSD_REJECT = 1e-8


class HermitianEig(NamedTuple):
    """Eigenvalues (ascending) and unitary eigenvector matrix (columns)."""

    values: np.ndarray
    vectors: np.ndarray


# --------------------------------------------------------------------------
# operands and I/O
# --------------------------------------------------------------------------


def as_matrix(A) -> np.ndarray:
    """Return `A` as a finite square ``complex128`` array.

    Scalars are promoted to ``1 x 1`` matrices.  Raises
    :class:`MatrixFormatError` on non-square, empty or non-finite input.
    """
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise MatrixFormatError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise MatrixFormatError("matrix entries must be finite")
    return M


def check_same_dim(*mats: np.ndarray) -> int:
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise DimMismatch(f"operands have different dimensions: {sorted(dims)}")
    return dims.pop()


def matrix_from_json(obj) -> np.ndarray:
    """Decode ``{"dim": n, "entries": [[re, im], ...]}`` (row-major)."""
    try:
        dim = obj["dim"]
        entries = obj["entries"]
    except (TypeError, KeyError) as exc:
        raise MatrixFormatError("matrix JSON needs 'dim' and 'entries'") from exc
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFormatError(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise MatrixFormatError(f"'entries' must hold dim^2 = {dim * dim} pairs")
    try:
        pairs = np.array(entries, dtype=float)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError("entries must be [re, im] number pairs") from exc
    if pairs.shape != (dim * dim, 2):
        raise MatrixFormatError("entries must be [re, im] number pairs")
    return as_matrix((pairs[:, 0] + 1j * pairs[:, 1]).reshape(dim, dim))


def matrix_to_json(A) -> dict:
    M = as_matrix(A)
    flat = M.reshape(-1)
    return {
        "dim": M.shape[0],
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }


def load_matrix(path) -> np.ndarray:
    """Read a matrix JSON file; malformed content raises :class:`MatrixFormatError`."""
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"{path}: invalid JSON ({exc})") from exc
    return matrix_from_json(obj)


def dump_matrix(A, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(A)) + "\n")


# --------------------------------------------------------------------------
# elementary operations
# --------------------------------------------------------------------------


def adjoint(A) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(A).conj().T)


def real_part(A) -> np.ndarray:
    """Hermitian part ``(A + A*) / 2``."""
    A = np.asarray(A, dtype=np.complex128)
    return (A + A.conj().T) / 2


def imag_part(A) -> np.ndarray:
    """Skew part ``(A - A*) / 2i``; Hermitian, with ``A = Re(A) + i Im(A)``."""
    A = np.asarray(A, dtype=np.complex128)
    return (A - A.conj().T) / 2j


def symmetrize(M) -> np.ndarray:
    return real_part(M)


def is_hermitian(M, tol: float = _HERMITIAN_TOL) -> bool:
    M = np.asarray(M, dtype=np.complex128)
    return np.linalg.norm(M - M.conj().T) <= tol * (1.0 + np.linalg.norm(M))


def inequality_slack(lhs: float, rhs: float, rel: float = REL_SLACK) -> float:
    return rel * (1.0 + max(abs(lhs), abs(rhs)))


def holds(lhs: float, rhs: float, rel: float = REL_SLACK) -> bool:
    """Tolerance policy for a claimed inequality ``lhs <= rhs``."""
    return lhs <= rhs + inequality_slack(lhs, rhs, rel)


# --------------------------------------------------------------------------
# Hermitian eigensolvers
# --------------------------------------------------------------------------


def jacobi_eig(M, max_sweeps: int | None = None, tol: float = 1e-13) -> HermitianEig:
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``M[p, q]`` with a
    diagonal unitary and then annihilates it with a real plane rotation.
    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||M||_F``; exceeding ``max_sweeps`` (default ``100 * dim``) raises
    :class:`NoConvergence`.
    """
    H = symmetrize(as_matrix(M)).copy()
    n = H.shape[0]
    V = np.eye(n, dtype=np.complex128)
    if max_sweeps is None:
        max_sweeps = 100 * n
    threshold = tol * np.linalg.norm(H)

    def off_norm(X):
        return np.linalg.norm(X - np.diag(np.diag(X)))

    sweeps = 0
    while off_norm(H) > threshold:
        if sweeps >= max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = H[p, q]
                g = abs(b)
                if g == 0.0:
                    continue
                a, d = H[p, p].real, H[q, q].real
                tau = (d - a) / (2.0 * g)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                phase = b / g
                # U = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                U = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                H[:, idx] = H[:, idx] @ U
                H[idx, :] = U.conj().T @ H[idx, :]
                H[p, q] = H[q, p] = 0.0
                H[p, p] = H[p, p].real
                H[q, q] = H[q, q].real
                V[:, idx] = V[:, idx] @ U
    values = np.diag(H).real.copy()
    order = np.argsort(values, kind="stable")
    return HermitianEig(values[order], V[:, order])


def hermitian_eig(M, method: str = "lapack") -> HermitianEig:
    """Eigendecomposition of a (numerically) Hermitian matrix.

    Parameters
    ----------
    M : array_like
        Square matrix with ``||M - M*||_F <= 1e-8 (1 + ||M||_F)``.  It is
        symmetrized before decomposition.
    method : {"lapack", "jacobi"}
        Backend.  Both are deterministic.

    Returns
    -------
    HermitianEig
        Ascending eigenvalues and the unitary matrix of eigenvectors.

    Raises
    ------
    NotHermitian
        If `M` is too far from Hermitian.
    NoConvergence
        If the solver fails to converge.
    """
    M = as_matrix(M)
    if not is_hermitian(M):
        raise NotHermitian("hermitian_eig requires a Hermitian matrix")
    H = symmetrize(M)
    if method == "jacobi":
        return jacobi_eig(H)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    try:
        values, vectors = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianEig(values, vectors)


def lambda_max(M) -> float:
    """Largest eigenvalue of a Hermitian matrix (symmetrized first)."""
    try:
        return float(np.linalg.eigvalsh(symmetrize(M))[-1])
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


# --------------------------------------------------------------------------
# functional calculus and norms
# --------------------------------------------------------------------------


def psd_sqrt(P) -> np.ndarray:
    """Principal square root of a numerically PSD matrix.

    Eigenvalues in ``[-1e-10 ||P||, 0)`` are clamped to zero; anything below
    ``-1e-8 ||P||`` raises :class:`NotPSD`.
    """
    P = as_matrix(P)
    if not is_hermitian(P):
        raise NotPSD("psd_sqrt requires a Hermitian matrix")
    values, vectors = hermitian_eig(P)
    scale = max(abs(values[0]), abs(values[-1]))
    if values[0] < -_PSD_REJECT * scale:
        raise NotPSD(f"matrix has eigenvalue {values[0]:.3e} < 0")
    roots = np.sqrt(np.clip(values, 0.0, None))
    return symmetrize((vectors * roots) @ vectors.conj().T)


def check_psd(P, name: str = "operand") -> np.ndarray:
    P = as_matrix(P)
    if not is_hermitian(P):
        raise NotPSD(f"{name} is not Hermitian")
    values = np.linalg.eigvalsh(symmetrize(P))
    scale = max(abs(values[0]), abs(values[-1]))
    if values[0] < -_PSD_REJECT * scale:
        raise NotPSD(f"{name} has eigenvalue {values[0]:.3e} < 0")
    return P


def square_abs(A) -> np.ndarray:
    """``|A|^2 = A*A``, formed directly without a square root."""
    A = np.asarray(A, dtype=np.complex128)
    return symmetrize(A.conj().T @ A)


def matrix_abs(A) -> np.ndarray:
    """``|A| = (A*A)^(1/2)``; use ``matrix_abs(adjoint(A))`` for ``|A*|``.

    Formed as ``V diag(s) V*`` from the SVD ``A = U diag(s) V*``, so exact
    zero singular values stay zero instead of becoming square roots of
    rounding noise.
    """
    A = as_matrix(A)
    try:
        _, s, vh = np.linalg.svd(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return symmetrize((vh.conj().T * s) @ vh)


def op_norm(A) -> float:
    """Operator 2-norm, ``sqrt(lambda_max(A*A))``."""
    A = np.asarray(A, dtype=np.complex128)
    if A.size == 0:
        return 0.0
    return math.sqrt(max(lambda_max(square_abs(A)), 0.0))


def spectral_radius_psd_product(P, Q) -> float:
    """``r(PQ)`` for PSD `P`, `Q`, as ``lambda_max(Q^(1/2) P Q^(1/2))``.

    The product ``PQ`` is similar to that PSD matrix, so no non-Hermitian
    eigensolver is needed.
    """
    P = check_psd(P, "P")
    Q = as_matrix(Q)
    check_same_dim(P, Q)
    root = psd_sqrt(Q)
    return max(lambda_max(root @ P @ root), 0.0)
