"""Numerical radius and spectral radius of square complex matrices.

:func:`numerical_radius` returns a certified enclosure.  It works with the
support function of the numerical range,

    f(theta) = lambda_max(Re(exp(i theta) A)),

whose maximum over ``theta`` is ``w(A)``.  Every sampled angle contributes a
supporting line of the (convex) numerical range; between two neighbouring
angles ``f`` is bounded by the corresponding corner of the circumscribed
polygon.  Intervals whose corner bound exceeds the best value seen so far by
more than ``tol`` are bisected until none remain.  The top eigenvector at the
best angle is the lower witness.

A corner of half-angle ``h`` overshoots a circular arc of radius ``w`` by about
``w h^2 / 2``, so a nearly circular numerical range needs on the order of
``pi * sqrt(w / (2 tol))`` angles.  When ``A^2`` vanishes the range is exactly
a disk and a norm-based cap closes the enclosure immediately.

:func:`numerical_radius_vector_oracle` is an unrelated falsification device:
plain projected gradient ascent of ``|<Ax, x>|`` on the unit sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, ToleranceUnreachable
from .linalg import as_matrix, op_norm

__all__ = [
    "RadiusCertificate",
    "numerical_radius",
    "numerical_radius_value",
    "numerical_radius_vector_oracle",
    "spectral_radius_general",
    "support_function",
]

TWO_PI = 2.0 * math.pi
_EPS = np.finfo(float).eps
_BATCH_ENTRIES = 1 << 20


@dataclass(frozen=True)
class RadiusCertificate:
    """Enclosure ``lower_witness <= w(A) <= upper_certificate``.

    ``lower_witness`` equals ``|<A x, x>|`` for ``x = witness_vector``;
    ``theta_star`` is the rotation at which `x` is a top eigenvector of
    ``Re(exp(i theta_star) A)``.
    """

    estimate: float
    lower_witness: float
    upper_certificate: float
    witness_vector: np.ndarray
    theta_star: float
    evaluations: int = 0

    @property
    def width(self) -> float:
        return self.upper_certificate - self.lower_witness


def support_function(A, thetas) -> np.ndarray:
    """``lambda_max(Re(exp(i theta) A))`` for every angle in `thetas`."""
    A = np.asarray(A, dtype=np.complex128)
    Ah = A.conj().T
    thetas = np.asarray(thetas, dtype=float)
    out = np.empty(thetas.shape)
    # bounded batches keep memory flat for large angle sets
    step = max(1, _BATCH_ENTRIES // max(A.size, 1))
    for start in range(0, len(thetas), step):
        phase = np.exp(1j * thetas[start:start + step])[:, None, None]
        R = (phase * A + phase.conj() * Ah) / 2
        try:
            out[start:start + step] = np.linalg.eigvalsh(R)[:, -1]
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from exc
    return out


def _interval_bounds(thetas, values):
    """Upper bound of the support function on each gap between sorted angles.

    The gap after the last angle wraps around to the first one.
    """
    t_next = np.roll(thetas, -1)
    t_next[-1] += TWO_PI
    f_next = np.roll(values, -1)
    half = (t_next - thetas) / 2
    # corner of the two supporting lines, in coordinates rotated to the gap's
    # bisector: p is the radial component, q the tangential one
    p = (values + f_next) / (2 * np.cos(half))
    q = (values - f_next) / (2 * np.sin(half))
    peak = np.arctan2(-q, p)
    corner = np.hypot(p, q)
    ends = np.maximum(values, f_next)
    return np.where(np.abs(peak) <= half, np.maximum(corner, ends), ends)


def _top_eigvec(A, theta):
    phase = np.exp(1j * theta)
    R = (phase * A + np.conj(phase) * A.conj().T) / 2
    _, vecs = np.linalg.eigh(R)
    return vecs[:, -1]


def numerical_radius(
    A,
    tol: float = 1e-9,
    grid: int = 64,
    max_evaluations: int = 4_000_000,
) -> RadiusCertificate:
    """Certified numerical radius ``w(A) = sup_{|x|=1} |<Ax, x>|``.

    Parameters
    ----------
    A : array_like
        Square complex matrix.
    tol : float
        Required width of ``[lower_witness, upper_certificate]``.
    grid : int
        Number of uniformly spaced starting angles.
    max_evaluations : int
        Budget of support-function evaluations.

    Returns
    -------
    RadiusCertificate

    Raises
    ------
    ToleranceUnreachable
        If the budget is exhausted, or `tol` is below the rounding floor.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    A = as_matrix(A)
    n = A.shape[0]
    norm = op_norm(A)
    if norm == 0.0:
        x = np.zeros(n, dtype=np.complex128)
        x[0] = 1.0
        return RadiusCertificate(0.0, 0.0, 0.0, x, 0.0, 0)

    # eigvalsh and the corner arithmetic are backward stable; this covers them
    guard = 8.0 * (n + 1) * _EPS * norm
    if tol <= 2.0 * guard:
        raise ToleranceUnreachable(f"tol={tol:.3e} is below the rounding floor {2 * guard:.3e}")
    # norm-based cap, exact when A^2 = 0 (the numerical range is then a disk)
    cap = min(norm, 0.5 * (norm + math.sqrt(op_norm(A @ A))))

    thetas = np.linspace(0.0, TWO_PI, max(int(grid), 3), endpoint=False)
    values = support_function(A, thetas)
    evaluations = len(thetas)
    while True:
        best = float(values.max())
        bounds = np.minimum(_interval_bounds(thetas, values), cap) + guard
        upper = float(bounds.max())
        todo = np.flatnonzero(bounds - best > tol)
        if todo.size == 0:
            break
        widths = np.diff(np.append(thetas, thetas[0] + TWO_PI))[todo]
        if evaluations + len(todo) > max_evaluations or widths.min() < 1e-13:
            raise ToleranceUnreachable(
                f"enclosure width {upper - best:.3e} after {evaluations} evaluations; tol={tol:.3e}"
            )
        mids = np.mod(thetas[todo] + widths / 2, TWO_PI)
        thetas = np.concatenate([thetas, mids])
        values = np.concatenate([values, support_function(A, mids)])
        order = np.argsort(thetas, kind="stable")
        thetas, values = thetas[order], values[order]
        evaluations += len(mids)

    i = int(np.argmax(values))
    theta_star = float(thetas[i])
    x = _top_eigvec(A, theta_star)
    lower = float(abs(np.vdot(x, A @ x)))
    upper = max(upper, lower)
    return RadiusCertificate(lower, lower, upper, x, theta_star, evaluations)


def numerical_radius_value(A, tol: float = 1e-10) -> float:
    return numerical_radius(A, tol=tol).estimate


def numerical_radius_vector_oracle(A, restarts: int = 32, seed: int = 0, iterations: int = 200) -> float:
    """Lower bound on ``w(A)`` by projected gradient ascent of ``|<Ax, x>|``.

    Each restart begins at a seeded random unit vector and takes at most
    `iterations` steps; each step halves its length until the objective
    increases by a quarter of the first-order prediction.  Deterministic for
    a fixed `seed`.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    A = as_matrix(A)
    n = A.shape[0]
    Ah = A.conj().T
    norm = op_norm(A)
    if norm == 0.0:
        return 0.0
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(restarts):
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        x /= np.linalg.norm(x)
        z = np.vdot(x, A @ x)
        g = abs(z) ** 2
        step = 1.0 / norm**2
        for _ in range(iterations):
            grad = np.conj(z) * (A @ x) + z * (Ah @ x)
            d = grad - np.vdot(x, grad).real * x
            if np.linalg.norm(d) <= 1e-15 * norm**2:
                break
            slope = np.linalg.norm(d) ** 2
            step *= 2.0
            for _ in range(40):
                y = x + step * d
                y /= np.linalg.norm(y)
                zy = np.vdot(y, A @ y)
                # sufficient increase; plain increase lets the iterates overshoot forever
                if abs(zy) ** 2 > g + 0.25 * step * slope:
                    break
                step /= 2.0
            else:
                break
            x, z, g = y, zy, abs(zy) ** 2
        best = max(best, math.sqrt(g))
    return best


def spectral_radius_general(A) -> float:
    """``r(A)``, the largest eigenvalue modulus.

    Uses LAPACK's shifted QR iteration on the Hessenberg form; accurate to
    about 1e-8 relative on diagonalizable input.
    """
    A = as_matrix(A)
    try:
        eig = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return float(np.abs(eig).max())
