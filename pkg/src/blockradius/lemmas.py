"""Vector- and operator-level inequalities the block bounds are built from.

Each function returns ``(lhs, rhs)`` for a claimed ``lhs <= rhs``.
:func:`run_lemma_suite` checks all of them on seeded random instances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import REL_SLACK, holds, matrix_abs, op_norm, psd_sqrt, square_abs
from .bounds import ALPHA_GRID

__all__ = [
    "LEMMA_FAMILIES",
    "LemmaSummary",
    "buzano",
    "kittaneh_sum",
    "lem4_sum_bound",
    "lem5",
    "mixed_schwarz",
    "power_inequality",
    "run_lemma_suite",
]


def mixed_schwarz(A, x):
    """``|<Ax, x>| <= <|A| x, x>^(1/2) <|A*| x, x>^(1/2)``."""
    A = np.asarray(A, dtype=np.complex128)
    lhs = abs(np.vdot(x, A @ x))
    a = np.vdot(x, matrix_abs(A) @ x).real
    b = np.vdot(x, matrix_abs(A.conj().T) @ x).real
    return lhs, np.sqrt(max(a, 0.0) * max(b, 0.0))


def buzano(x, y, e):
    """``|<x, e><e, y>| <= (||x|| ||y|| + |<x, y>|) / 2`` for unit `e`."""
    lhs = abs(np.vdot(e, x) * np.vdot(y, e))
    return lhs, 0.5 * (np.linalg.norm(x) * np.linalg.norm(y) + abs(np.vdot(y, x)))


def lem5(x, y, e, alpha):
    """Squared Buzano with an interpolation parameter ``0 <= alpha <= 1``.

    ``|<x,e><e,y>|^2 <= (1+a)/4 |x|^2 |y|^2 + (1-a)/4 |<x,y>|^2 + |x| |y| |<x,y>| / 2``
    """
    lhs = abs(np.vdot(e, x) * np.vdot(y, e)) ** 2
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    c = abs(np.vdot(y, x))
    rhs = (1 + alpha) / 4 * nx**2 * ny**2 + (1 - alpha) / 4 * c**2 + 0.5 * nx * ny * c
    return lhs, rhs


def power_inequality(P, x, r):
    """``<Px, x>^r <= <P^r x, x>`` for PSD `P`, unit `x`, integer ``r >= 1``."""
    P = np.asarray(P, dtype=np.complex128)
    lhs = max(np.vdot(x, P @ x).real, 0.0) ** r
    rhs = np.vdot(x, np.linalg.matrix_power(P, r) @ x).real
    return lhs, rhs


def kittaneh_sum(P, Q):
    """``||P + Q|| <= max(||P||, ||Q||) + ||P^(1/2) Q^(1/2)||`` for PSD `P`, `Q`."""
    lhs = op_norm(P + Q)
    return lhs, max(op_norm(P), op_norm(Q)) + op_norm(psd_sqrt(P) @ psd_sqrt(Q))


def lem4_sum_bound(A, B):
    """``||A + B||^2 <= 2 max(|| |A|^2 + |B|^2 ||, || |A*|^2 + |B*|^2 ||)``."""
    A = np.asarray(A, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    lhs = op_norm(A + B) ** 2
    rhs = 2 * max(
        op_norm(square_abs(A) + square_abs(B)),
        op_norm(square_abs(A.conj().T) + square_abs(B.conj().T)),
    )
    return lhs, rhs


# --------------------------------------------------------------------------
# randomized suite
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaSummary:
    name: str
    instances: int
    failures: int
    min_gap: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _cvec(rng, n):
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * rng.exponential()


def _cmat(rng, n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def _unit(v):
    return v / np.linalg.norm(v)


def _psd(rng, n):
    # random rank so that singular pairs show up too
    G = _cmat(rng, n)[:, : rng.integers(1, n + 1)]
    return G @ G.conj().T


def _schwarz(rng, n):
    return [mixed_schwarz(_cmat(rng, n), _unit(_cvec(rng, n)))]


def _buzano(rng, n):
    return [buzano(_cvec(rng, n), _cvec(rng, n), _unit(_cvec(rng, n)))]


def _lem5(rng, n):
    x, y, e = _cvec(rng, n), _cvec(rng, n), _unit(_cvec(rng, n))
    return [lem5(x, y, e, a) for a in ALPHA_GRID]


def _power(rng, n):
    P, x = _psd(rng, n), _unit(_cvec(rng, n))
    return [power_inequality(P, x, r) for r in (1, 2, 4)]


def _kittaneh(rng, n):
    return [kittaneh_sum(_psd(rng, n), _psd(rng, n))]


def _lem4(rng, n):
    return [lem4_sum_bound(_cmat(rng, n), _cmat(rng, n))]


LEMMA_FAMILIES = {
    "mixed_schwarz": _schwarz,
    "buzano": _buzano,
    "lem5": _lem5,
    "power_inequality": _power,
    "kittaneh_sum": _kittaneh,
    "lem4": _lem4,
}


def run_lemma_suite(
    trials: int = 1000, seed: int = 0, dim: int = 3, families=None, rel: float = REL_SLACK
) -> list[LemmaSummary]:
    """Check every lemma family on `trials` random instances of size ``1..dim``."""
    out = []
    for k, name in enumerate(families or LEMMA_FAMILIES):
        make = LEMMA_FAMILIES[name]
        rng = np.random.default_rng([seed, k])
        failures, min_gap, count = 0, np.inf, 0
        for _ in range(trials):
            n = int(rng.integers(1, dim + 1))
            for lhs, rhs in make(rng, n):
                count += 1
                gap = (rhs - lhs) / (1.0 + max(abs(lhs), abs(rhs)))
                min_gap = min(min_gap, gap)
                failures += not holds(lhs, rhs, rel)
        out.append(LemmaSummary(name, count, failures, float(min_gap)))
    return out
