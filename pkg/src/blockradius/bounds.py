"""Bounds on the numerical radius of 2 x 2 operator matrices.

Each ``bound_*`` function evaluates one inequality on concrete matrices and
returns a :class:`BoundReport`.  Unless stated otherwise the bounded quantity
is ``w(S)`` for the off-diagonal operator matrix ``S = [[0, B], [C, 0]]``,
raised to ``report.exponent``.

Notation used in names and component keys::

    |X|   = (X* X)^(1/2)           sq_X    = |X|^2  = X* X
    |X*|  = (X X*)^(1/2)           sq_Xh   = |X*|^2 = X X*
    max2  = max(|| |B|^2 + |C*|^2 ||, || |B*|^2 + |C|^2 ||)
    max4  = max(|| |B|^4 + |C*|^4 ||, || |B*|^4 + |C|^4 ||)
    plus  = ||B + C*||,  minus = ||B - C*||

Fourth powers are formed as ``(X* X)^2`` without a square root.  Inner
numerical radii use a certificate width of ``1e-10``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property

from .blockops import make_full, make_offdiag
from .errors import AlphaOutOfRange, NotHermitian
from .linalg import (
    as_matrix,
    check_psd,
    check_same_dim,
    holds,
    inequality_slack,
    is_hermitian,
    matrix_abs,
    op_norm,
    psd_sqrt,
    spectral_radius_psd_product,
    square_abs,
)
from .numradius import numerical_radius

__all__ = [
    "ALPHA_GRID",
    "BlockPieces",
    "BoundKind",
    "BoundReport",
    "EqualityRecord",
    "Prop31Record",
    "bound_bk21_upper_4",
    "bound_cor1_upper_4",
    "bound_prop33",
    "bound_th1_upper",
    "bound_th1eqn_upper",
    "bound_th25_upper_4",
    "bound_th2_upper_sq",
    "bound_th3_chain",
    "bound_th3_lower_sq",
    "bound_th4_chain",
    "bound_th4_lower_sq",
    "bound_th5_lower",
    "bound_th6_lower_sq",
    "bound_th7_upper_4",
    "check_equality_conditions",
    "check_prop31",
    "cor1_cap",
    "full_block_radius",
    "kittaneh2002_bound",
]

INNER_TOL = 1e-10
ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
SUFFICIENT_TOL = 1e-10


class BoundKind(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluated on concrete operands.

    `value` bounds ``w^exponent`` from above or below according to `kind`.
    `components` keeps the intermediate norms and radii of the formula.
    """

    name: str
    kind: BoundKind
    exponent: int
    value: float
    alpha: float | None = None
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 0.0):
            raise ValueError(f"{self.name}: bound value must be finite and >= 0, got {self.value}")


def _check_alpha(alpha):
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def _w(X) -> float:
    return numerical_radius(X, tol=INNER_TOL).estimate


class BlockPieces:
    """Lazily computed quantities shared by the bounds on ``[[0, B], [C, 0]]``.

    Pass one instance to several ``bound_*`` functions through their
    ``pieces`` argument to avoid recomputing the same norms and radii.
    """

    def __init__(self, B, C):
        self.B = as_matrix(B)
        self.C = as_matrix(C)
        self.n = check_same_dim(self.B, self.C)
        self.Bh = self.B.conj().T
        self.Ch = self.C.conj().T

    @classmethod
    def of(cls, B, C, pieces=None):
        return pieces if pieces is not None else cls(B, C)

    @cached_property
    def S(self):
        return make_offdiag(self.B, self.C).assembled

    @cached_property
    def w_S(self):
        return _w(self.S)

    @cached_property
    def norm_B(self):
        return op_norm(self.B)

    @cached_property
    def norm_C(self):
        return op_norm(self.C)

    @cached_property
    def abs_B(self):
        return matrix_abs(self.B)

    @cached_property
    def abs_Bh(self):
        return matrix_abs(self.Bh)

    @cached_property
    def abs_C(self):
        return matrix_abs(self.C)

    @cached_property
    def abs_Ch(self):
        return matrix_abs(self.Ch)

    @cached_property
    def sq(self):
        """``(|B|^2, |C*|^2, |B*|^2, |C|^2)``."""
        return (square_abs(self.B), square_abs(self.Ch), square_abs(self.Bh), square_abs(self.C))

    @cached_property
    def max2_parts(self):
        sq_B, sq_Ch, sq_Bh, sq_C = self.sq
        return op_norm(sq_B + sq_Ch), op_norm(sq_Bh + sq_C)

    @cached_property
    def max2(self):
        return max(self.max2_parts)

    @cached_property
    def max4_parts(self):
        sq_B, sq_Ch, sq_Bh, sq_C = self.sq
        return (
            op_norm(sq_B @ sq_B + sq_Ch @ sq_Ch),
            op_norm(sq_Bh @ sq_Bh + sq_C @ sq_C),
        )

    @cached_property
    def max4(self):
        return max(self.max4_parts)

    @cached_property
    def plus(self):
        return op_norm(self.B + self.Ch)

    @cached_property
    def minus(self):
        return op_norm(self.B - self.Ch)

    @cached_property
    def w_BC(self):
        return _w(self.B @ self.C)

    @cached_property
    def w_CB(self):
        return _w(self.C @ self.B)

    @cached_property
    def max_w_products(self):
        return max(self.w_BC, self.w_CB)


# --------------------------------------------------------------------------
# first-power bounds
# --------------------------------------------------------------------------


def bound_th1_upper(B, C, pieces=None) -> BoundReport:
    """``w(S) <= max(||B||, ||C||)/2 + max(r^(1/2)(|B||C*|), r^(1/2)(|B*||C|))/2``."""
    p = BlockPieces.of(B, C, pieces)
    r1 = spectral_radius_psd_product(p.abs_B, p.abs_Ch)
    r2 = spectral_radius_psd_product(p.abs_Bh, p.abs_C)
    value = 0.5 * max(p.norm_B, p.norm_C) + 0.5 * max(math.sqrt(r1), math.sqrt(r2))
    return BoundReport(
        "th1_upper", BoundKind.UPPER, 1, value,
        components={"norm_B": p.norm_B, "norm_C": p.norm_C, "r_absB_absCh": r1, "r_absBh_absC": r2},
    )


def bound_th1eqn_upper(B, C, pieces=None) -> BoundReport:
    """``w(S) <= max(|| |C| + |B*| ||, || |B| + |C*| ||) / 2``."""
    p = BlockPieces.of(B, C, pieces)
    first = op_norm(p.abs_C + p.abs_Bh)
    second = op_norm(p.abs_B + p.abs_Ch)
    return BoundReport(
        "th1eqn_upper", BoundKind.UPPER, 1, 0.5 * max(first, second),
        components={"norm_absC_absBh": first, "norm_absB_absCh": second},
    )


def bound_th5_lower(B, C, pieces=None) -> BoundReport:
    """``w(S) >= max(||B||, ||C||)/2 + | ||B + C*|| - ||B - C*|| | / 4``."""
    p = BlockPieces.of(B, C, pieces)
    value = 0.5 * max(p.norm_B, p.norm_C) + 0.25 * abs(p.plus - p.minus)
    return BoundReport(
        "th5_lower", BoundKind.LOWER, 1, value,
        components={"norm_B": p.norm_B, "norm_C": p.norm_C, "plus": p.plus, "minus": p.minus},
    )


# --------------------------------------------------------------------------
# second-power bounds
# --------------------------------------------------------------------------


def bound_th2_upper_sq(B, C, pieces=None) -> BoundReport:
    """``w^2(S) <= max2/4 + max(w(|B||C*|), w(|C||B*|))/2``."""
    p = BlockPieces.of(B, C, pieces)
    w1 = _w(p.abs_B @ p.abs_Ch)
    w2 = _w(p.abs_C @ p.abs_Bh)
    value = 0.25 * p.max2 + 0.5 * max(w1, w2)
    return BoundReport(
        "th2_upper_sq", BoundKind.UPPER, 2, value,
        components={"max2": p.max2, "w_absB_absCh": w1, "w_absC_absBh": w2},
    )


def bound_th6_lower_sq(B, C, pieces=None) -> BoundReport:
    """``w^2(S) >= max2/4 + | plus^2 - minus^2 | / 8``."""
    p = BlockPieces.of(B, C, pieces)
    value = 0.25 * p.max2 + 0.125 * abs(p.plus**2 - p.minus**2)
    return BoundReport(
        "th6_lower_sq", BoundKind.LOWER, 2, value,
        components={"max2": p.max2, "plus": p.plus, "minus": p.minus},
    )


def bound_th3_chain(B, C, pieces=None):
    """``(first, second)`` with ``w^2(S) >= first >= second``.

    first  = (max(plus^2, minus^2) + plus * minus) / 8
    second = max2 / 4
    """
    p = BlockPieces.of(B, C, pieces)
    first = 0.125 * (max(p.plus**2, p.minus**2) + p.plus * p.minus)
    return first, 0.25 * p.max2


def bound_th3_lower_sq(B, C, pieces=None) -> BoundReport:
    p = BlockPieces.of(B, C, pieces)
    first, second = bound_th3_chain(B, C, pieces=p)
    return BoundReport(
        "th3_lower_sq", BoundKind.LOWER, 2, first,
        components={"first": first, "second": second, "plus": p.plus, "minus": p.minus},
    )


def bound_th4_chain(B, C, pieces=None):
    """``(first, second)`` with ``w^2(S) >= first >= second``.

    first  = sqrt(plus^4 + minus^4) / (4 sqrt 2)
    second = max2 / 4
    """
    p = BlockPieces.of(B, C, pieces)
    first = math.sqrt(p.plus**4 + p.minus**4) / (4.0 * math.sqrt(2.0))
    return first, 0.25 * p.max2


def bound_th4_lower_sq(B, C, pieces=None) -> BoundReport:
    p = BlockPieces.of(B, C, pieces)
    first, second = bound_th4_chain(B, C, pieces=p)
    return BoundReport(
        "th4_lower_sq", BoundKind.LOWER, 2, first,
        components={"first": first, "second": second, "plus": p.plus, "minus": p.minus},
    )


# --------------------------------------------------------------------------
# fourth-power bounds
# --------------------------------------------------------------------------


def _th7_terms(p: BlockPieces, alpha: float):
    wmax = p.max_w_products
    return (
        (1 + alpha) / 8 * p.max4,
        (1 - alpha) / 4 * wmax**2,
        0.25 * p.max2 * wmax,
    )


def bound_th7_upper_4(B, C, alpha: float, pieces=None) -> BoundReport:
    """``w^4(S) <= (1+a)/8 max4 + (1-a)/4 max(w(BC), w(CB))^2 + max2 max(w(BC), w(CB))/4``."""
    alpha = _check_alpha(alpha)
    p = BlockPieces.of(B, C, pieces)
    terms = _th7_terms(p, alpha)
    return BoundReport(
        "th7_upper_4", BoundKind.UPPER, 4, sum(terms), alpha,
        components={"max4": p.max4, "max2": p.max2, "w_BC": p.w_BC, "w_CB": p.w_CB},
    )


def bound_cor1_upper_4(B, alpha: float) -> BoundReport:
    """Upper bound on ``w^4(B)`` for a single matrix.

    ``(1+a)/8 || |B|^4 + |B*|^4 || + (1-a)/4 w^2(B^2) + || |B|^2 + |B*|^2 || w(B^2) / 4``
    """
    alpha = _check_alpha(alpha)
    B = as_matrix(B)
    sq_B, sq_Bh = square_abs(B), square_abs(B.conj().T)
    n4 = op_norm(sq_B @ sq_B + sq_Bh @ sq_Bh)
    n2 = op_norm(sq_B + sq_Bh)
    wB2 = _w(B @ B)
    value = (1 + alpha) / 8 * n4 + (1 - alpha) / 4 * wB2**2 + 0.25 * n2 * wB2
    return BoundReport(
        "cor1_upper_4", BoundKind.UPPER, 4, value, alpha,
        components={"norm_abs4_sum": n4, "norm_abs2_sum": n2, "w_B2": wB2},
    )


def cor1_cap(B) -> float:
    """``|| |B|^4 + |B*|^4 || / 2``, the end of the refinement chain of cor1."""
    B = as_matrix(B)
    sq_B, sq_Bh = square_abs(B), square_abs(B.conj().T)
    return 0.5 * op_norm(sq_B @ sq_B + sq_Bh @ sq_Bh)


def _diag_blocks_term(A, D):
    wA, wD = _w(A), _w(D)
    return 8.0 * max(wA, wD) ** 4, wA, wD


def bound_th25_upper_4(A, B, C, D, alpha: float, pieces=None) -> BoundReport:
    """Upper bound on ``w^4([[A, B], [C, D]])``: ``8 max(w^4(A), w^4(D)) + 8 * th7``."""
    alpha = _check_alpha(alpha)
    A, D = as_matrix(A), as_matrix(D)
    p = BlockPieces.of(B, C, pieces)
    check_same_dim(A, p.B, D)
    diag, wA, wD = _diag_blocks_term(A, D)
    t4, tw2, tcross = _th7_terms(p, alpha)
    value = diag + 8 * t4 + 8 * tw2 + 8 * tcross
    return BoundReport(
        "th25_upper_4", BoundKind.UPPER, 4, value, alpha,
        components={"w_A": wA, "w_D": wD, "max4": p.max4, "max2": p.max2, "w_BC": p.w_BC, "w_CB": p.w_CB},
    )


def bound_bk21_upper_4(A, B, C, D, alpha: float, pieces=None) -> BoundReport:
    """Comparison bound: the last two terms of th25 replaced by ``(3 - a) max2 max(w(BC), w(CB))``."""
    alpha = _check_alpha(alpha)
    A, D = as_matrix(A), as_matrix(D)
    p = BlockPieces.of(B, C, pieces)
    check_same_dim(A, p.B, D)
    diag, wA, wD = _diag_blocks_term(A, D)
    value = diag + (1 + alpha) * p.max4 + (3 - alpha) * p.max2 * p.max_w_products
    return BoundReport(
        "bk21_upper_4", BoundKind.UPPER, 4, value, alpha,
        components={"w_A": wA, "w_D": wD, "max4": p.max4, "max2": p.max2, "w_BC": p.w_BC, "w_CB": p.w_CB},
    )


# --------------------------------------------------------------------------
# sums and differences of self-adjoint operators
# --------------------------------------------------------------------------


def bound_prop33(B, C) -> BoundReport:
    """For Hermitian `B`, `C`: ``max(||B+C||^2, ||B-C||^2) <= ||B^2 + C^2|| + 2 w(|B||C|)``."""
    B, C = as_matrix(B), as_matrix(C)
    check_same_dim(B, C)
    for name, X in (("B", B), ("C", C)):
        if not is_hermitian(X):
            raise NotHermitian(f"{name} must be self-adjoint")
    n_sum_sq = op_norm(B @ B + C @ C)
    w_abs = _w(matrix_abs(B) @ matrix_abs(C))
    return BoundReport(
        "prop33", BoundKind.UPPER, 2, n_sum_sq + 2.0 * w_abs,
        components={"norm_B2_C2": n_sum_sq, "w_absB_absC": w_abs,
                    "norm_B_plus_C": op_norm(B + C), "norm_B_minus_C": op_norm(B - C)},
    )


def kittaneh2002_bound(B, C) -> float:
    """For PSD `B`, `C`: ``(||B|| + ||C|| + sqrt((||B|| - ||C||)^2 + 4 ||B^(1/2) C^(1/2)||^2)) / 2``."""
    B, C = check_psd(B, "B"), check_psd(C, "C")
    check_same_dim(B, C)
    nb, nc = op_norm(B), op_norm(C)
    cross = op_norm(psd_sqrt(B) @ psd_sqrt(C))
    return 0.5 * (nb + nc + math.sqrt((nb - nc) ** 2 + 4.0 * cross**2))


# --------------------------------------------------------------------------
# equality conditions and positive pairs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EqualityRecord:
    """Equality ``w^2(S) = max2/4`` against its necessary and sufficient conditions."""

    w_sq: float
    quarter_max2: float
    plus: float
    minus: float
    norm_absB_absCh: float
    norm_absBh_absC: float
    equality: bool
    necessary: bool
    sufficient: bool

    @property
    def sufficient_implies_equality(self) -> bool:
        return self.equality or not self.sufficient

    @property
    def equality_implies_necessary(self) -> bool:
        return self.necessary or not self.equality


def check_equality_conditions(B, C, pieces=None) -> EqualityRecord:
    """Evaluate the equality ``w^2(S) = max2 / 4`` and both of its conditions.

    The necessary condition ``||B + C*|| = ||B - C*||`` is tested on squares
    with sixteen times the equality slack, since the squared lower bound
    ``w^2 >= max2/4 + |plus^2 - minus^2|/8`` is what links the two.
    """
    p = BlockPieces.of(B, C, pieces)
    w_sq = p.w_S**2
    q = 0.25 * p.max2
    slack = inequality_slack(w_sq, q)
    equality = abs(w_sq - q) <= slack
    necessary = abs(p.plus**2 - p.minus**2) <= 16.0 * slack
    n1 = op_norm(p.abs_B @ p.abs_Ch)
    n2 = op_norm(p.abs_Bh @ p.abs_C)
    sufficient = n1 <= SUFFICIENT_TOL and n2 <= SUFFICIENT_TOL
    return EqualityRecord(w_sq, q, p.plus, p.minus, n1, n2, equality, necessary, sufficient)


@dataclass(frozen=True)
class Prop31Record:
    """For PSD `B`, `C`: (i) ``||B-C|| <= ||B+C||``; (ii) ``max(||B||, ||C||) <= (||B+C|| + ||B-C||)/2``."""

    norm_sum: float
    norm_diff: float
    max_norm: float

    @property
    def first(self):
        return self.norm_diff, self.norm_sum

    @property
    def second(self):
        return self.max_norm, 0.5 * (self.norm_sum + self.norm_diff)

    @property
    def holds(self) -> bool:
        return holds(*self.first) and holds(*self.second)


def check_prop31(B, C) -> Prop31Record:
    B, C = check_psd(B, "B"), check_psd(C, "C")
    check_same_dim(B, C)
    return Prop31Record(op_norm(B + C), op_norm(B - C), max(op_norm(B), op_norm(C)))


def full_block_radius(A, B, C, D) -> float:
    return _w(make_full(A, B, C, D).assembled)
