"""Batch verification of the block inequalities over random ensembles.

A *check* maps one sample (a tuple of ``ARITY`` matrices drawn from an
ensemble) to a list of :class:`Comparison` objects.  The sample's
:class:`VerificationRecord` keeps the comparison with the smallest relative
margin.  Failures never abort a run; they are logged with the seed and
sample index that reproduce them.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass
from functools import cached_property

import numpy as np

from . import bounds
from .blockops import make_full, make_offdiag
from .bounds import ALPHA_GRID, BlockPieces
from .ensembles import EnsembleSpec, Kind, operands_digest, sample_operands
from .errors import UnknownCheck
from .linalg import (
    REL_SLACK,
    inequality_slack,
    is_hermitian,
    matrix_abs,
    op_norm,
    psd_sqrt,
    real_part,
    spectral_radius_psd_product,
)
from .numradius import numerical_radius, spectral_radius_general

__all__ = [
    "CHECKS",
    "CSV_COLUMNS",
    "DEFAULT_DIMS",
    "DEFAULT_KINDS",
    "Comparison",
    "GapSummary",
    "SUITE_CHECKS",
    "SharpnessRecord",
    "VerificationRecord",
    "default_suite",
    "records_to_csv",
    "resolve_checks",
    "run_checks",
    "run_suite",
    "sharpness_probe",
    "summaries_to_json",
    "summarize",
]

log = logging.getLogger(__name__)

INNER_TOL = 1e-10
DEFAULT_KINDS = ("ginibre", "hermitian", "psd", "nilpotent2", "normal", "unitary")
DEFAULT_DIMS = (1, 2, 3, 5)
CSV_COLUMNS = ("check_name", "ensemble", "dim", "sample_index", "lhs", "rhs", "gap", "passed")


@dataclass(frozen=True)
class Comparison:
    """``lhs <= rhs`` when `upper`, else ``lhs >= rhs``."""

    lhs: float
    rhs: float
    upper: bool = True

    @property
    def gap(self) -> float:
        return self.rhs - self.lhs if self.upper else self.lhs - self.rhs

    @property
    def margin(self) -> float:
        return self.gap / (1.0 + max(abs(self.lhs), abs(self.rhs)))


def _le(small, big):
    return Comparison(small, big, True)


def _ge(big, small):
    return Comparison(big, small, False)


def _eq(a, b):
    return [_le(a, b), _ge(a, b)]


VACUOUS = Comparison(0.0, 0.0)


@dataclass(frozen=True)
class VerificationRecord:
    check_name: str
    ensemble: str
    dim: int
    seed: int
    sample_index: int
    lhs: float
    rhs: float
    gap: float
    passed: bool
    operands_digest: int


@dataclass(frozen=True)
class GapSummary:
    check_name: str
    ensemble: str
    dim: int
    seed: int
    trials: int
    failures: int
    min_gap: float
    mean_gap: float
    argmin_index: int
    argmin_digest: int


# --------------------------------------------------------------------------
# per-sample context
# --------------------------------------------------------------------------


def _w(X):
    return numerical_radius(X, tol=INNER_TOL).estimate


class Sample:
    """Shared, lazily computed quantities for one sample."""

    def __init__(self, ops):
        self.ops = ops
        self.A = ops[0]
        self.B, self.C = ops[0], ops[1]
        self.pieces = BlockPieces(self.B, self.C)

    @cached_property
    def w_A(self):
        return _w(self.A)

    @cached_property
    def norm_A(self):
        return op_norm(self.A)

    @cached_property
    def w_S(self):
        return self.pieces.w_S

    @cached_property
    def psd_pair(self):
        # PSD operands derived from any sample; identity map on PSD input
        return tuple(X if _is_psd(X) else matrix_abs(X) for X in (self.B, self.C))

    @cached_property
    def hermitian_pair(self):
        return tuple(X if is_hermitian(X) else real_part(X) for X in (self.B, self.C))


def _is_psd(X):
    return is_hermitian(X) and np.linalg.eigvalsh(real_part(X))[0] >= 0.0


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------


def _eqv_sandwich(s):
    return [_le(s.w_A, s.norm_A), _ge(s.w_A, 0.5 * s.norm_A)]


def _r_le_w(s):
    return [_le(spectral_radius_general(s.A), s.w_A)]


def _nilpotent_half_norm(s):
    if op_norm(s.A @ s.A) > 1e-12 * (1.0 + s.norm_A**2):
        return [VACUOUS]
    return _eq(s.w_A, 0.5 * s.norm_A)


def _normal_norm(s):
    A = s.A
    if np.linalg.norm(A @ A.conj().T - A.conj().T @ A) > 1e-12 * (1.0 + s.norm_A**2):
        return [VACUOUS]
    return _eq(s.w_A, s.norm_A)


def _th1(s):
    return [_le(s.w_S, bounds.bound_th1_upper(s.B, s.C, pieces=s.pieces).value)]


def _th1eqn(s):
    return [_le(s.w_S, bounds.bound_th1eqn_upper(s.B, s.C, pieces=s.pieces).value)]


def _th5(s):
    return [_ge(s.w_S, bounds.bound_th5_lower(s.B, s.C, pieces=s.pieces).value)]


def _th2(s):
    return [_le(s.w_S**2, bounds.bound_th2_upper_sq(s.B, s.C, pieces=s.pieces).value)]


def _th6(s):
    return [_ge(s.w_S**2, bounds.bound_th6_lower_sq(s.B, s.C, pieces=s.pieces).value)]


def _th3(s):
    first, second = bounds.bound_th3_chain(s.B, s.C, pieces=s.pieces)
    return [_ge(s.w_S**2, first), _ge(first, second)]


def _th4(s):
    first, second = bounds.bound_th4_chain(s.B, s.C, pieces=s.pieces)
    return [_ge(s.w_S**2, first), _ge(first, second)]


def _th7(s):
    w4 = s.w_S**4
    return [_le(w4, bounds.bound_th7_upper_4(s.B, s.C, a, pieces=s.pieces).value) for a in ALPHA_GRID]


def _cor1(s):
    w4 = s.w_A**4
    cap = bounds.cor1_cap(s.A)
    out = []
    for a in ALPHA_GRID:
        value = bounds.bound_cor1_upper_4(s.A, a).value
        out += [_le(w4, value), _le(value, cap)]
    return out


def _th25(s):
    A, D = s.ops[2], s.ops[3]
    w4 = bounds.full_block_radius(A, s.B, s.C, D) ** 4
    out = []
    for a in ALPHA_GRID:
        th25 = bounds.bound_th25_upper_4(A, s.B, s.C, D, a, pieces=s.pieces).value
        bk21 = bounds.bound_bk21_upper_4(A, s.B, s.C, D, a, pieces=s.pieces).value
        out += [_le(w4, th25), _le(th25, bk21)]
    return out


def _prop31(s):
    rec = bounds.check_prop31(*s.psd_pair)
    return [_le(*rec.first), _le(*rec.second)]


def _prop33(s):
    H1, H2 = s.hermitian_pair
    rep = bounds.bound_prop33(H1, H2)
    lhs = max(rep.components["norm_B_plus_C"], rep.components["norm_B_minus_C"]) ** 2
    via_product = rep.components["norm_B2_C2"] + 2.0 * _w(H1 @ H2)
    P, Q = s.psd_pair
    return [
        _le(lhs, rep.value),
        _le(lhs, via_product),
        _le(op_norm(P + Q), bounds.kittaneh2002_bound(P, Q)),
    ]


def _lemma21_blockdiag(s):
    Z = np.zeros_like(s.B)
    lhs = _w(make_full(s.B, Z, Z, s.C).assembled)
    return _eq(lhs, max(s.w_A, _w(s.C)))


def _lemma21_pinched(s):
    lhs = _w(make_full(s.B, s.C, s.C, s.B).assembled)
    return _eq(lhs, max(_w(s.B + s.C), _w(s.B - s.C)))


def _lemma22_norms(s):
    Z = np.zeros_like(s.B)
    diag = op_norm(make_full(s.B, Z, Z, s.C).assembled)
    anti = op_norm(make_offdiag(s.B, s.C).assembled)
    rhs = max(s.pieces.norm_B, s.pieces.norm_C)
    return _eq(diag, rhs) + _eq(anti, rhs)


def _positive_offdiag(s):
    P, Q = s.psd_pair
    return _eq(_w(make_offdiag(P, Q).assembled), op_norm(P + Q) / 2)


def _equality_conditions(s):
    rec = bounds.check_equality_conditions(s.B, s.C, pieces=s.pieces)
    violated = (not rec.sufficient_implies_equality) + (not rec.equality_implies_necessary)
    return [_le(float(violated), 0.0)]


def _aligned_pair(H1, H2):
    """Self-adjoint pair with ``||H1 + K|| = ||H1|| + ||K||`` built from `H2`.

    `K` carries ``sign * ||H2||`` on the top-modulus eigenvector `v` of `H1`
    and the compression of `H2` to the complement of `v` elsewhere.
    """
    vals, vecs = np.linalg.eigh(H1)
    k = int(np.argmax(np.abs(vals)))
    v = vecs[:, [k]]
    sign = 1.0 if vals[k] >= 0 else -1.0
    proj = np.eye(len(vals)) - v @ v.conj().T
    K = sign * op_norm(H2) * (v @ v.conj().T) + proj @ H2 @ proj
    return real_part(K)


def _norm_sum_equality(s):
    H1, H2 = s.hermitian_pair
    out = []
    for B, C in ((H1, H2), (H1, _aligned_pair(H1, H2))):
        nB, nC = op_norm(B), op_norm(C)
        if op_norm(B + C) < nB + nC - 1e-9:
            out.append(VACUOUS)
            continue
        w_abs = _w(matrix_abs(B) @ matrix_abs(C))
        out += _eq(op_norm(B @ B + C @ C), nB**2 + nC**2)
        out += _eq(w_abs, op_norm(B @ C))
        out += _eq(op_norm(B @ C), nB * nC)
        out += _eq(nB * nC, _w(B @ C))
    return out


def _th1_identity(s):
    P, Q = s.pieces.abs_B, s.pieces.abs_Ch
    # squared form: square roots of values near zero amplify rounding
    r = spectral_radius_psd_product(P, Q)
    return _eq(r, op_norm(psd_sqrt(P) @ psd_sqrt(Q)) ** 2)


CHECKS = {
    "eqv_sandwich": _eqv_sandwich,
    "r_le_w": _r_le_w,
    "nilpotent_half_norm": _nilpotent_half_norm,
    "normal_norm": _normal_norm,
    "th1_upper": _th1,
    "th1eqn_upper": _th1eqn,
    "th5_lower": _th5,
    "th2_upper": _th2,
    "th6_lower": _th6,
    "th3_chain": _th3,
    "th4_chain": _th4,
    "th7_upper": _th7,
    "cor1_upper": _cor1,
    "th25_vs_bk21": _th25,
    "prop31": _prop31,
    "prop33": _prop33,
    "lemma21_blockdiag": _lemma21_blockdiag,
    "lemma21_pinched": _lemma21_pinched,
    "lemma22_norms": _lemma22_norms,
    "positive_offdiag": _positive_offdiag,
    "equality_conditions": _equality_conditions,
    "norm_sum_equality": _norm_sum_equality,
    "th1_identity": _th1_identity,
}

#: Every registered check is a claimed inequality or identity, so all of them
#: make up the default suite.
SUITE_CHECKS = tuple(CHECKS)


def resolve_checks(names) -> list[str]:
    """Expand ``"all"`` and validate names; raises :class:`UnknownCheck`."""
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",") if n.strip()]
    out = []
    for name in names:
        if name == "all":
            out.extend(n for n in CHECKS if n not in out)
        elif name in CHECKS:
            if name not in out:
                out.append(name)
        else:
            raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    return out


# --------------------------------------------------------------------------
# running
# --------------------------------------------------------------------------


def _record(name, spec, index, digest, comparisons, rel):
    worst = min(comparisons, key=lambda c: c.margin)
    passed = worst.gap >= -inequality_slack(worst.lhs, worst.rhs, rel)
    return VerificationRecord(
        name, spec.label, spec.dim, spec.seed, index,
        float(worst.lhs), float(worst.rhs), float(worst.gap), bool(passed), digest,
    )


def run_checks(specs, checks, rel: float = REL_SLACK) -> list[VerificationRecord]:
    """Evaluate `checks` on every sample of every spec, in a fixed order.

    A comparison passes when it is violated by at most
    ``rel * (1 + max(|lhs|, |rhs|))``.
    """
    names = resolve_checks(checks)
    records = []
    for spec in specs:
        for i in range(spec.trials):
            ops = sample_operands(spec, i)
            digest = operands_digest(ops)
            sample = Sample(ops)
            for name in names:
                rec = _record(name, spec, i, digest, CHECKS[name](sample), rel)
                if not rec.passed:
                    log.warning(
                        "check %s failed: ensemble=%s dim=%d seed=%d sample=%d lhs=%.12g rhs=%.12g",
                        name, spec.label, spec.dim, spec.seed, i, rec.lhs, rec.rhs,
                    )
                records.append(rec)
    return records


def summarize(records) -> list[GapSummary]:
    """One :class:`GapSummary` per ``(check, ensemble, dim, seed)``, first-seen order."""
    groups: dict = {}
    for r in records:
        groups.setdefault((r.check_name, r.ensemble, r.dim, r.seed), []).append(r)
    out = []
    for (name, ens, dim, seed), recs in groups.items():
        gaps = np.array([r.gap for r in recs])
        k = int(np.argmin(gaps))
        out.append(GapSummary(
            name, ens, dim, seed, len(recs), sum(not r.passed for r in recs),
            float(gaps[k]), float(gaps.mean()), recs[k].sample_index, recs[k].operands_digest,
        ))
    return out


def run_suite(specs, checks, rel: float = REL_SLACK) -> list[GapSummary]:
    return summarize(run_checks(specs, checks, rel))


def default_suite(trials: int = 200, seed: int = 0, kinds=DEFAULT_KINDS, dims=DEFAULT_DIMS):
    return [EnsembleSpec(Kind.parse(k), d, trials, seed) for k in kinds for d in dims]


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([
            r.check_name, r.ensemble, r.dim, r.sample_index,
            _fmt(r.lhs), _fmt(r.rhs), _fmt(r.gap), "true" if r.passed else "false",
        ])
    return buf.getvalue()


def summaries_to_json(summaries) -> str:
    rows = []
    for s in summaries:
        row = asdict(s)
        for key in ("min_gap", "mean_gap"):
            row[key] = float(_fmt(row[key]))
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


# --------------------------------------------------------------------------
# sharpness
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SharpnessRecord:
    check_name: str
    min_gap: float
    argmin_index: int
    argmin_digest: int
    designated_gap: float


def _probe_th1(p):
    return p.w_S, bounds.bound_th1_upper(p.B, p.C, pieces=p).value, True


def _probe_th1eqn(p):
    return p.w_S, bounds.bound_th1eqn_upper(p.B, p.C, pieces=p).value, True


def _probe_th5(p):
    return p.w_S, bounds.bound_th5_lower(p.B, p.C, pieces=p).value, False


def _probe_th2(p):
    return p.w_S**2, bounds.bound_th2_upper_sq(p.B, p.C, pieces=p).value, True


def _probe_th6(p):
    return p.w_S**2, bounds.bound_th6_lower_sq(p.B, p.C, pieces=p).value, False


def _probe_th3(p):
    return p.w_S**2, bounds.bound_th3_lower_sq(p.B, p.C, pieces=p).value, False


def _probe_th4(p):
    return p.w_S**2, bounds.bound_th4_lower_sq(p.B, p.C, pieces=p).value, False


def _zero_c(ops):
    return ops[0], np.zeros_like(ops[0])


def _flip_pair(ops):
    n = max(2, ops[0].shape[0])
    B = np.zeros((n, n), dtype=np.complex128)
    B[0, 1] = 1.0
    return B, B.T.copy()


# name -> (probe, designated instance built from the first sample's operands)
PROBES = {
    "th1_upper": (_probe_th1, _zero_c),
    "th1eqn_upper": (_probe_th1eqn, _zero_c),
    "th2_upper": (_probe_th2, _zero_c),
    "th3_chain": (_probe_th3, _zero_c),
    "th4_chain": (_probe_th4, _zero_c),
    "th5_lower": (_probe_th5, _flip_pair),
    "th6_lower": (_probe_th6, _zero_c),
}


def _probe_gap(probe, B, C):
    w_side, bound, upper = probe(BlockPieces(B, C))
    return bound - w_side if upper else w_side - bound


def sharpness_probe(check_name: str, spec: EnsembleSpec) -> SharpnessRecord:
    """Smallest gap of a bound over `spec`, and its gap on the designated equality case.

    The designated case is ``C = 0`` with `B` from sample 0, except for
    ``th5_lower`` where it is ``B = E12``, ``C = E21``.
    """
    if check_name not in PROBES:
        raise UnknownCheck(f"no sharpness probe for {check_name!r}; known: {', '.join(PROBES)}")
    probe, designate = PROBES[check_name]
    gaps, digests = [], []
    first = None
    for i in range(spec.trials):
        ops = sample_operands(spec, i)
        first = first or ops
        gaps.append(_probe_gap(probe, ops[0], ops[1]))
        digests.append(operands_digest(ops[:2]))
    k = int(np.argmin(gaps))
    designated = _probe_gap(probe, *designate(first))
    return SharpnessRecord(check_name, float(gaps[k]), k, digests[k], float(designated))
