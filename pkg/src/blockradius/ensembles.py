"""Seeded random matrix ensembles.

Every sample is drawn from its own generator keyed by
``(seed, kind, dim, sample_index)``, so sample ``i`` is the same whatever the
number of trials and can be regenerated on its own.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass

import numpy as np

__all__ = ["ARITY", "EnsembleSpec", "Kind", "generate", "operands_digest", "sample_operands"]

#: Number of matrices drawn per sample; checks use the first one, two or four.
ARITY = 4


class Kind(enum.Enum):
    GINIBRE = "ginibre"
    HERMITIAN = "hermitian"
    PSD = "psd"
    NILPOTENT2 = "nilpotent2"
    NORMAL = "normal"
    DIAGONAL = "diagonal"
    UNITARY = "unitary"

    @property
    def code(self) -> int:
        return list(Kind).index(self)

    @classmethod
    def parse(cls, name) -> "Kind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown ensemble {name!r}; choose from {[k.value for k in cls]}") from None


@dataclass(frozen=True)
class EnsembleSpec:
    kind: Kind
    dim: int
    trials: int
    seed: int = 0
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if self.dim < 1 or self.trials < 1:
            raise ValueError("dim and trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    @property
    def label(self) -> str:
        return self.kind.value


def _ginibre(rng, n, scale):
    # complex entries with E|z|^2 = scale^2
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) * (scale / np.sqrt(2))


def _haar_unitary(rng, n):
    Q, R = np.linalg.qr(_ginibre(rng, n, 1.0))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def _draw(kind: Kind, rng, n: int, scale: float) -> np.ndarray:
    if kind is Kind.GINIBRE:
        return _ginibre(rng, n, scale)
    if kind is Kind.HERMITIAN:
        G = _ginibre(rng, n, scale)
        return (G + G.conj().T) / 2
    if kind is Kind.PSD:
        G = _ginibre(rng, n, scale)
        return (G.conj().T @ G + (G.conj().T @ G).conj().T) / 2
    if kind is Kind.NILPOTENT2:
        # [[0, X], [0, 0]] with a k x (n-k) block; squares to zero exactly
        k = (n + 1) // 2
        A = np.zeros((n, n), dtype=np.complex128)
        A[:k, k:] = _ginibre(rng, n, scale)[:k, : n - k]
        return A
    if kind is Kind.NORMAL:
        U = _haar_unitary(rng, n)
        lam = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * (scale / np.sqrt(2))
        return (U * lam) @ U.conj().T
    if kind is Kind.DIAGONAL:
        lam = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * (scale / np.sqrt(2))
        return np.diag(lam)
    if kind is Kind.UNITARY:
        return _haar_unitary(rng, n)
    raise ValueError(kind)


def sample_operands(spec: EnsembleSpec, index: int) -> tuple:
    """The ``ARITY`` independent matrices making up sample `index`."""
    ss = np.random.SeedSequence([spec.seed, spec.kind.code, spec.dim, index])
    rng = np.random.Generator(np.random.Philox(ss))
    return tuple(_draw(spec.kind, rng, spec.dim, spec.scale) for _ in range(ARITY))


def generate(spec: EnsembleSpec, arity: int = 1) -> list:
    """All samples of `spec`; single matrices for ``arity == 1``, else tuples."""
    out = []
    for i in range(spec.trials):
        ops = sample_operands(spec, i)[:arity]
        out.append(ops[0] if arity == 1 else ops)
    return out


def operands_digest(ops) -> int:
    h = hashlib.blake2b(digest_size=8)
    for M in ops:
        M = np.ascontiguousarray(M, dtype=np.complex128)
        h.update(np.asarray(M.shape, dtype=np.int64).tobytes())
        h.update(M.tobytes())
    return int.from_bytes(h.digest(), "big")
