"""Block matrices and the identities they satisfy."""

import numpy as np

from blockradius import (
    check_block_diag_radius,
    check_block_norms,
    check_pinched_radius,
    make_offdiag,
    numerical_radius,
    positive_offdiag_radius,
)

rng = np.random.default_rng(2)


def ginibre(n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


B, C = ginibre(3), ginibre(3)
S = make_offdiag(B, C)
print("[[0, B], [C, 0]] is", S.assembled.shape, "and has w =", numerical_radius(S.assembled).estimate)

# each check returns both sides; the gap is the interesting number
for label, (lhs, rhs) in [
    ("w(diag(A, D)) vs max(w(A), w(D))", check_block_diag_radius(B, C)),
    ("w([[A, B], [B, A]]) vs max(w(A+B), w(A-B))", check_pinched_radius(B, C)),
]:
    print(f"{label:<45} {lhs:.12f} {rhs:.12f}  gap {rhs - lhs:+.1e}")

diag, anti, rhs = check_block_norms(B, C)
print(f"{'block norms (diagonal, anti-diagonal, max)':<45} {diag:.12f} {anti:.12f} {rhs:.12f}")

# positive blocks: w is half the norm of the sum
P = np.diag([4.0, 0.0])
Q = np.diag([1.0, 2.0])
print("positive pair:", positive_offdiag_radius(P, Q))
