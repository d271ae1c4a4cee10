import numpy as np
import pytest
from hypothesis import given

from blockradius.blockops import (
    check_block_diag_radius,
    check_block_norms,
    check_pinched_radius,
    make_full,
    make_offdiag,
    positive_offdiag_radius,
)
from blockradius.errors import DimMismatch, NotPSD
from blockradius.linalg import op_norm
from blockradius.numradius import numerical_radius

from conftest import E, ginibre, matrix_pairs, random_psd

TOL = 1e-10


def w(X):
    return numerical_radius(X, tol=TOL).estimate


class TestAssembly:
    def test_zero_blocks(self):
        assert np.array_equal(make_offdiag(np.zeros((2, 2)), np.zeros((2, 2))).assembled, np.zeros((4, 4)))

    def test_index_layout(self):
        S = make_offdiag(E(1, 2), E(2, 1)).assembled
        assert np.array_equal(S, E(1, 4, 4) + E(4, 1, 4))

    def test_swap_identity(self):
        S = make_offdiag(np.eye(3), np.eye(3)).assembled
        assert np.array_equal(S @ S, np.eye(6))
        assert w(S) == pytest.approx(1.0, abs=TOL)

    def test_full_with_zero_diagonal(self, rng):
        B, C = ginibre(rng, 3), ginibre(rng, 3)
        Z = np.zeros((3, 3))
        assert np.array_equal(make_full(Z, B, C, Z).assembled, make_offdiag(B, C).assembled)

    def test_full_block_diagonal(self):
        Z = np.zeros((1, 1))
        T = make_full([[1.0]], Z, Z, [[5.0]]).assembled
        assert np.array_equal(T, np.diag([1.0, 5.0]))

    def test_block_action(self, rng):
        A, B, C, D = (ginibre(rng, 2) for _ in range(4))
        x1, x2 = rng.standard_normal(2), rng.standard_normal(2)
        y = make_full(A, B, C, D).assembled @ np.concatenate([x1, x2])
        assert np.allclose(y, np.concatenate([A @ x1 + B @ x2, C @ x1 + D @ x2]))

    def test_block_adjoint(self, rng):
        A, B, C, D = (ginibre(rng, 3) for _ in range(4))
        H = lambda X: X.conj().T  # noqa: E731
        assert np.array_equal(H(make_full(A, B, C, D).assembled), make_full(H(A), H(C), H(B), H(D)).assembled)
        assert np.array_equal(H(make_offdiag(B, C).assembled), make_offdiag(H(C), H(B)).assembled)

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            make_offdiag(np.eye(2), np.eye(3))
        with pytest.raises(DimMismatch):
            make_full(np.eye(2), np.eye(2), np.eye(2), np.eye(3))


class TestIdentities:
    def test_block_diag_equal_blocks(self, rng):
        A = ginibre(rng, 3)
        lhs, rhs = check_block_diag_radius(A, A)
        assert lhs == pytest.approx(w(A), abs=2 * TOL)
        assert rhs == pytest.approx(w(A), abs=2 * TOL)

    def test_block_diag_scalars(self):
        assert check_block_diag_radius([[3.0]], [[1.0]]) == pytest.approx((3.0, 3.0), abs=TOL)

    def test_block_diag_random(self, rng):
        lhs, rhs = check_block_diag_radius(ginibre(rng, 3), ginibre(rng, 3))
        assert lhs == pytest.approx(rhs, abs=2 * TOL)

    def test_pinched_zero_diagonal(self, rng):
        B = ginibre(rng, 3)
        lhs, rhs = check_pinched_radius(np.zeros((3, 3)), B)
        assert lhs == pytest.approx(w(B), abs=2 * TOL)
        assert rhs == pytest.approx(w(B), abs=2 * TOL)

    def test_pinched_zero_offdiag(self, rng):
        A = ginibre(rng, 2)
        assert check_pinched_radius(A, np.zeros((2, 2))) == pytest.approx(check_block_diag_radius(A, A), abs=2 * TOL)

    @given(matrix_pairs(max_dim=2))
    def test_pinched_random(self, pair):
        A, B = pair
        lhs, rhs = check_pinched_radius(A, B)
        assert lhs == pytest.approx(rhs, abs=2 * TOL * (1 + abs(rhs)))

    def test_norms_identity(self):
        assert check_block_norms(np.eye(2), np.eye(2)) == pytest.approx((1, 1, 1))

    def test_norms_one_zero(self):
        assert check_block_norms(2 * np.eye(2), np.zeros((2, 2))) == pytest.approx((2, 2, 2))

    @given(matrix_pairs())
    def test_norms_random(self, pair):
        diag, anti, rhs = check_block_norms(*pair)
        assert diag == pytest.approx(rhs, rel=1e-9, abs=1e-12)
        assert anti == pytest.approx(rhs, rel=1e-9, abs=1e-12)


class TestPositiveOffdiag:
    def test_identity(self):
        assert positive_offdiag_radius(np.eye(2), np.eye(2)) == pytest.approx((1.0, 1.0), abs=TOL)

    def test_worked_pair(self):
        res = positive_offdiag_radius(np.diag([4.0, 0.0]), np.diag([1.0, 2.0]))
        assert res == pytest.approx((2.5, 2.5), abs=TOL)

    def test_random(self, rng):
        lhs, rhs = positive_offdiag_radius(random_psd(rng, 4), random_psd(rng, 4, 1))
        assert lhs == pytest.approx(rhs, abs=2 * TOL)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            positive_offdiag_radius(np.diag([1.0, -1.0]), np.eye(2))


@given(matrix_pairs())
def test_block_swap_invariance(pair):
    B, C = pair
    a = w(make_offdiag(B, C).assembled)
    b = w(make_offdiag(C, B).assembled)
    assert a == pytest.approx(b, abs=2 * TOL * (1 + a))


@given(matrix_pairs())
def test_offdiag_norm(pair):
    B, C = pair
    assert op_norm(make_offdiag(B, C).assembled) == pytest.approx(max(op_norm(B), op_norm(C)), rel=1e-9, abs=1e-12)
