import json

import numpy as np
import pytest
from hypothesis import given

from blockradius.errors import DimMismatch, MatrixFormatError, NoConvergence, NotHermitian, NotPSD
from blockradius.linalg import (
    adjoint,
    as_matrix,
    check_same_dim,
    dump_matrix,
    hermitian_eig,
    holds,
    imag_part,
    is_hermitian,
    jacobi_eig,
    load_matrix,
    matrix_abs,
    matrix_from_json,
    matrix_to_json,
    op_norm,
    psd_sqrt,
    real_part,
    spectral_radius_psd_product,
    square_abs,
)

from conftest import complex_matrices, ginibre, random_psd


class TestOperands:
    def test_as_matrix_rejects_non_square(self):
        with pytest.raises(MatrixFormatError):
            as_matrix(np.ones((2, 3)))

    def test_as_matrix_rejects_nan(self):
        with pytest.raises(MatrixFormatError):
            as_matrix([[np.nan]])

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            check_same_dim(np.eye(2), np.eye(3))

    def test_json_round_trip(self, tmp_path, rng):
        A = ginibre(rng, 3)
        path = tmp_path / "a.json"
        dump_matrix(A, path)
        assert np.array_equal(load_matrix(path), A)
        obj = json.loads(path.read_text())
        assert obj["dim"] == 3 and len(obj["entries"]) == 9

    def test_json_row_major(self):
        A = matrix_from_json({"dim": 2, "entries": [[1, 0], [2, 0], [3, 0], [0, 4]]})
        assert A[0, 1] == 2 and A[1, 0] == 3 and A[1, 1] == 4j
        assert matrix_to_json(A)["entries"][3] == [0.0, 4.0]

    @pytest.mark.parametrize(
        "obj",
        [
            {"dim": 2, "entries": [[1, 0]]},
            {"dim": 0, "entries": []},
            {"dim": 1, "entries": [[1, 0, 0]]},
            {"dim": 1, "entries": [["x", 0]]},
            {"entries": [[1, 0]]},
            [1, 2],
        ],
    )
    def test_bad_json_objects(self, obj):
        with pytest.raises(MatrixFormatError):
            matrix_from_json(obj)

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"dim": 1, "entries": [')
        with pytest.raises(MatrixFormatError):
            load_matrix(path)


class TestParts:
    def test_hermitian_input(self, rng):
        G = ginibre(rng, 3)
        H = (G + G.conj().T) / 2
        assert np.allclose(real_part(H), H, atol=1e-15)
        assert np.allclose(imag_part(H), 0, atol=1e-15)

    def test_nilpotent_real_part(self):
        N = np.array([[0, 1], [0, 0]])
        assert np.allclose(real_part(N), 0.5 * np.array([[0, 1], [1, 0]]))

    @given(complex_matrices())
    def test_recomposition(self, A):
        R, I = real_part(A), imag_part(A)
        assert is_hermitian(R) and is_hermitian(I)
        assert np.allclose(R + 1j * I, A, rtol=0, atol=1e-14 * (1 + np.abs(A).max()))

    @given(complex_matrices())
    def test_parts_bounded_by_norm(self, A):
        n = op_norm(A)
        assert op_norm(real_part(A)) <= n + 1e-10
        assert op_norm(imag_part(A)) <= n + 1e-10


class TestEigensolvers:
    @pytest.mark.parametrize("n", [1, 2, 5, 12])
    def test_jacobi_matches_lapack(self, rng, n):
        G = ginibre(rng, n)
        H = (G + G.conj().T) / 2
        lap = hermitian_eig(H)
        jac = hermitian_eig(H, method="jacobi")
        assert np.allclose(jac.values, lap.values, atol=1e-12)
        V, lam = jac.vectors, jac.values
        assert np.allclose(V.conj().T @ V, np.eye(n), atol=1e-12)
        assert np.linalg.norm(H @ V - V * lam) <= 1e-12 * (1 + np.linalg.norm(H))

    def test_jacobi_diagonal_input_is_immediate(self):
        res = jacobi_eig(np.diag([3.0, -1.0, 2.0]))
        assert np.array_equal(res.values, [-1.0, 2.0, 3.0])

    def test_jacobi_sweep_budget(self, rng):
        G = ginibre(rng, 6)
        with pytest.raises(NoConvergence):
            jacobi_eig(G + G.conj().T, max_sweeps=1)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0, 1], [0, 0]]))

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            hermitian_eig(np.eye(2), method="qr")

    @pytest.mark.parametrize("method", ["lapack", "jacobi"])
    def test_deterministic(self, rng, method):
        G = ginibre(rng, 4)
        H = G + G.conj().T
        a, b = hermitian_eig(H, method), hermitian_eig(H.copy(), method)
        assert a.values.tobytes() == b.values.tobytes()
        assert a.vectors.tobytes() == b.vectors.tobytes()


class TestSquareRoots:
    def test_diagonal(self):
        assert np.allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))

    def test_zero(self):
        assert np.array_equal(psd_sqrt(np.zeros((3, 3))), np.zeros((3, 3)))

    @pytest.mark.parametrize("rank", [1, 2, 4])
    def test_square_back(self, rng, rank):
        P = random_psd(rng, 4, rank)
        R = psd_sqrt(P)
        assert np.linalg.norm(R @ R - P) <= 1e-9 * (1 + np.linalg.norm(P))
        assert np.linalg.eigvalsh(R)[0] >= -1e-12

    def test_rejects_negative(self):
        with pytest.raises(NotPSD):
            psd_sqrt(np.diag([1.0, -0.5]))

    def test_clamps_rounding_negatives(self):
        R = psd_sqrt(np.diag([1.0, -1e-12]))
        assert np.allclose(R, np.diag([1.0, 0.0]))

    @given(complex_matrices())
    def test_abs_norm(self, A):
        assert abs(op_norm(matrix_abs(A)) - op_norm(A)) <= 1e-9 * (1 + op_norm(A))

    def test_abs_squares_to_square_abs(self, rng):
        A = ginibre(rng, 4)
        M = matrix_abs(A)
        assert np.allclose(M @ M, square_abs(A), atol=1e-12)
        assert np.allclose(matrix_abs(adjoint(A)) @ matrix_abs(adjoint(A)), A @ A.conj().T, atol=1e-12)

    def test_abs_keeps_exact_zeros(self):
        N = np.array([[0, 1], [0, 0]], dtype=complex)
        assert np.array_equal(matrix_abs(N), np.diag([0, 1]).astype(complex))


class TestNorms:
    def test_worked_sum(self):
        assert op_norm(np.diag([4.0, 0.0]) + np.diag([1.0, 2.0])) == pytest.approx(5.0, abs=1e-14)

    def test_unitary(self, rng):
        Q, _ = np.linalg.qr(ginibre(rng, 5))
        assert op_norm(Q) == pytest.approx(1.0, abs=1e-14)

    def test_sampling_lower_bound(self, rng):
        # dim 2: in higher dims 10^4 random directions rarely come within 1e-3
        A = ginibre(rng, 2)
        x = rng.standard_normal((2, 10_000)) + 1j * rng.standard_normal((2, 10_000))
        x /= np.linalg.norm(x, axis=0)
        sampled = np.linalg.norm(A @ x, axis=0).max()
        n = op_norm(A)
        assert sampled <= n + 1e-12
        assert sampled >= n - 1e-3 * n

    def test_psd_product_diagonal(self):
        assert spectral_radius_psd_product(np.diag([1.0, 4.0]), np.diag([9.0, 1.0])) == pytest.approx(9.0)

    def test_psd_product_zero(self, rng):
        assert spectral_radius_psd_product(np.zeros((3, 3)), random_psd(rng, 3)) == 0.0

    def test_psd_product_identity(self, rng):
        P, Q = random_psd(rng, 4), random_psd(rng, 4, 2)
        r = spectral_radius_psd_product(P, Q)
        assert r == pytest.approx(op_norm(psd_sqrt(P) @ psd_sqrt(Q)) ** 2, rel=1e-9)
        assert r == pytest.approx(spectral_radius_psd_product(Q, P), rel=1e-9)
        assert r == pytest.approx(np.abs(np.linalg.eigvals(P @ Q)).max(), rel=1e-8)

    def test_psd_product_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            spectral_radius_psd_product(np.diag([1.0, -1.0]), np.eye(2))


class TestTolerancePolicy:
    def test_holds(self):
        assert holds(1.0, 1.0)
        assert holds(1.0 + 1e-9, 1.0)
        assert not holds(1.0 + 3e-9, 1.0)
        assert holds(1e6 + 1e-4, 1e6)
        assert not holds(1e-8, 0.0)
