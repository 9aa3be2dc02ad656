import numpy as np
import pytest

from qctl import (ONE, ZERO, I, J, K, DimensionMismatch, Quaternion,
                  QuatMatrix, complex_adjoint, mat_add, matmul,
                  matvec, right_eigenvalues, solve_left_linear,
                  spectral_radius_stable)
from qctl.qmat import identity
import gen


def test_shape_validation():
    with pytest.raises(DimensionMismatch):
        QuatMatrix([[ONE, I], [J]])
    A = QuatMatrix([[ONE, I]])
    B = QuatMatrix([[ONE, I]])
    with pytest.raises(DimensionMismatch):
        matmul(A, B)
    with pytest.raises(DimensionMismatch):
        mat_add(A, QuatMatrix([[ONE], [I]]))


def test_matmul_order():
    A = QuatMatrix([[I]])
    B = QuatMatrix([[J]])
    assert matmul(A, B)[0, 0] == K
    assert matmul(B, A)[0, 0] == -K


def test_identity_and_matvec():
    rng = gen.rng_for(11)
    A = gen.rand_matrix(rng, 3, 3)
    assert matmul(identity(3), A) == A
    assert matmul(A, identity(3)) == A
    v = gen.rand_matrix(rng, 3, 1)
    assert matvec(A, v) == matmul(A, v)


def test_zero_dimension_matrices():
    empty = QuatMatrix([], cols=0)
    assert empty.rows == 0 and empty.cols == 0
    assert matmul(empty, empty).rows == 0
    assert len(right_eigenvalues(empty).classes) == 0
    assert spectral_radius_stable(empty)


def test_complex_adjoint_is_homomorphism():
    rng = gen.rng_for(12)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        A = gen.rand_matrix(rng, n, n)
        B = gen.rand_matrix(rng, n, n)
        lhs = complex_adjoint(matmul(A, B))
        rhs = complex_adjoint(A) @ complex_adjoint(B)
        scale = max(1.0, np.abs(rhs).max())
        assert np.abs(lhs - rhs).max() <= 1e-12 * scale
        lhs = complex_adjoint(mat_add(A, B))
        rhs = complex_adjoint(A) + complex_adjoint(B)
        assert np.abs(lhs - rhs).max() <= 1e-12 * scale


def test_adjoint_block_structure():
    A = QuatMatrix([[Quaternion(1.0, 2.0, 3.0, 4.0)]])
    M = complex_adjoint(A)
    assert M.shape == (2, 2)
    assert M[0, 0] == 1.0 + 2.0j
    assert M[0, 1] == 3.0 + 4.0j
    assert M[1, 0] == -(3.0 - 4.0j)
    assert M[1, 1] == 1.0 - 2.0j


def test_right_eigenvalues_of_reference_matrix():
    A = QuatMatrix([[ONE, I], [J, K]])
    classes = right_eigenvalues(A).classes
    assert len(classes) == 2
    gold = ((1.3660254037844386, 0.3660254037844386),
            (-0.3660254037844386, 1.3660254037844386))
    for cls, (re, im) in zip(classes, gold):
        assert abs(cls.re - re) <= 1e-9
        assert abs(cls.im_norm - im) <= 1e-9
        assert abs(cls.norm() - np.sqrt(2.0)) <= 1e-9


def test_right_eigenvalues_real_diagonal():
    A = QuatMatrix([[Quaternion(2.0), ZERO], [ZERO, Quaternion(-0.5)]])
    classes = right_eigenvalues(A).classes
    assert [(c.re, c.im_norm) for c in classes] == [(2.0, 0.0), (-0.5, 0.0)]


def test_right_eigenvalue_classes_solve_adjoint():
    rng = gen.rng_for(13)
    for _ in range(25):
        n = int(rng.integers(1, 5))
        A = gen.rand_matrix(rng, n, n)
        M = complex_adjoint(A)
        scale = max(1.0, np.abs(M).max())
        classes = right_eigenvalues(A).classes
        assert len(classes) == n
        for cls in classes:
            lam = cls.re + 1j * cls.im_norm
            sigma = np.linalg.svd(M - lam * np.eye(2 * n),
                                  compute_uv=False)
            assert sigma[-1] <= 1e-6 * scale


def test_eigenvalues_invariant_under_unit_similarity():
    rng = gen.rng_for(14)
    u = gen.rand_nonzero_quat(rng)
    u = (1.0 / u.norm()) * u
    A = gen.rand_matrix(rng, 3, 3)
    U = QuatMatrix([[u if i == j else ZERO for j in range(3)]
                    for i in range(3)])
    Uinv = QuatMatrix([[u.inverse() if i == j else ZERO for j in range(3)]
                       for i in range(3)])
    B = matmul(U, matmul(A, Uinv))
    ca = right_eigenvalues(A).classes
    cb = right_eigenvalues(B).classes
    for x, y in zip(ca, cb):
        assert x.matches(y, 1e-8)


def test_spectral_radius_boundary():
    assert spectral_radius_stable(QuatMatrix([[0.5 * I]]))
    assert not spectral_radius_stable(QuatMatrix([[I]]))
    assert not spectral_radius_stable(QuatMatrix([[Quaternion(1.2)]]))
    # inside the guard band counts as not stable
    assert not spectral_radius_stable(QuatMatrix([[Quaternion(0.9999999999)]]))


def test_solve_left_linear_exact():
    # one equation, one unknown: p * s = r with known p
    p = Quaternion(1.0, -2.0, 0.5, 3.0)
    s = Quaternion(0.5, 1.0, -1.0, 2.0)
    sol = solve_left_linear([[s]], [p * s])
    assert (sol[0] - p).norm() <= 1e-10


def test_solve_left_linear_random_consistency():
    rng = gen.rng_for(15)
    for _ in range(25):
        m = int(rng.integers(1, 4))
        k = m + int(rng.integers(0, 3))
        xs = [gen.rand_quat(rng) for _ in range(m)]
        rows = [[gen.rand_quat(rng) for _ in range(m)] for _ in range(k)]
        rhs = []
        for row in rows:
            acc = Quaternion()
            for xj, s in zip(xs, row):
                acc = acc + xj * s
            rhs.append(acc)
        sol = solve_left_linear(rows, rhs)
        for row, want in zip(rows, rhs):
            acc = Quaternion()
            for xj, s in zip(sol, row):
                acc = acc + xj * s
            assert (acc - want).norm() <= 1e-8 * max(1.0, want.norm())


def test_solve_left_linear_validation():
    with pytest.raises(DimensionMismatch):
        solve_left_linear([[ONE], [ONE, I]], [ONE, ONE])
    with pytest.raises(DimensionMismatch):
        solve_left_linear([[ONE]], [ONE, ONE])
