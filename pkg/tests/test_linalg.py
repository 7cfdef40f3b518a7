from fractions import Fraction
from itertools import product as cartesian

import pytest
from hypothesis import given

from archclass import QT, Matrix, Q
from archclass.errors import BadSize, NotPSD, NotSymmetric, SingularMatrix, SizeMismatch
from archclass.linalg import (
    Subspace, congruence_diagonalize, det, gram_schmidt, image, inverse, is_psd, kernel,
    max_norm, minors, moore_penrose_general, moore_penrose_symmetric, parallel_sum,
    psd_leq, rank, rref,
)
from archclass.randmat import random_matrix, random_psd, rng_for

from conftest import fields, mat, seeds

t = QT.t


def span(field, *vectors):
    return Subspace(field, len(vectors[0]), [[field.coerce(x) for x in v] for v in vectors])


# examples

def test_kernel_examples():
    assert kernel(mat([[1, 1]], Q)) == span(Q, (1, -1))
    assert rank(Matrix.zeros(2, 2)) == 0
    assert kernel(mat([["t", 1], ["t^2", "t"]])) == Subspace(QT, 2, [[QT.one, -t]])


def test_max_norm_examples():
    assert max_norm(mat([[0, 1], [1, 0]], Q)) == (1, (0, 1))
    assert max_norm(mat([["t", "t^2"], ["t^3", "t"]]))[0] == t
    assert max_norm(mat([[-3, 2]], Q))[0] == 3


def test_gram_schmidt_examples():
    Qm, used = gram_schmidt(mat([[1, 1], [0, 1]], Q))
    assert Qm == Matrix.identity(2) and used == (0, 1)
    assert gram_schmidt(mat([[3], [4]], Q))[0] == mat([["3/4"], [1]], Q)
    assert gram_schmidt(mat([["t", 1], [0, "t^2"]]))[0] == Matrix.identity(2, QT)
    assert gram_schmidt(Matrix.zeros(2, 2)) == (None, ())


def test_congruence_examples():
    c = congruence_diagonalize(Matrix.diag([2, 1]))
    assert c.P == Matrix.identity(2) and c.D == Matrix.diag([2, 1])
    c = congruence_diagonalize(mat([[0, 1], [1, 0]], Q))
    d = sorted(c.D[i, i] for i in range(2))
    assert d[0] < 0 < d[1]
    assert c.reconstruct() == mat([[0, 1], [1, 0]], Q)
    c = congruence_diagonalize(mat([[2, 1], [1, 1]], Q))
    assert c.D == Matrix.diag([2, Fraction(1, 2)])
    assert c.P[1, 0] == 0  # P^T is lower triangular
    with pytest.raises(NotSymmetric):
        congruence_diagonalize(mat([[1, 2], [0, 1]], Q))


def test_psd_examples():
    assert not is_psd(mat([[0, 1], [1, 0]], Q))
    assert is_psd(mat([["t", 0], [0, 1]]))
    assert is_psd(mat([[2, 1], [1, 1]], Q))
    A = mat([[1, 2], [2, 1]], Q)
    assert psd_leq(A, A)
    assert psd_leq(Matrix.diag([1, 0]), Matrix.diag([2, 1]))
    with pytest.raises(SizeMismatch):
        psd_leq(Matrix.identity(2), Matrix.identity(3))
    with pytest.raises(NotSymmetric):
        is_psd(mat([[1, 1], [0, 1]], Q))


def test_pinv_examples():
    assert moore_penrose_symmetric(Matrix.diag([2, 0])) == Matrix.diag([Fraction(1, 2), 0])
    C = mat([[2, 1], [1, 1]], Q)
    assert moore_penrose_symmetric(C) == inverse(C)
    q = Fraction(1, 4)
    assert moore_penrose_symmetric(mat([[1, 1], [1, 1]], Q)) == Matrix([[q, q], [q, q]])
    assert moore_penrose_general(Matrix.identity(2)) == Matrix.identity(2)
    assert moore_penrose_general(mat([[1, 0]], Q)) == mat([[1], [0]], Q)
    assert moore_penrose_general(mat([["t", 0], [0, 0]])) == mat([["t^-1", 0], [0, 0]])


def test_parallel_sum_examples():
    I2 = Matrix.identity(2)
    assert parallel_sum(I2, I2) == I2 * Fraction(1, 2)
    assert parallel_sum(Matrix.diag([1, 0]), Matrix.diag([0, 1])) == Matrix.zeros(2, 2)
    assert parallel_sum(I2, Matrix.zeros(2, 2)) == Matrix.zeros(2, 2)
    with pytest.raises(NotPSD):
        parallel_sum(I2, -I2)


def test_minors_examples():
    assert minors(Matrix.identity(2), 2) == [1]
    assert minors(mat([[4, 5]], Q), 1) == [4, 5]
    assert minors(mat([[1, 0], [0, "t"], [1, 1]]), 2) == [t, QT.one, -t]
    with pytest.raises(BadSize):
        minors(Matrix.identity(2), 3)


def test_inverse_and_det():
    A = mat([[1, "t"], [2, 3]])
    assert inverse(A) @ A == Matrix.identity(2, QT)
    assert det(A) == 3 - 2 * t
    with pytest.raises(SingularMatrix):
        inverse(mat([[1, 2], [2, 4]], Q))


def test_subspace_operations():
    a, b = span(Q, (1, 0, 0)), span(Q, (0, 1, 0), (1, 0, 1))
    assert (a + b).dim == 3
    assert (a & b).dim == 0
    assert (span(Q, (1, 1, 0)) & span(Q, (1, 1, 0), (0, 0, 1))) == span(Q, (2, 2, 0))
    assert a <= a + b and not (a + b) <= a
    assert image(mat([[1, 2], [2, 4]], Q)) == span(Q, (1, 2))


# properties

def _symmetric(rng, field, n):
    M = random_matrix(rng, field, n, n)
    return M + M.T


@given(seeds, fields)
def test_rref_kernel(seed, field):
    rng = rng_for(seed)
    A = random_matrix(rng, field, rng.randint(1, 4), rng.randint(1, 4))
    R, piv = rref(A)
    K = kernel(A)
    assert K.dim + len(piv) == A.cols
    for v in K.basis:
        assert all(not x for x in (A @ Matrix.from_lists(field, [v]).T).entries())
    assert rref(R) == (R, piv)


@given(seeds, fields)
def test_congruence_reconstructs(seed, field):
    rng = rng_for(seed)
    A = _symmetric(rng, field, rng.randint(1, 4))
    c = congruence_diagonalize(A)
    assert c.reconstruct() == A
    assert det(c.P) != 0


PROBES = {n: [list(v) for v in cartesian(range(-2, 3), repeat=n)] for n in range(1, 5)}


def _quad(A, v):
    field = A.field
    v = [field.coerce(x) for x in v]
    return sum((v[i] * A[i, j] * v[j] for i in range(A.rows) for j in range(A.cols)), field.zero)


@given(seeds, fields)
def test_psd_oracles(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 4)
    A = random_psd(rng, field, n) if rng.random() < 0.5 else _symmetric(rng, field, n)
    verdict = is_psd(A)
    c = congruence_diagonalize(A)
    diag = [c.D[i, i] for i in range(n)]
    assert verdict == all(d >= 0 for d in diag)
    if verdict:
        assert all(_quad(A, v) >= 0 for v in PROBES[n])
    else:
        # A = P^T D P: the vector P^{-1} e_k with D_k < 0 is a negative witness
        k = next(i for i, d in enumerate(diag) if d < 0)
        w = inverse(c.P).column(k)
        assert _quad(A, w) < 0


@given(seeds, fields)
def test_binet_cauchy(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 4)
    A = random_matrix(rng, field, rng.randint(n, 4), n)
    assert det(A.gram()) == sum((m * m for m in minors(A, n)), field.zero)


@given(seeds, fields)
def test_trace_inequality(seed, field):
    rng = rng_for(seed)
    A = random_psd(rng, field, rng.randint(1, 4))
    assert psd_leq(A, Matrix.identity(A.rows, field) * A.trace())


def _psd_pair(rng, field, n):
    """Random PSD ``A <= B`` with ``A`` invertible."""
    A = random_psd(rng, field, n) + Matrix.identity(n, field) * field.coerce(Fraction(1, rng.randint(1, 4)))
    return A, A + random_psd(rng, field, n)


@given(seeds, fields)
def test_inverse_is_antitone(seed, field):
    rng = rng_for(seed)
    A, B = _psd_pair(rng, field, rng.randint(1, 3))
    assert psd_leq(A, B)
    assert det(B) != 0
    assert psd_leq(inverse(B), inverse(A))


@given(seeds, fields)
def test_parallel_sum_monotone(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A = random_psd(rng, field, n)
    B = A + random_psd(rng, field, n)
    C = random_psd(rng, field, n)
    AC, BC = parallel_sum(A, C), parallel_sum(B, C)
    assert is_psd(AC) and psd_leq(AC, A) and psd_leq(AC, C)
    assert psd_leq(AC, BC)


@given(seeds, fields)
def test_kernel_identities(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A, B = random_psd(rng, field, n), random_psd(rng, field, n)
    assert kernel(A + B) == kernel(A) & kernel(B)
    assert kernel(parallel_sum(A, B)) == kernel(A) + kernel(B)


@given(seeds, fields)
def test_kerpsd(seed, field):
    # A <= r B for A = (MX)^T (MX), B = X^T X; then ker A contains ker B
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    X = random_matrix(rng, field, rng.randint(1, 3), n)
    M = random_matrix(rng, field, rng.randint(1, 3), X.rows)
    A, B = (M @ X).gram(), X.gram()
    assert kernel(B) <= kernel(A)


@given(seeds, fields)
def test_moore_penrose_identities(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    C = _symmetric(rng, field, n)
    P = moore_penrose_symmetric(C)
    assert C @ P @ C == C and P @ C @ P == P
    assert P.is_symmetric() and C @ P == P @ C
    assert moore_penrose_symmetric(P) == C
    B = random_matrix(rng, field, rng.randint(1, 3), n)
    G = moore_penrose_general(B)
    assert B @ G @ B == B
    proj = G @ B
    assert proj.is_symmetric() and proj @ proj == proj
