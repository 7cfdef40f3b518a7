from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given

from archclass import (
    QT, AddMultiple, BoundedMultiplier, ElementaryFactors, Matrix, Q, ScalarMultiplier,
    SimCertificate, Swap, equiv, gg, is_bibounded_matrix, is_bounded_matrix, sim, succeq,
    verify_certificate, w_valuation,
)
from archclass.archimedean import trace_bound
from archclass.elementary import product
from archclass.errors import BackendMismatch, ColumnMismatch, SizeMismatch
from archclass.fields import INFINITY, constant_term, is_bibounded, natural_valuation
from archclass.linalg import det, inverse, is_psd, kernel, max_norm
from archclass.randmat import (
    random_bibounded, random_bounded_scalar, random_matrix, random_psd,
    rng_for,
)

from conftest import fields, mat, seeds

t = QT.t
I2 = Matrix.identity(2)
P12 = mat([[0, 1], [1, 0]], Q)
N = mat([[0, 1], [0, 0]], Q)


# fixed examples

def test_swap_is_equivalent_to_identity():
    assert succeq(P12, I2) and succeq(I2, P12)
    assert sim(P12, I2)


def test_nilpotent_and_transpose_incomparable():
    assert not succeq(N, N.T) and not succeq(N.T, N)


def test_left_multiplication_breaks_equivalence():
    E11 = Matrix.diag([1, 0])
    assert sim(P12, I2)
    assert not sim(E11 @ P12, E11 @ I2)


def test_unbounded_scalar_not_above_one():
    assert not succeq(mat([["t^-1"]]), mat([[1]]))
    assert succeq(mat([[1]]), mat([["t^-1"]]))


def test_infinitesimal_scalar_is_above_one():
    # t is infinitesimal here, so [t]^2 <= r [1]^2 already for r = 1
    v = succeq(mat([["t"]]), mat([[1]]))
    assert v and v.certificate.r == 1


def test_zero_matrix_conventions():
    Z = Matrix.zeros(2, 2, QT)
    A = mat([[1, "t"], [0, 1]])
    assert succeq(Z, A)
    assert not succeq(A, Z)
    assert succeq(Z, Z)
    empty = Matrix.zeros(0, 2, QT)
    assert succeq(empty, A) and sim(empty, Z)


def test_bounded_matrix_examples():
    assert not is_bounded_matrix(mat([[1, "t^-1"], [0, 1]]))
    assert is_bounded_matrix(P12)
    assert is_bounded_matrix(mat([["t", 5], [0, 1]]))


def test_bibounded_matrix_examples():
    assert not is_bibounded_matrix(mat([[1, 0], [0, "t"]]))
    assert is_bibounded_matrix(P12)
    assert is_bibounded_matrix(mat([[1], [1]], Q))
    assert not is_bibounded_matrix(mat([[1, 1]], Q))


def test_gg_examples():
    B = mat([[1, "t"], [2, 0]])
    v = gg(B, B)
    assert v and v.certificate.alpha == 1
    assert not gg(P12, I2)
    assert gg(B * t, B)
    assert not gg(B, B * t)
    with pytest.raises(SizeMismatch):
        gg(I2, mat([[1, 0]], Q))


def test_equiv_examples():
    A = mat([[1, 2], [0, -3]], Q)
    assert equiv(A, A)
    assert equiv(A * 2, A)
    B = mat([[1, "t"], [2, 0]])
    assert not equiv(B * t, B)
    assert equiv(Matrix.zeros(2, 2), Matrix.zeros(2, 2))
    assert not equiv(Matrix.zeros(2, 2), A)


def test_w_examples():
    assert w_valuation(mat([["t", "t^2"], ["t^3", "t"]])) == 1
    assert w_valuation(Matrix.zeros(2, 2, QT)) == INFINITY
    assert w_valuation(Matrix.identity(2, QT)) == 0


def test_errors():
    with pytest.raises(ColumnMismatch):
        succeq(I2, mat([[1, 2, 3]], Q))
    with pytest.raises(BackendMismatch):
        succeq(I2, Matrix.identity(2, QT))


def test_tampered_certificates():
    A, B = mat([[1, 1], [0, 1]], Q), I2
    v = succeq(A, B)
    assert verify_certificate(A, B, v.certificate)
    C, r = v.certificate.C, v.certificate.r
    while is_psd(B.gram() * r - A.gram()):
        r -= 1
    assert not verify_certificate(A, B, BoundedMultiplier(C, r))
    assert not verify_certificate(A, B, BoundedMultiplier(C + I2, v.certificate.r))
    X = mat([[1, 1], [0, 1]])
    assert not verify_certificate(X * t, X, ScalarMultiplier(1 / t))
    assert verify_certificate(X * t, X, ScalarMultiplier(t))
    assert not verify_certificate(X, X * t, ScalarMultiplier(1 / t))


def test_elementary_certificates():
    A = mat([[1, 2], [3, 4]], Q)
    ops = (Swap(0, 1), AddMultiple(0, 1, Fraction(1, 2)))
    PA = product(ops, 2, Q) @ A
    assert verify_certificate(PA, A, ElementaryFactors(ops))
    assert not verify_certificate(A, A, ElementaryFactors(ops))
    assert not verify_certificate(PA, A, ElementaryFactors((Swap(0, 5),)))
    B = mat([[1, 0], [0, 1]])
    assert not verify_certificate(B, B, ElementaryFactors((AddMultiple(0, 1, 1 / t),
                                                           AddMultiple(0, 1, -1 / t))))


def test_trace_bound_is_smallest():
    C = mat([["1/2", "t"], [0, 1]])
    # tr(C^T C) = 5/4 + t^2, so 2 is the smallest natural bound
    assert trace_bound(C) == 2
    assert trace_bound(Matrix.zeros(1, 1, QT)) == 1
    assert trace_bound(mat([[1, 0], [0, 1]])) == 2


# properties

def _pair(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 4)
    return rng, n, random_matrix(rng, field, rng.randint(1, 4), n)


@given(seeds, fields)
def test_reflexive_and_certified(seed, field):
    _, _, A = _pair(seed, field)
    v = succeq(A, A)
    assert v and verify_certificate(A, A, v.certificate)


@given(seeds, fields)
def test_transitive(seed, field):
    rng, n, A = _pair(seed, field)
    B = random_matrix(rng, field, rng.randint(1, 3), A.rows, zero_prob=0.5) @ A
    C = random_matrix(rng, field, rng.randint(1, 3), B.rows, zero_prob=0.5) @ B
    if succeq(C, B) and succeq(B, A):
        assert succeq(C, A)


@given(seeds, fields)
def test_bibounded_left_factor(seed, field):
    rng, n, A = _pair(seed, field)
    P = random_bibounded(rng, field, A.rows)
    v = sim(P @ A, A)
    assert v and isinstance(v.certificate, SimCertificate)
    assert verify_certificate(P @ A, A, v.certificate)


@given(seeds, fields)
def test_right_compatible(seed, field):
    rng, n, A = _pair(seed, field)
    B = random_bibounded(rng, field, A.rows) @ A
    C = random_matrix(rng, field, n, rng.randint(1, 4))
    assert sim(A @ C, B @ C)


@given(seeds, fields)
def test_kernel_inclusion(seed, field):
    rng, n, A = _pair(seed, field)
    B = random_matrix(rng, field, rng.randint(1, 4), n, zero_prob=0.6)
    holds = bool(succeq(A, B))
    if holds:
        assert kernel(B) <= kernel(A)
    if field is Q:
        assert holds == (kernel(B) <= kernel(A))


@given(seeds, fields)
def test_methods_agree(seed, field):
    rng, n, A = _pair(seed, field)
    B = random_matrix(rng, field, rng.randint(1, 3), n)
    if rng.random() < 0.5:
        A = random_matrix(rng, field, rng.randint(1, 3), B.rows, zero_prob=0.5) @ B
    fast, slow = succeq(A, B, check_psd=True), succeq(A, B, method="pinv")
    assert fast.holds == slow.holds
    if slow:
        assert verify_certificate(A, B, slow.certificate)


@given(seeds, fields)
def test_bounded_iff_above_identity(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 4)
    A = random_matrix(rng, field, n, n)
    assert is_bounded_matrix(A) == bool(succeq(A, Matrix.identity(n, field)))


@given(seeds, fields)
def test_square_bibounded_characterization(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A = random_matrix(rng, field, n, n) if rng.random() < 0.6 else random_bibounded(rng, field, n)
    inv_ok = det(A) != 0 and is_bounded_matrix(A) and is_bounded_matrix(inverse(A))
    assert is_bibounded_matrix(A) == inv_ok


@given(seeds, fields)
def test_psd_sandwich(seed, field):
    # PSD A with bounded diagonal: s I <= A <= r I for naturals iff det A bibounded
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A = random_psd(rng, field, n)
    if not all(natural_valuation(A[i, i]) >= 0 for i in range(n)):
        return
    In = Matrix.identity(n, field)
    upper = is_psd(In * trace_bound_psd(A) - A)
    assert upper
    below = det(A) != 0 and is_bounded_matrix(inverse(A))
    assert below == is_bibounded(det(A))
    if below:
        s = trace_bound_psd(inverse(A))
        assert is_psd(A * s - In)


def trace_bound_psd(A):
    # smallest natural above tr(A) bounds a PSD A with bounded trace
    s = A.trace()
    r = max(1, ceil(constant_term(s)))
    return r + 1 if A.field.coerce(r) < s else r


@given(seeds, fields)
def test_gg_implies_succeq_after_left_factor(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    B = random_matrix(rng, field, n, n)
    A = B * random_bounded_scalar(rng, field)
    v = gg(A, B)
    assert v and verify_certificate(A, B, v.certificate)
    C = random_matrix(rng, field, rng.randint(1, 3), n)
    assert succeq(C @ A, C @ B)


@given(seeds, fields)
def test_w_laws(seed, field):
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A = random_matrix(rng, field, rng.randint(1, 3), n)
    B = random_matrix(rng, field, n, rng.randint(1, 3))
    assert w_valuation(A @ B) >= w_valuation(A) + w_valuation(B)
    assert w_valuation(A.gram()) == 2 * w_valuation(A)
    vals = [x.valuation if field is QT else (0 if x else INFINITY) for x in A.entries()]
    assert w_valuation(A) == min(vals)


@given(seeds, fields)
def test_norm_times_identity(seed, field):
    # under the trace order A ~ ||A|| I, and A dominates ||A|| I in the matrix order
    rng = rng_for(seed)
    n = rng.randint(1, 3)
    A = random_matrix(rng, field, n, n)
    m = max_norm(A)[0]
    S = Matrix.identity(n, field) * m
    assert natural_valuation(A.gram().trace()) == natural_valuation(S.gram().trace())
    assert succeq(A, S)
    if det(A) != 0 and is_bibounded(det(A) / m**n):
        assert sim(A, S)


@given(seeds, fields)
def test_mutated_certificates_rejected(seed, field):
    rng, n, A = _pair(seed, field)
    B = random_matrix(rng, field, rng.randint(1, 3), n)
    if rng.random() < 0.7:
        A = random_matrix(rng, field, rng.randint(1, 3), B.rows, zero_prob=0.5) @ B
    v = succeq(A, B)
    if not v:
        return
    C, r = v.certificate.C, v.certificate.r
    assert verify_certificate(A, B, v.certificate)
    # lowest natural r still giving the PSD gap, then one below it
    low = r
    while low > 0 and is_psd(B.gram() * (low - 1) - A.gram()):
        low -= 1
    if low > 0:
        assert not verify_certificate(A, B, BoundedMultiplier(C, low - 1))
    j = next((j for j in range(B.rows) if any(B.row(j))), None)
    if j is not None:
        delta = field.one if rng.random() < 0.5 else field.coerce(Fraction(1, 3))
        rows = C.tolist()
        rows[0][j] = rows[0][j] + delta
        assert not verify_certificate(A, B, BoundedMultiplier(Matrix.from_lists(field, rows, C.cols), r))
