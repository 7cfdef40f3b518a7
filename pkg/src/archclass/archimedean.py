"""Archimedean relations between matrices and checkable certificates.

``succeq(A, B)`` decides ``A^T A <= r B^T B`` for some natural ``r``, i.e.
``A`` lies in a class at least as high as ``B``.  Every positive verdict
carries a certificate that :func:`verify_certificate` re-checks using only
exact linear algebra.
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Optional

from .elementary import apply_ops, product
from .errors import BackendMismatch, ColumnMismatch, SizeMismatch
from .fields import INFINITY, constant_term, is_bibounded, is_bounded, natural_valuation
from .linalg import det, is_psd, kernel, max_norm, moore_penrose_general
from .matrix import Matrix


@dataclass(frozen=True)
class BoundedMultiplier:
    """``A = C B`` with ``C`` bounded and ``r B^T B - A^T A`` PSD."""

    C: Matrix
    r: int


@dataclass(frozen=True)
class ScalarMultiplier:
    """``A = alpha B`` with ``alpha`` bounded."""

    alpha: Any


@dataclass(frozen=True)
class ElementaryFactors:
    """``A = M_1 ... M_k B`` with every ``M_i`` a bibounded elementary matrix."""

    ops: tuple


@dataclass(frozen=True)
class SimCertificate:
    forward: BoundedMultiplier
    backward: BoundedMultiplier


@dataclass(frozen=True)
class RelationVerdict:
    holds: bool
    certificate: Optional[Any] = None

    def __bool__(self):
        return self.holds


def _check_pair(A, B):
    if A.field is not B.field:
        raise BackendMismatch("matrices come from different fields")
    if A.cols != B.cols:
        raise ColumnMismatch(f"column counts {A.cols} and {B.cols} differ")


def _padded(M):
    # a matrix without rows behaves like a single zero row
    return M if M.rows else Matrix.zeros(1, M.cols, M.field)


def trace_bound(C):
    """Smallest natural ``r >= tr(C^T C)`` (at least 1); ``C`` must be bounded."""
    field = C.field
    s = field.zero
    for x in C.entries():
        if x:
            s = s + x * x
    r = max(1, math.ceil(constant_term(s)))
    if field.coerce(r) < s:
        r += 1
    return r


def _psd_gap(A, B, r):
    return is_psd(B.gram() * r - A.gram())


def _solve_echelon(A, E, pivots):
    """Unique ``C`` with ``C E = A`` for full-row-rank echelon ``E``, or ``None``."""
    zero = A.field.zero
    rows = []
    for i in range(A.rows):
        a = A.row(i)
        c = []
        for j, p in enumerate(pivots):
            acc = a[p]
            for l in range(j):
                e = E[l, p]
                if e and c[l]:
                    acc = acc - c[l] * e
            c.append(acc / E[j, p] if acc else zero)
        for k in range(A.cols):
            if k in pivots:
                continue
            acc = zero
            for l, x in enumerate(c):
                e = E[l, k]
                if x and e:
                    acc = acc + x * e
            if acc != a[k]:
                return None
        rows.append(c)
    return Matrix.from_lists(A.field, rows, len(pivots))


def _succeq_pinv(A, B):
    # literal route: kernel inclusion, then C = A B^+
    K = kernel(B)
    if K.dim and not (A @ K.matrix().T).is_zero():
        return None
    C = A @ moore_penrose_general(B)
    return C if is_bounded_matrix(C) else None


def succeq(A, B, method="gauss", check_psd=False):
    """Decide ``A ≽ B``; on success attach a :class:`BoundedMultiplier`.

    ``method="pinv"`` uses the multiplier ``C = A B^+`` instead (slower over
    Q(t), kept as an independent route).

    ``B`` is first reduced by bibounded Gauss to a full-row-rank echelon
    ``E = M B``.  Then ``A = C E`` has at most one solution, and it is bounded
    exactly when some bounded multiplier exists.  The certificate multiplier
    is ``[C 0] M``.  The trace bound always yields a PSD gap; ``check_psd``
    re-checks it anyway.
    """
    from .echelon import bibounded_gauss, pivot_columns

    _check_pair(A, B)
    A, B = _padded(A), _padded(B)
    if method == "pinv":
        C = _succeq_pinv(A, B)
        if C is None:
            return RelationVerdict(False)
        return RelationVerdict(True, BoundedMultiplier(C, trace_bound(C)))
    if method != "gauss":
        raise ValueError(f"unknown method {method!r}")
    ops, E = bibounded_gauss(B)
    E = E.nonzero_rows()
    k = E.rows
    if not k:
        if not A.is_zero():
            return RelationVerdict(False)
        C = Matrix.zeros(A.rows, B.rows, A.field)
        return RelationVerdict(True, BoundedMultiplier(C, 1))
    C = _solve_echelon(A, E, pivot_columns(E))
    if C is None or not is_bounded_matrix(C):
        return RelationVerdict(False)
    zero = A.field.zero
    Cw = Matrix.from_lists(A.field, [list(C.row(i)) + [zero] * (B.rows - k)
                                     for i in range(A.rows)], B.rows)
    C = Cw @ apply_ops(ops, Matrix.identity(B.rows, A.field))
    r = trace_bound(C)
    if check_psd and not _psd_gap(A, B, r):
        raise AssertionError("trace bound failed to give a PSD gap")
    return RelationVerdict(True, BoundedMultiplier(C, r))


def sim(A, B):
    """Decide archimedean equivalence; certificate pairs both multipliers."""
    fwd = succeq(A, B)
    if not fwd:
        return RelationVerdict(False)
    bwd = succeq(B, A)
    if not bwd:
        return RelationVerdict(False)
    return RelationVerdict(True, SimCertificate(fwd.certificate, bwd.certificate))


def is_bounded_matrix(A):
    return all(is_bounded(x) for x in A.entries())


def bibounded_minor(A):
    """Position ``(rows, cols)`` of a bibounded ``n x n`` minor, or ``None``."""
    n = A.cols
    if A.rows < n:
        return None
    cols = tuple(range(n))
    for rs in combinations(range(A.rows), n):
        if is_bibounded(det(A.take_rows(rs))):
            return rs, cols
    return None


def is_bibounded_matrix(A):
    """Bounded, at least as many rows as columns, and some maximal minor bibounded."""
    return is_bounded_matrix(A) and bibounded_minor(A) is not None


def _check_square_pair(A, B):
    if A.field is not B.field:
        raise BackendMismatch("matrices come from different fields")
    if A.shape != B.shape or not A.is_square():
        raise SizeMismatch("expected square matrices of equal size")


def gg(A, B):
    """Decide ``A ≫ B``: ``A = alpha B`` for a bounded scalar ``alpha``."""
    _check_square_pair(A, B)
    pos = next(((i, j) for i in range(B.rows) for j in range(B.cols) if B[i, j]), None)
    if pos is None:
        if A.is_zero():
            return RelationVerdict(True, ScalarMultiplier(A.field.zero))
        return RelationVerdict(False)
    alpha = A[pos] / B[pos]
    if A == B * alpha and is_bounded(alpha):
        return RelationVerdict(True, ScalarMultiplier(alpha))
    return RelationVerdict(False)


def equiv(A, B):
    """``A ≡ B``: equal after max-norm normalization, equal norm valuations."""
    _check_square_pair(A, B)
    za, zb = A.is_zero(), B.is_zero()
    if za or zb:
        return za and zb
    na, nb = max_norm(A)[0], max_norm(B)[0]
    return (A * (1 / na) == B * (1 / nb)
            and natural_valuation(na) == natural_valuation(nb))


def w_valuation(A):
    """``v_F(||A||_inf)``, i.e. the least valuation of an entry."""
    if not A.rows:
        return INFINITY
    return natural_valuation(max_norm(A)[0])


def verify_certificate(A, B, cert):
    """Independently re-check a certificate for ``A`` relative to ``B``."""
    if A.field is not B.field:
        return False
    if isinstance(cert, SimCertificate):
        return (verify_certificate(A, B, cert.forward)
                and verify_certificate(B, A, cert.backward))
    if isinstance(cert, BoundedMultiplier):
        A, B = _padded(A), _padded(B)
        C, r = cert.C, cert.r
        if not isinstance(r, int) or r < 0 or C.field is not A.field:
            return False
        if C.shape != (A.rows, B.rows) or C @ B != A:
            return False
        if not is_bounded_matrix(C):
            return False
        return _psd_gap(A, B, r)
    if isinstance(cert, ScalarMultiplier):
        alpha = cert.alpha
        try:
            return A.shape == B.shape and A == B * alpha and is_bounded(alpha)
        except BackendMismatch:
            return False
    if isinstance(cert, ElementaryFactors):
        if not all(op.is_bibounded() for op in cert.ops):
            return False
        if A.cols != B.cols or A.rows != B.rows:
            return False
        n = A.rows
        for op in cert.ops:
            idx = [op.i] + ([op.j] if hasattr(op, "j") else [])
            if any(not isinstance(k, int) or not 0 <= k < n for k in idx):
                return False
        return product(cert.ops, A.rows, A.field) @ B == A
    return False
