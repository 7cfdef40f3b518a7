"""Row echelon representatives of archimedean classes.

The QR variant here uses l-infinity normalized orthogonal columns, so ``Q``
is bibounded and ``R`` lies in the class of ``A``.  From ``R`` we read the
class invariants (shape and pivot valuations), and over Q(t) we reduce it
further to the unique archimedean canonical form.
"""

from dataclasses import dataclass

from .archimedean import bibounded_minor
from .elementary import AddMultiple, Scale, Swap
from .errors import BackendMismatch, NotBibounded, NotEchelon, SizeMismatch, ZeroMatrix
from .fields import QT, natural_valuation, truncate_below, unit_decompose
from .linalg import det, dot, gram_schmidt
from .matrix import Matrix, vstack


@dataclass(frozen=True)
class QRPair:
    Q: Matrix
    R: Matrix


def qr_decompose(A):
    """Unique ``A = Q R``: orthogonal l-inf normalized ``Q``, echelon ``R`` with positive pivots."""
    Qm, _ = gram_schmidt(A)
    if Qm is None:
        raise ZeroMatrix("QR decomposition needs a nonzero matrix")
    zero = A.field.zero
    ws = [Qm.column(i) for i in range(Qm.cols)]
    R = []
    for w in ws:
        ww = dot(w, w, zero)
        R.append([dot(A.column(j), w, zero) / ww for j in range(A.cols)])
    return QRPair(Qm, Matrix.from_lists(A.field, R, A.cols))


def pivot_columns(C):
    """Pivot column of each nonzero row; ``NotEchelon`` if ``C`` is not echelon."""
    pivots = []
    seen_zero = False
    for i in range(C.rows):
        k = next((j for j, x in enumerate(C.row(i)) if x), None)
        if k is None:
            seen_zero = True
            continue
        if seen_zero or (pivots and k <= pivots[-1]):
            raise NotEchelon("matrix is not in row echelon form")
        pivots.append(k)
    return pivots


def is_row_echelon(C):
    try:
        pivot_columns(C)
    except NotEchelon:
        return False
    return True


@dataclass(frozen=True)
class Shape:
    """Positions on or right of each row's pivot, plus the pivot list (0-based)."""

    positions: frozenset
    pivots: tuple


def shape_of(C):
    pivots = pivot_columns(C)
    positions = frozenset((i, j) for i, k in enumerate(pivots) for j in range(k, C.cols))
    return Shape(positions, tuple(enumerate(pivots)))


@dataclass(frozen=True)
class ClassDescriptor:
    shape: Shape
    pivot_valuations: tuple


def class_descriptor(A):
    """Shape and pivot valuations of the class of ``A`` (empty for zero)."""
    if A.is_zero():
        return ClassDescriptor(Shape(frozenset(), ()), ())
    R = qr_decompose(A).R
    shape = shape_of(R)
    vals = tuple(natural_valuation(R[i, k]) for i, k in shape.pivots)
    return ClassDescriptor(shape, vals)


def square_echelon(A):
    """Square row echelon matrix in the class of ``A`` (``R`` padded with zero rows)."""
    n = A.cols
    if A.is_zero():
        return Matrix.zeros(n, n, A.field)
    R = qr_decompose(A).R
    if R.rows < n:
        R = vstack(R, Matrix.zeros(n - R.rows, n, A.field))
    return R


def bibounded_gauss(A):
    """Gaussian elimination with largest-absolute-value pivots.

    Returns the operations (apply left to right) and the echelon result.
    Every multiplier is bounded because the pivot dominates its column.
    """
    M = A.tolist()
    ops = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p, best = None, None
        for i in range(r, A.rows):
            x = M[i][c]
            if x:
                ax = abs(x)
                if p is None or ax > best:
                    p, best = i, ax
        if p is None:
            continue
        if p != r:
            op = Swap(r, p)
            op.apply(M)
            ops.append(op)
        piv = M[r][c]
        for j in range(r + 1, A.rows):
            x = M[j][c]
            if x:
                op = AddMultiple(j, r, -x / piv)
                op.apply(M)
                ops.append(op)
        r += 1
    return ops, Matrix.from_lists(A.field, M, A.cols)


def not_bibounded_witness(A):
    """Reason why a square matrix is not bibounded (``None`` if it is)."""
    for i in range(A.rows):
        for j, x in enumerate(A.row(i)):
            if natural_valuation(x) < 0:
                return {"reason": "unbounded entry", "entry": (i, j),
                        "valuation": natural_valuation(x)}
    if A.rows < A.cols:
        return {"reason": "fewer rows than columns"}
    if bibounded_minor(A) is None:
        if A.is_square():
            return {"reason": "determinant not bibounded",
                    "determinant_valuation": natural_valuation(det(A))}
        return {"reason": "no bibounded maximal minor"}
    return None


def elementary_factorization(A):
    """Bibounded elementary factors whose product (in order) is ``A``."""
    if not A.is_square():
        raise SizeMismatch("elementary factorization needs a square matrix")
    witness = not_bibounded_witness(A)
    if witness is not None:
        raise NotBibounded(f"matrix is not bibounded: {witness['reason']}", witness)
    ops, U = bibounded_gauss(A)
    n = A.rows
    M = U.tolist()
    back = []
    for i in range(n - 1, -1, -1):
        d = M[i][i]
        for j in range(i):
            x = M[j][i]
            if x:
                op = AddMultiple(j, i, -x / d)
                op.apply(M)
                back.append(op)
    factors = [op.inverse() for op in ops] + [op.inverse() for op in back]
    factors += [Scale(i, M[i][i]) for i in range(n) if M[i][i] != 1]
    return factors


def succeq_via_gauss(A, B):
    """Decide ``A ≽ B`` for echelon ``B`` by bibounded Gauss on ``[B; A]``.

    The stack reduces to ``[B; 0]`` up to equivalence exactly when the
    rows coming from ``A`` vanish and the surviving echelon form has the
    pivot columns and pivot valuations of ``B``.
    """
    if A.field is not B.field:
        raise BackendMismatch("matrices come from different fields")
    if A.cols != B.cols:
        raise SizeMismatch("column counts differ")
    pivots = pivot_columns(B)
    Bn = B.nonzero_rows()
    if not Bn.rows:
        return A.is_zero()
    _, E = bibounded_gauss(vstack(Bn, A))
    E = E.nonzero_rows()
    if E.rows != Bn.rows or pivot_columns(E) != pivots:
        return False
    return all(natural_valuation(E[i, k]) == natural_valuation(Bn[i, k])
               for i, k in enumerate(pivots))


def archimedean_canonical_form(A):
    """The unique canonical echelon form in the class of ``A`` over Q(t).

    Pivots become ``t^m_i`` and entries above a pivot keep only their
    Laurent terms with exponent below ``m_i``.
    """
    if A.field is not QT:
        raise BackendMismatch("canonical forms exist only over Q(t)")
    if A.is_zero():
        raise ZeroMatrix("the zero class has no canonical form")
    R = qr_decompose(A).R
    M = R.tolist()
    pivots = pivot_columns(R)
    ms = []
    for i, k in enumerate(pivots):
        u, m = unit_decompose(M[i][k])
        inv = 1 / u
        M[i] = [x * inv if x else x for x in M[i]]
        ms.append(m)
    t = QT.t
    for i, k in enumerate(pivots):
        m = ms[i]
        tm = t ** m
        for j in range(i - 1, -1, -1):
            c = M[j][k]
            if not c:
                continue
            q = (c - truncate_below(c, m)) / tm
            if q:
                M[j] = [x - q * y if y else x for x, y in zip(M[j], M[i])]
    return Matrix.from_lists(QT, M, A.cols)
