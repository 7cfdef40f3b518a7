"""Exact dense linear algebra over an ordered field backend.

Everything here works for both Q and Q(t): the algorithms only use field
operations and the sign of elements, never numerical pivoting.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import BadSize, NotPSD, NotSymmetric, SingularMatrix, SizeMismatch
from .fields import sign
from .matrix import Matrix


def _rows(A):
    return [list(A.row(i)) for i in range(A.rows)]


def rref(A):
    """Reduced row echelon form of ``A`` and its pivot columns."""
    M = _rows(A)
    pivots = []
    r = 0
    for c in range(A.cols):
        p = next((i for i in range(r, A.rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            inv = 1 / piv
            M[r] = [x * inv if x else x for x in M[r]]
        prow = M[r]
        for i in range(A.rows):
            f = M[i][c]
            if i != r and f:
                M[i] = [x - f * y if y else x for x, y in zip(M[i], prow)]
        pivots.append(c)
        r += 1
        if r == A.rows:
            break
    return Matrix.from_lists(A.field, M, A.cols), tuple(pivots)


def rank(A):
    return len(rref(A)[1])


class Subspace:
    """Subspace of ``F^n`` held as the nonzero rows of an RREF basis matrix.

    Because the RREF of a spanning set is unique, two subspaces are equal
    exactly when their stored bases are equal.
    """

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, field, n, vectors=()):
        vectors = [tuple(v) for v in vectors]
        self.field = field
        self.n = n
        if vectors:
            R, piv = rref(Matrix.from_lists(field, vectors, n))
            self.basis = tuple(R.row(i) for i in range(len(piv)))
            self.pivots = piv
        else:
            self.basis = ()
            self.pivots = ()

    @classmethod
    def whole(cls, field, n):
        return cls(field, n, Matrix.identity(n, field).tolist())

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        return Matrix.from_lists(self.field, self.basis, self.n)

    def contains(self, v):
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return not any(v)

    def __le__(self, other):
        return all(other.contains(b) for b in self.basis)

    def __ge__(self, other):
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __add__(self, other):
        return Subspace(self.field, self.n, self.basis + other.basis)

    def complement(self):
        """Orthogonal complement (annihilator under the standard form)."""
        if not self.basis:
            return Subspace.whole(self.field, self.n)
        return kernel(self.matrix())

    def __and__(self, other):
        return (self.complement() + other.complement()).complement()

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def kernel(A):
    """Null space ``{x : A x = 0}``."""
    R, pivots = rref(A)
    n = A.cols
    zero, one = A.field.zero, A.field.one
    free = [j for j in range(n) if j not in pivots]
    vectors = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        vectors.append(v)
    return Subspace(A.field, n, vectors)


def image(A):
    """Column space of ``A``."""
    if not A.rows:
        raise SizeMismatch("matrix has no rows")
    return Subspace(A.field, A.rows, A.T.tolist())


def max_norm(A):
    """``max |a_ij|`` together with the first row-major position attaining it."""
    best, where = A.field.zero, None
    for i in range(A.rows):
        for j, x in enumerate(A.row(i)):
            ax = abs(x)
            if where is None or ax > best:
                best, where = ax, (i, j)
    return best, where


def dot(u, v, zero):
    acc = zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def gram_schmidt(V):
    """Orthogonal, l-infinity normalized basis of the column space of ``V``.

    Columns are processed left to right; a column lying in the span of the
    previous ones is skipped.  Returns the basis as the columns of a matrix
    and the indices of the columns that produced them.
    """
    zero = V.field.zero
    ws, norms, used = [], [], []
    for j in range(V.cols):
        v = V.column(j)
        w = list(v)
        for u, uu in zip(ws, norms):
            c = dot(v, u, zero)
            if c:
                c = c / uu
                w = [x - c * y if y else x for x, y in zip(w, u)]
        if not any(w):
            continue
        m = max(abs(x) for x in w)
        w = [x / m if x else x for x in w]
        ws.append(w)
        norms.append(dot(w, w, zero))
        used.append(j)
    if not ws:
        return None, ()
    Q = Matrix.from_lists(V.field, list(zip(*ws)), len(ws))
    return Q, tuple(used)


def inverse(A):
    """Exact inverse by Gauss-Jordan elimination."""
    n = A.rows
    if n != A.cols:
        raise SizeMismatch("only square matrices can be inverted")
    zero, one = A.field.zero, A.field.one
    M = [list(A.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv if x else x for x in M[c]]
        prow = M[c]
        for i in range(n):
            f = M[i][c]
            if i != c and f:
                M[i] = [x - f * y if y else x for x, y in zip(M[i], prow)]
    return Matrix.from_lists(A.field, [r[n:] for r in M], n)


def det(A):
    n = A.rows
    if n != A.cols:
        raise SizeMismatch("determinant of a non-square matrix")
    M = _rows(A)
    result = A.field.one
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return A.field.zero
        if p != c:
            M[c], M[p] = M[p], M[c]
            result = -result
        piv = M[c][c]
        result = result * piv
        for i in range(c + 1, n):
            f = M[i][c]
            if f:
                f = f / piv
                M[i] = [x - f * y if y else x for x, y in zip(M[i], M[c])]
    return result


@dataclass(frozen=True)
class CongruenceDiag:
    """Witness ``A = P^T D P`` with ``P`` invertible and ``D`` diagonal."""

    P: Matrix
    D: Matrix

    def reconstruct(self):
        return self.P.T @ self.D @ self.P


def _require_symmetric(A):
    if not A.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")


def congruence_diagonalize(A):
    """Symmetric elimination producing ``A = P^T D P``."""
    _require_symmetric(A)
    n = A.rows
    M = _rows(A)
    E = Matrix.identity(n, A.field).tolist()
    for k in range(n):
        if not M[k][k]:
            j = next((j for j in range(k + 1, n) if M[j][j]), None)
            if j is not None:
                M[k], M[j] = M[j], M[k]
                for row in M:
                    row[k], row[j] = row[j], row[k]
                E[k], E[j] = E[j], E[k]
            else:
                j = next((j for j in range(k + 1, n) if M[k][j]), None)
                if j is None:
                    continue
                # e_k -> e_k + e_j makes the pivot 2*M[k][j] != 0
                M[k] = [x + y for x, y in zip(M[k], M[j])]
                for row in M:
                    row[k] = row[k] + row[j]
                E[k] = [x + y for x, y in zip(E[k], E[j])]
        d = M[k][k]
        for j in range(k + 1, n):
            f = M[j][k]
            if not f:
                continue
            f = f / d
            M[j] = [x - f * y if y else x for x, y in zip(M[j], M[k])]
            for row in M:
                if row[k]:
                    row[j] = row[j] - f * row[k]
            E[j] = [x - f * y if y else x for x, y in zip(E[j], E[k])]
    D = Matrix.diag([M[i][i] for i in range(n)], A.field)
    Einv = inverse(Matrix.from_lists(A.field, E, n))
    return CongruenceDiag(Einv.T, D)


def is_psd(A):
    """Decide ``v^T A v >= 0`` for all ``v`` by symmetric elimination."""
    _require_symmetric(A)
    n = A.rows
    M = _rows(A)
    for k in range(n):
        d = M[k][k]
        s = sign(d)
        if s < 0:
            return False
        if s == 0:
            # a 2x2 principal minor would be -a_kj^2 < 0
            if any(M[k][j] for j in range(k + 1, n)):
                return False
            continue
        rk = M[k]
        for j in range(k + 1, n):
            f = M[j][k]
            if not f:
                continue
            f = f / d
            row = M[j]
            for l in range(k + 1, n):
                if rk[l]:
                    row[l] = row[l] - f * rk[l]
    return True


def psd_leq(A, B):
    """Loewner order: ``B - A`` is positive semidefinite."""
    if A.shape != B.shape:
        raise SizeMismatch("matrices differ in size")
    return is_psd(B - A)


def moore_penrose_symmetric(C):
    """Inverse of ``C`` on its image, zero on its kernel.

    With ``P`` the orthogonal projector onto the kernel, ``C + P`` is
    invertible and ``C^+ = (C + P)^{-1} - P``.  For invertible ``C`` this is
    just ``C^{-1}``, which keeps intermediate expressions small.
    """
    _require_symmetric(C)
    K = kernel(C)
    if not K.dim:
        return inverse(C)
    if K.dim == C.rows:
        return Matrix.zeros(C.rows, C.cols, C.field)
    N = K.matrix().T
    P = N @ inverse(N.gram()) @ N.T
    return inverse(C + P) - P


def moore_penrose_general(B):
    """``(B^T B)^+ B^T``: least-norm solution operator of ``B x = v``."""
    if not B.rows:
        raise SizeMismatch("matrix has no rows")
    return moore_penrose_symmetric(B.gram()) @ B.T


def parallel_sum(A, B):
    """``A : B = A (A + B)^+ B`` for positive semidefinite ``A``, ``B``."""
    if A.shape != B.shape:
        raise SizeMismatch("matrices differ in size")
    for X in (A, B):
        if not is_psd(X):
            raise NotPSD("parallel sum needs positive semidefinite operands")
    return A @ moore_penrose_symmetric(A + B) @ B


def minors(A, k):
    """All ``k x k`` minors, ordered lexicographically by (rows, columns)."""
    if k < 1 or k > min(A.rows, A.cols):
        raise BadSize(f"no {k}x{k} minors in a {A.rows}x{A.cols} matrix")
    out = []
    for rs in combinations(range(A.rows), k):
        sub = A.take_rows(rs)
        for cs in combinations(range(A.cols), k):
            out.append(det(sub.take_cols(cs)))
    return out
