"""Elementary row operations and their matrices.

Indices are 0-based.  ``AddMultiple(i, j, a)`` is the matrix ``E_ij(a)``
(row ``i`` += ``a`` * row ``j``), ``Scale(i, a)`` is ``E_i(a)`` and
``Swap(i, j)`` is the permutation ``P_ij``.
"""

from dataclasses import dataclass
from typing import Any, Union

from .fields import is_bibounded, is_bounded
from .matrix import Matrix


@dataclass(frozen=True)
class AddMultiple:
    i: int
    j: int
    alpha: Any

    def apply(self, M):
        a = self.alpha
        M[self.i] = [x + a * y if y else x for x, y in zip(M[self.i], M[self.j])]

    def inverse(self):
        return AddMultiple(self.i, self.j, -self.alpha)

    def is_bibounded(self):
        return self.i != self.j and is_bounded(self.alpha)


@dataclass(frozen=True)
class Scale:
    i: int
    alpha: Any

    def apply(self, M):
        a = self.alpha
        M[self.i] = [a * x for x in M[self.i]]

    def inverse(self):
        return Scale(self.i, 1 / self.alpha)

    def is_bibounded(self):
        return is_bibounded(self.alpha)


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def apply(self, M):
        M[self.i], M[self.j] = M[self.j], M[self.i]

    def inverse(self):
        return self

    def is_bibounded(self):
        return True


ElementaryOp = Union[AddMultiple, Scale, Swap]


def apply_ops(ops, A):
    """``op_k ... op_1 A``: apply ``ops`` in order as row operations."""
    M = A.tolist()
    for op in ops:
        op.apply(M)
    return Matrix.from_lists(A.field, M, A.cols)


def op_matrix(op, n, field):
    return apply_ops([op], Matrix.identity(n, field))


def product(ops, n, field):
    """Matrix product ``M_1 M_2 ... M_k`` of the elementary matrices ``ops``."""
    # M_1 ... M_k = M_1 (M_2 (... (M_k I))): apply right-to-left as row ops
    return apply_ops(list(reversed(ops)), Matrix.identity(n, field))
