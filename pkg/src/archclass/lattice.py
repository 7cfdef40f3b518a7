"""Lattice operations on archimedean classes and the box product.

Classes are handled through representative matrices; two results denote
the same class when :func:`archclass.archimedean.sim` holds between them.
"""

from .errors import BackendMismatch, ColumnMismatch, NotPSD, SizeMismatch
from .linalg import is_psd, kernel, max_norm, moore_penrose_symmetric, parallel_sum
from .matrix import Matrix, vstack


def _check(A, B):
    if A.field is not B.field:
        raise BackendMismatch("matrices come from different fields")
    if A.cols != B.cols:
        raise ColumnMismatch(f"column counts {A.cols} and {B.cols} differ")


def meet(A, B):
    """Greatest lower bound: the stacked matrix ``[A; B]``."""
    _check(A, B)
    return vstack(A, B)


def join(A, B):
    """Least upper bound ``[A (G)^+ B^T B ; B (G)^+ A^T A]`` with ``G = A^T A + B^T B``."""
    _check(A, B)
    AA, BB = A.gram(), B.gram()
    G = moore_penrose_symmetric(AA + BB)
    blocks = [X for X in (A @ G @ BB if A.rows else None,
                          B @ G @ AA if B.rows else None) if X is not None]
    if not blocks:
        return Matrix.zeros(1, A.cols, A.field)
    return vstack(*blocks)


def _check_psd(A, B):
    if A.field is not B.field:
        raise BackendMismatch("matrices come from different fields")
    if A.shape != B.shape:
        raise SizeMismatch("matrices differ in size")
    if not (is_psd(A) and is_psd(B)):
        raise NotPSD("operands must be positive semidefinite")


def psd_meet(A, B):
    _check_psd(A, B)
    return A + B


def psd_join(A, B):
    _check_psd(A, B)
    return parallel_sum(A, B)


def class_kernel(A):
    """Kernel of the class of ``A`` (the same for every representative)."""
    return kernel(A)


def box_mult(A, B):
    """``||A|| ||B|| I_n``: a commutative surrogate product of classes.

    Any representatives with ``n`` columns are accepted (stacked meets and
    joins included); the result is square.
    """
    _check(A, B)
    c = max_norm(A)[0] * max_norm(B)[0]
    return Matrix.identity(A.cols, A.field) * c
