"""Archimedean classes of matrices over ordered fields, in exact arithmetic."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .archimedean import (
    BoundedMultiplier, ElementaryFactors, RelationVerdict, ScalarMultiplier,
    SimCertificate, equiv, gg, is_bibounded_matrix, is_bounded_matrix, sim,
    succeq, verify_certificate, w_valuation,
)
from .echelon import (
    ClassDescriptor, QRPair, Shape, archimedean_canonical_form, bibounded_gauss,
    class_descriptor, elementary_factorization, qr_decompose, shape_of,
    succeq_via_gauss,
)
from .elementary import AddMultiple, Scale, Swap
from .fields import (
    INFINITY, Q, QT, RationalFunction, is_bibounded, is_bounded, natural_valuation,
    sign, truncate_below, unit_decompose,
)
from .grammar import parse
from .lattice import box_mult, class_kernel, join, meet, psd_join, psd_meet
from .linalg import (
    Subspace, congruence_diagonalize, gram_schmidt, is_psd, kernel, max_norm, minors,
    moore_penrose_general, moore_penrose_symmetric, parallel_sum, psd_leq, rank, rref,
)
from .matrix import Matrix, vstack

__version__ = "0.1.0"

__all__ = [
    "AddMultiple", "BoundedMultiplier", "ClassDescriptor", "ElementaryFactors",
    "INFINITY", "KERNEL_BACKEND", "Matrix", "Q", "QRPair", "QT", "RationalFunction",
    "RelationVerdict", "ScalarMultiplier", "Scale", "Shape", "SimCertificate",
    "Subspace", "Swap", "archimedean_canonical_form", "bibounded_gauss", "box_mult",
    "class_descriptor", "class_kernel", "congruence_diagonalize",
    "elementary_factorization", "equiv", "gg", "gram_schmidt", "is_bibounded",
    "is_bibounded_matrix", "is_bounded", "is_bounded_matrix", "is_psd", "join",
    "kernel", "max_norm", "meet", "minors", "moore_penrose_general",
    "moore_penrose_symmetric", "natural_valuation", "parallel_sum", "parse", "psd_join",
    "psd_leq", "psd_meet", "qr_decompose", "rank", "rref", "shape_of", "sign", "sim",
    "succeq", "succeq_via_gauss", "truncate_below", "unit_decompose",
    "verify_certificate", "vstack", "w_valuation", "__version__",
]
