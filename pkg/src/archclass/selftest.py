"""Quick randomized property suites, run by ``archclass selftest``.

Each suite draws small random matrices from a seeded generator and counts
the cases in which an exact identity fails.  The test suite covers the same
ground in more depth; this module gives installed copies a cheap sanity run.
"""

from dataclasses import dataclass

from .archimedean import sim, succeq, verify_certificate, w_valuation
from .echelon import archimedean_canonical_form, qr_decompose, succeq_via_gauss
from .fields import QT, Q
from .lattice import box_mult, join, meet
from .linalg import is_psd, kernel
from .randmat import random_bibounded, random_echelon, random_matrix, random_psd, rng_for


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: int

    @property
    def ok(self):
        return self.failures == 0


def _relations(rng, field, count):
    bad = 0
    for _ in range(count):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, field, m, n)
        B = random_bibounded(rng, field, m) @ A
        v = sim(B, A)
        if not v or not verify_certificate(B, A, v.certificate):
            bad += 1
        if not succeq(A, A):
            bad += 1
    return bad


def _gauss_agreement(rng, field, count):
    bad = 0
    for _ in range(count):
        n = rng.randint(1, 4)
        A = random_echelon(rng, field, rng.randint(1, 4), n)
        B = random_echelon(rng, field, rng.randint(1, 4), n)
        if bool(succeq(A, B)) != succeq_via_gauss(A, B):
            bad += 1
    return bad


def _qr(rng, count):
    bad = 0
    for _ in range(count):
        A = random_matrix(rng, QT, rng.randint(1, 3), rng.randint(1, 3))
        if A.is_zero():
            continue
        qr = qr_decompose(A)
        C = archimedean_canonical_form(A)
        P = random_bibounded(rng, QT, A.rows)
        if qr.Q @ qr.R != A or not sim(C, A) or archimedean_canonical_form(P @ A) != C:
            bad += 1
    return bad


def _lattice(rng, field, count):
    bad = 0
    for _ in range(count):
        n = rng.randint(1, 3)
        A = random_matrix(rng, field, rng.randint(1, 3), n)
        B = random_matrix(rng, field, rng.randint(1, 3), n)
        J, M = join(A, B), meet(A, B)
        if not (sim(meet(A, J), A) and sim(join(A, M), A)):
            bad += 1
        if kernel(M) != kernel(A) & kernel(B) or kernel(J) != kernel(A) + kernel(B):
            bad += 1
    return bad


def _box(rng, field, count):
    bad = 0
    for _ in range(count):
        n = rng.randint(1, 3)
        A, B = (random_matrix(rng, field, n, n) for _ in range(2))
        if not succeq(A @ B, box_mult(A, B)):
            bad += 1
        if w_valuation(box_mult(A, B)) != w_valuation(A) + w_valuation(B):
            bad += 1
    return bad


def _psd(rng, field, count):
    return sum(not is_psd(random_psd(rng, field, rng.randint(1, 4))) for _ in range(count))


def run(seed=0, scale=1):
    """Run every suite with ``scale`` times the default case counts."""
    rng = rng_for(seed)
    results = []
    for field in (Q, QT):
        tag = "Q" if field is Q else "Q(t)"
        for name, fn, count in (("relations", _relations, 20), ("gauss", _gauss_agreement, 20),
                                ("lattice", _lattice, 10), ("box", _box, 20),
                                ("psd", _psd, 20)):
            cases = count * scale
            results.append(SuiteResult(f"{name}[{tag}]", cases, fn(rng, field, cases)))
    results.append(SuiteResult("canonical[Q(t)]", 10 * scale, _qr(rng, 10 * scale)))
    return results
