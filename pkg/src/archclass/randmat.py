"""Random matrices of small height and degree for property checks."""

import random
from fractions import Fraction

from .elementary import AddMultiple, Scale, Swap, product
from .fields import Q, QT, RationalFunction
from .matrix import Matrix


def random_rational(rng, height=3):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_element(rng, field, height=3, degree=2, zero_prob=0.3):
    """A random entry; over Q(t) a small Laurent polynomial, sometimes over ``1 + c t``."""
    if rng.random() < zero_prob:
        return field.zero
    if field is Q:
        return random_rational(rng, height)
    coeffs = [rng.randint(-height, height) for _ in range(rng.randint(1, degree + 1))]
    if not any(coeffs):
        coeffs[0] = rng.choice((-1, 1))
    shift = rng.choice((-1, 0, 0, 0, 1, 1, 2))
    x = RationalFunction.from_laurent(shift, coeffs)
    if rng.random() < 0.2:
        x = x / (1 + rng.randint(1, height) * QT.t)
    return x


def random_matrix(rng, field, rows, cols, **kw):
    return Matrix.from_lists(field, [[random_element(rng, field, **kw) for _ in range(cols)]
                                     for _ in range(rows)], cols)


def random_bounded_scalar(rng, field, height=3):
    if field is Q:
        return random_rational(rng, height)
    coeffs = [rng.randint(-height, height) for _ in range(rng.randint(1, 2))]
    return RationalFunction.from_laurent(rng.randint(0, 1), coeffs)


def random_bibounded_scalar(rng, field, height=3):
    c = Fraction(rng.choice([k for k in range(-height, height + 1) if k]),
                 rng.randint(1, height))
    if field is Q:
        return c
    return RationalFunction.from_laurent(0, [c, rng.randint(-height, height)])


def random_bibounded_op(rng, field, n):
    kind = rng.random()
    if n > 1 and kind < 0.25:
        i, j = rng.sample(range(n), 2)
        return Swap(i, j)
    if n > 1 and kind < 0.8:
        i, j = rng.sample(range(n), 2)
        return AddMultiple(i, j, random_bounded_scalar(rng, field))
    return Scale(rng.randrange(n), random_bibounded_scalar(rng, field))


def random_bibounded(rng, field, n, length=4):
    """Product of random bibounded elementary matrices."""
    ops = [random_bibounded_op(rng, field, n) for _ in range(length)]
    return product(ops, n, field)


def random_psd(rng, field, n, **kw):
    """Gram matrix ``B^T B`` of a random ``B`` with 1..n+1 rows."""
    B = random_matrix(rng, field, rng.randint(1, n + 1), n, **kw)
    return B.gram()


def random_echelon(rng, field, rows, cols, **kw):
    """Random row echelon form (zero rows at the bottom)."""
    data = []
    k = -1
    for _ in range(rows):
        choices = list(range(k + 1, cols))
        if not choices or rng.random() < 0.15:
            break
        k = rng.choice(choices[:2])
        row = [field.zero] * cols
        piv = field.zero
        while not piv:
            piv = random_element(rng, field, zero_prob=0, **kw)
        row[k] = piv
        for j in range(k + 1, cols):
            row[j] = random_element(rng, field, **kw)
        data.append(row)
    while len(data) < rows:
        data.append([field.zero] * cols)
    return Matrix.from_lists(field, data, cols)


def rng_for(seed):
    return random.Random(seed)
