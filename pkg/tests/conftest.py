from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from archclass import QT, Matrix, Q
from archclass.randmat import rng_for

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
fields = st.sampled_from([Q, QT])


def mat(rows, field=QT):
    return Matrix([[str(x) for x in r] for r in rows], field)


def evaluate(x, point):
    """Value of a Q(t) element at a rational point, via its numerator/denominator."""
    point = Fraction(point)
    num = sum(c * point**k for k, c in enumerate(x.numerator))
    den = sum(c * point**k for k, c in enumerate(x.denominator))
    return num / den


@pytest.fixture
def rng():
    return rng_for(12345)
