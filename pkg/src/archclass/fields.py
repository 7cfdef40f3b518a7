"""Exact ordered-field backends: the rationals and Q(t) with t > 0 infinitesimal.

Elements of Q are plain :class:`fractions.Fraction` objects.  Elements of
Q(t) are :class:`RationalFunction` objects, ordered by the sign of the
lowest-order coefficient of their Laurent expansion at ``t = 0``; in that
order ``t`` is smaller than every positive rational.

The natural valuation is an ``int`` for nonzero elements and ``INFINITY``
(``math.inf``) for zero, so the usual ``<`` and ``+`` already behave as on
``Z ∪ {∞}``.
"""

import math
import os
from fractions import Fraction
from math import lcm

from ._kernels import kernels as _k
from .errors import BackendMismatch, DivisionByZero, ZeroInput

INFINITY = math.inf

# Validate normal forms after every construction (slow; for testing).
DEBUG = bool(os.environ.get("ARCHCLASS_DEBUG"))

_ONE = (1,)


class RationalFunction:
    """Element ``t^v * N(t) / D(t)`` of Q(t), always in normal form.

    ``N`` and ``D`` are integer coefficient tuples (constant term first)
    with ``N(0) != 0``, ``D(0) > 0``, no common factor and joint content 1.
    Instances are immutable and hashable.
    """

    __slots__ = ("_v", "_num", "_den")

    def __init__(self, numerator=(), denominator=(1,)):
        """Build ``numerator / denominator`` from rational coefficient lists."""
        num, den = _clear_denominators(numerator, denominator)
        if not den:
            raise DivisionByZero("zero denominator")
        self._v, self._num, self._den = _k.rf_normalize(num, den)
        if DEBUG:
            self.check_invariants()

    @classmethod
    def _make(cls, v, num, den):
        self = object.__new__(cls)
        self._v = v
        self._num = num
        self._den = den
        if DEBUG:
            self.check_invariants()
        return self

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        if not c:
            return _ZERO
        return cls._make(0, (c.numerator,), (c.denominator,))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        c = Fraction(coefficient)
        if not c:
            return _ZERO
        return cls._make(exponent, (c.numerator,), (c.denominator,))

    @classmethod
    def from_laurent(cls, shift, coefficients):
        """``t^shift * sum(c_k t^k)`` for rational ``coefficients``."""
        coeffs = [Fraction(c) for c in coefficients]
        if not any(coeffs):
            return _ZERO
        d = lcm(*(c.denominator for c in coeffs))
        num = _k.strip([int(c * d) for c in coeffs])
        v, num, den = _k.rf_normalize(num, (d,))
        return cls._make(v + shift, num, den)

    def check_invariants(self):
        """Raise ``AssertionError`` unless the normal form holds."""
        v, num, den = self._v, self._num, self._den
        assert isinstance(v, int)
        assert den and den[-1] != 0 and den[0] > 0
        if not num:
            assert v == 0 and den == _ONE
            return
        assert num[-1] != 0 and num[0] != 0
        assert math.gcd(_k.content(num), _k.content(den)) == 1
        assert _k.gcd(num, den) == _ONE

    # -- normal-form accessors ---------------------------------------------

    @property
    def valuation(self):
        return self._v if self._num else INFINITY

    def sign(self):
        if not self._num:
            return 0
        return 1 if self._num[0] > 0 else -1

    def lowest_coefficient(self):
        """Coefficient of ``t^valuation`` in the Laurent expansion."""
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[0], self._den[0])

    @property
    def numerator(self):
        """Numerator in Q[t], scaled so the denominator's lowest coefficient is 1."""
        d0 = self._den[0]
        shift = (Fraction(0),) * max(self._v, 0)
        return shift + tuple(Fraction(c, d0) for c in self._num)

    @property
    def denominator(self):
        d0 = self._den[0]
        if not self._num:
            return (Fraction(1),)
        shift = (Fraction(0),) * max(-self._v, 0)
        return shift + tuple(Fraction(c, d0) for c in self._den)

    def is_laurent_polynomial(self):
        return len(self._den) == 1

    def laurent_terms(self):
        """``{exponent: coefficient}`` for a Laurent polynomial."""
        if len(self._den) != 1:
            raise ValueError("not a Laurent polynomial")
        d = self._den[0]
        return {self._v + k: Fraction(c, d) for k, c in enumerate(self._num) if c}

    def series(self, count):
        """First ``count`` coefficients of ``N/D`` as a power series."""
        num, den = self._num, self._den
        d0 = den[0]
        out = []
        for k in range(count):
            acc = Fraction(num[k]) if k < len(num) else Fraction(0)
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            out.append(acc / d0)
        return out

    def truncate_below(self, m):
        """Sum of the Laurent terms with exponent ``< m``."""
        if not self._num or m <= self._v:
            return _ZERO
        if len(self._den) == 1 and self._v + len(self._num) <= m:
            return self
        return RationalFunction.from_laurent(self._v, self.series(m - self._v))

    def unit_decompose(self):
        if not self._num:
            raise ZeroInput("cannot decompose zero")
        return RationalFunction._make(0, self._num, self._den), self._v

    # -- arithmetic --------------------------------------------------------

    def __bool__(self):
        return bool(self._num)

    def __hash__(self):
        if self._v == 0 and self._den == _ONE and len(self._num) <= 1:
            return hash(self._num[0] if self._num else 0)
        return hash((self._v, self._num, self._den))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self._v == other._v and self._num == other._num
                    and self._den == other._den)
        if isinstance(other, int):
            return self == _coerce(other)
        return NotImplemented

    def __neg__(self):
        if not self._num:
            return self
        return RationalFunction._make(self._v, _k.neg(self._num), self._den)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._num:
            return other
        if not other._num:
            return self
        return RationalFunction._make(*_k.rf_add(
            self._v, self._num, self._den, other._v, other._num, other._den))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return _ZERO
        num, den = _k.rf_mul(self._num, self._den, other._num, other._den)
        return RationalFunction._make(self._v + other._v, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self._num:
            raise DivisionByZero("division by zero in Q(t)")
        num, den = self._den, self._num
        if den[0] < 0:
            num, den = _k.neg(num), _k.neg(den)
        return RationalFunction._make(-self._v, num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** -e
        if len(self._num) == 1 and len(self._den) == 1:
            return RationalFunction._make(self._v * e, (self._num[0] ** e,),
                                          (self._den[0] ** e,))
        result, base = _ONE_RF, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- ordering ----------------------------------------------------------

    def _cmp(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __repr__(self):
        return f"RationalFunction({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction.constant(x)
    if isinstance(x, Fraction):
        raise BackendMismatch("cannot mix Q and Q(t) elements")
    return NotImplemented


def _clear_denominators(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    d = lcm(*(c.denominator for c in num + den))
    return (_k.strip([int(c * d) for c in num]),
            _k.strip([int(c * d) for c in den]))


_ZERO = RationalFunction._make(0, (), _ONE)
_ONE_RF = RationalFunction._make(0, _ONE, _ONE)


# -- field objects -----------------------------------------------------------


class RationalField:
    """The archimedean field Q, realized by :class:`fractions.Fraction`."""

    name = "Q"
    element_type = Fraction
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            from .grammar import parse
            return parse(x, self)
        if isinstance(x, RationalFunction):
            raise BackendMismatch("Q(t) element given to Q")
        raise TypeError(f"cannot convert {x!r} to an element of Q")

    def __repr__(self):
        return "Q"


class RationalFunctionField:
    """Q(t) with ``t`` a positive infinitesimal (value group Z)."""

    name = "Q(t)"
    element_type = RationalFunction
    zero = _ZERO
    one = _ONE_RF
    t = RationalFunction._make(1, _ONE, _ONE)

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction.constant(x)
        if isinstance(x, str):
            from .grammar import parse
            return parse(x, self)
        raise TypeError(f"cannot convert {x!r} to an element of Q(t)")

    def __repr__(self):
        return "QT"


Q = RationalField()
QT = RationalFunctionField()

FIELDS = {"Q": Q, "Q(t)": QT, "Qt": QT}


def field_of(x):
    if isinstance(x, RationalFunction):
        return QT
    if isinstance(x, (Fraction, int)):
        return Q
    raise TypeError(f"not a field element: {x!r}")


def get_field(name):
    try:
        return FIELDS[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; expected Q or Q(t)") from None


# -- element operations ------------------------------------------------------


def _same_backend(a, b):
    if field_of(a) is not field_of(b):
        raise BackendMismatch("operands belong to different fields")


def add(a, b):
    _same_backend(a, b)
    return a + b


def sub(a, b):
    _same_backend(a, b)
    return a - b


def mul(a, b):
    _same_backend(a, b)
    return a * b


def div(a, b):
    _same_backend(a, b)
    if not b:
        raise DivisionByZero("division by zero")
    return a / b


def sign(a):
    if isinstance(a, RationalFunction):
        return a.sign()
    return (a > 0) - (a < 0)


def natural_valuation(a):
    """Order of ``a`` at ``t = 0`` (Q(t)), 0 on Q, ``INFINITY`` for zero."""
    if isinstance(a, RationalFunction):
        return a.valuation
    return 0 if a else INFINITY


def is_bounded(a):
    return natural_valuation(a) >= 0


def is_bibounded(a):
    return natural_valuation(a) == 0


def unit_decompose(a):
    """Split ``a = unit * t^m`` with ``unit`` bibounded; returns ``(unit, m)``."""
    if isinstance(a, RationalFunction):
        return a.unit_decompose()
    if not a:
        raise ZeroInput("cannot decompose zero")
    return Fraction(a), 0


def truncate_below(a, m):
    """Laurent polynomial made of the terms of ``a`` with exponent below ``m``."""
    if not isinstance(a, RationalFunction):
        raise BackendMismatch("truncation is only defined over Q(t)")
    return a.truncate_below(m)


def constant_term(a):
    """Coefficient of ``t^0`` in the expansion of a bounded element."""
    if isinstance(a, RationalFunction):
        v = a.valuation
        if v < 0:
            raise ValueError("unbounded element has no constant term")
        return a.lowest_coefficient() if v == 0 else Fraction(0)
    return Fraction(a)


# -- serialization -----------------------------------------------------------


def _format_term(c, e, first):
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        mono = "t" if e == 1 else f"t^{e}"
        body = mono if mag == 1 else f"{mag}*{mono}"
    if first:
        return "-" + body if c < 0 else body
    return (" - " if c < 0 else " + ") + body


def _format_poly(terms):
    return "".join(_format_term(c, e, i == 0) for i, (e, c) in enumerate(terms))


def format_element(a):
    """Canonical spelling of ``a`` in the entry-expression grammar."""
    if not isinstance(a, RationalFunction):
        return str(Fraction(a))
    if not a:
        return "0"
    if a.is_laurent_polynomial():
        return _format_poly(sorted(a.laurent_terms().items()))
    num = [(e, c) for e, c in enumerate(a.numerator) if c]
    den = [(e, c) for e, c in enumerate(a.denominator) if c]
    ns = _format_poly(num)
    if len(num) > 1:
        ns = f"({ns})"
    return f"{ns}/({_format_poly(den)})"
