"""Dense univariate polynomials over the integers (pure-Python kernels).

A polynomial ``a_0 + a_1 t + ... + a_n t^n`` is a tuple ``(a_0, ..., a_n)``
of Python ints with ``a_n != 0``; the zero polynomial is ``()``.

The ``rf_*`` functions operate on rational functions written as
``t^v * N / D`` where ``N(0) != 0``, ``D(0) > 0``, ``gcd(N, D) = 1`` and the
coefficients of ``N`` and ``D`` taken together have content 1.  That
representation is unique, which is what makes equality a tuple comparison.

``_polyz_c`` is a compiled drop-in replacement with the same functions.
"""

from math import gcd as igcd

ONE = (1,)


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return strip(r)


def sub(a, b):
    n = max(len(a), len(b))
    r = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        r[i] -= c
    return strip(r)


def neg(a):
    return tuple(-c for c in a)


def scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return tuple(r)


def content(a):
    return igcd(*a) if a else 0


def primitive(a):
    """Return ``a`` divided by its content, leading coefficient positive."""
    if not a:
        return ()
    c = igcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple(x // c for x in a)


def prem(a, b):
    """Pseudo-remainder: ``lc(b)^k * a mod b`` for some ``k >= 0``."""
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    while len(r) > db:
        c = r[-1]
        s = len(r) - 1 - db
        if lc != 1:
            r = [x * lc for x in r]
        for i in range(db + 1):
            r[s + i] -= c * b[i]
        n = len(r) - 1
        while n >= 0 and not r[n]:
            n -= 1
        del r[n + 1:]
    return tuple(r)


def gcd(a, b):
    """Primitive gcd over Z[t] with positive leading coefficient."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    if len(a) == 1 or len(b) == 1:
        return ONE
    a = primitive(a)
    b = primitive(b)
    if a == b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return ONE
        r = prem(a, b)
        a, b = b, primitive(r)
    return a


def divexact(a, b):
    """Quotient ``a / b``; the division must be exact over Z[t]."""
    if len(b) == 1:
        c = b[0]
        if c == 1:
            return tuple(a)
        return tuple(x // c for x in a)
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] // lc
        q[k] = c
        if c:
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    return tuple(q)


def low_order(a):
    """Index of the lowest nonzero coefficient (``a`` nonzero)."""
    k = 0
    while not a[k]:
        k += 1
    return k


def rf_normalize(num, den):
    """Bring ``num / den`` (integer polys, ``den != 0``) to normal form.

    Returns ``(v, N, D)``; the zero function is ``(0, (), (1,))``.
    """
    if not num:
        return 0, (), ONE
    a = low_order(num)
    b = low_order(den)
    if a:
        num = num[a:]
    if b:
        den = den[b:]
    g = gcd(num, den)
    if g != ONE:
        num = divexact(num, g)
        den = divexact(den, g)
    return a - b, *_fix_content(num, den)


def _fix_content(num, den):
    c = igcd(igcd(*num), igcd(*den))
    if den[0] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


def rf_mul(n1, d1, n2, d2):
    """Product of two normalized nonzero functions; returns ``(N, D)``."""
    if d1 == ONE and d2 == ONE:
        return _fix_content(mul(n1, n2), ONE)
    g1 = gcd(n1, d2)
    g2 = gcd(n2, d1)
    if g1 != ONE:
        n1 = divexact(n1, g1)
        d2 = divexact(d2, g1)
    if g2 != ONE:
        n2 = divexact(n2, g2)
        d1 = divexact(d1, g2)
    return _fix_content(mul(n1, n2), mul(d1, d2))


def rf_add(v1, n1, d1, v2, n2, d2):
    """Sum of two normalized nonzero functions; returns ``(v, N, D)``."""
    if v1 > v2:
        v1, n1, d1, v2, n2, d2 = v2, n2, d2, v1, n1, d1
    shift = (0,) * (v2 - v1)
    if d1 == d2:
        num = add(n1, shift + n2)
        if not num:
            return 0, (), ONE
        a = low_order(num)
        if d1 == ONE:
            return (v1 + a, *_fix_content(num[a:], ONE))
        v, num, den = rf_normalize(num, d1)
        return v1 + v, num, den
    g = gcd(d1, d2)
    if g == ONE:
        # coprime denominators: the sum is already reduced
        num = add(mul(n1, d2), shift + mul(n2, d1))
        if not num:
            return 0, (), ONE
        a = low_order(num)
        return (v1 + a, *_fix_content(num[a:], mul(d1, d2)))
    e1 = divexact(d1, g)
    e2 = divexact(d2, g)
    num = add(mul(n1, e2), shift + mul(n2, e1))
    if not num:
        return 0, (), ONE
    v, num, den = rf_normalize(num, mul(mul(e1, e2), g))
    return v1 + v, num, den
