# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer-polynomial kernels; same API as :mod:`archclass._polyz`."""

from math import gcd as igcd

cdef tuple ONE = (1,)


cdef tuple _strip(list r):
    cdef Py_ssize_t n = len(r)
    while n and not r[n - 1]:
        n -= 1
    return tuple(r[:n])


def strip(a):
    return _strip(list(a))


cpdef tuple add(tuple a, tuple b):
    cdef Py_ssize_t i
    cdef list r
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i in range(len(b)):
        r[i] = r[i] + b[i]
    return _strip(r)


cpdef tuple sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef list r = list(a)
    if len(r) < n:
        r.extend([0] * (n - len(r)))
    for i in range(len(b)):
        r[i] = r[i] - b[i]
    return _strip(r)


cpdef tuple neg(tuple a):
    return tuple([-c for c in a])


cpdef tuple scale(tuple a, object c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cpdef tuple mul(tuple a, tuple b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef list r
    cdef object x
    if not la or not lb:
        return ()
    if la == 1:
        return scale(b, a[0])
    if lb == 1:
        return scale(a, b[0])
    r = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                r[i + j] = r[i + j] + x * b[j]
    return tuple(r)


def content(a):
    return igcd(*a) if a else 0


cpdef tuple primitive(tuple a):
    cdef object c
    if not a:
        return ()
    c = igcd(*a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple([x // c for x in a])


cpdef tuple prem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, s, i, n
    cdef object lc = b[db], c
    cdef list r = list(a)
    cdef bint unit = lc == 1
    while len(r) > db:
        c = r[len(r) - 1]
        s = len(r) - 1 - db
        if not unit:
            r = [x * lc for x in r]
        for i in range(db + 1):
            r[s + i] = r[s + i] - c * b[i]
        n = len(r) - 1
        while n >= 0 and not r[n]:
            n -= 1
        del r[n + 1:]
    return tuple(r)


cpdef tuple gcd(tuple a, tuple b):
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
        a, b = b, primitive(prem(a, b))
    return a


cpdef tuple divexact(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, k, i, nq
    cdef object lc, c
    cdef list r, q
    if db == 0:
        c = b[0]
        if c == 1:
            return a
        return tuple([x // c for x in a])
    lc = b[db]
    r = list(a)
    nq = len(a) - db
    q = [0] * nq
    for k in range(nq - 1, -1, -1):
        c = r[k + db] // lc
        q[k] = c
        if c:
            for i in range(db + 1):
                r[k + i] = r[k + i] - c * b[i]
    return tuple(q)


cpdef Py_ssize_t low_order(tuple a):
    cdef Py_ssize_t k = 0
    while not a[k]:
        k += 1
    return k


cdef tuple _fix_content(tuple num, tuple den):
    cdef object c = igcd(igcd(*num), igcd(*den))
    if den[0] < 0:
        c = -c
    if c != 1:
        num = tuple([x // c for x in num])
        den = tuple([x // c for x in den])
    return num, den


cpdef tuple rf_normalize(tuple num, tuple den):
    cdef Py_ssize_t a, b
    cdef tuple g
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
    num, den = _fix_content(num, den)
    return a - b, num, den


cpdef tuple rf_mul(tuple n1, tuple d1, tuple n2, tuple d2):
    cdef tuple g1, g2
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


cpdef tuple rf_add(Py_ssize_t v1, tuple n1, tuple d1,
                   Py_ssize_t v2, tuple n2, tuple d2):
    cdef tuple shift, num, den, g, e1, e2
    cdef Py_ssize_t a, v
    if v1 > v2:
        v1, n1, d1, v2, n2, d2 = v2, n2, d2, v1, n1, d1
    shift = (0,) * (v2 - v1)
    if d1 == d2:
        num = add(n1, shift + n2)
        if not num:
            return 0, (), ONE
        a = low_order(num)
        if d1 == ONE:
            num, den = _fix_content(num[a:], ONE)
            return v1 + a, num, den
        v, num, den = rf_normalize(num, d1)
        return v1 + v, num, den
    g = gcd(d1, d2)
    if g == ONE:
        # coprime denominators: the sum is already reduced
        num = add(mul(n1, d2), shift + mul(n2, d1))
        if not num:
            return 0, (), ONE
        a = low_order(num)
        num, den = _fix_content(num[a:], mul(d1, d2))
        return v1 + a, num, den
    e1 = divexact(d1, g)
    e2 = divexact(d2, g)
    num = add(mul(n1, e2), shift + mul(n2, e1))
    if not num:
        return 0, (), ONE
    v, num, den = rf_normalize(num, mul(mul(e1, e2), g))
    return v1 + v, num, den
