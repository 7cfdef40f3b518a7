"""Immutable dense matrices over one field backend."""

from fractions import Fraction

from .errors import BackendMismatch, ColumnMismatch, SizeMismatch
from .fields import Q, QT, RationalFunction, format_element


class Matrix:
    """Dense ``rows x cols`` matrix with entries from ``field`` (Q or QT).

    Zero-row matrices are allowed (they represent the zero class); the
    column count must be at least one.
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, entries, field=Q, cols=None):
        data = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if cols is None:
            if not data:
                raise SizeMismatch("column count required for an empty matrix")
            cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise SizeMismatch("ragged matrix rows")
        if cols < 1:
            raise SizeMismatch("a matrix needs at least one column")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field, data, cols):
        m = object.__new__(cls)
        m.field = field
        m.rows = len(data)
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def from_lists(cls, field, rows, cols=None):
        """Wrap already-coerced entry lists without copying each element."""
        data = tuple(tuple(r) for r in rows)
        return cls._raw(field, data, cols if cols is not None else len(data[0]))

    @classmethod
    def zeros(cls, rows, cols, field=Q):
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n, field=Q):
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n))
                                     for i in range(n)), n)

    @classmethod
    def diag(cls, values, field=Q):
        values = [field.coerce(v) for v in values]
        n = len(values)
        z = field.zero
        return cls._raw(field, tuple(tuple(values[i] if i == j else z for j in range(n))
                                     for i in range(n)), n)

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def entries(self):
        for r in self._data:
            yield from r

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        d = self._data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i))

    @property
    def T(self):
        if not self.rows:
            raise SizeMismatch("cannot transpose a matrix without rows")
        return Matrix._raw(self.field, tuple(zip(*self._data)), self.rows)

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._data[i][i]
        return acc

    def take_rows(self, indices):
        return Matrix._raw(self.field, tuple(self._data[i] for i in indices), self.cols)

    def take_cols(self, indices):
        indices = list(indices)
        return Matrix._raw(self.field, tuple(tuple(r[j] for j in indices)
                                             for r in self._data), len(indices))

    def nonzero_rows(self):
        """The matrix with all zero rows removed."""
        return Matrix._raw(self.field, tuple(r for r in self._data if any(r)), self.cols)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Matrix):
            return False
        if other.field is not self.field:
            raise BackendMismatch(f"cannot combine {self.field.name} and "
                                  f"{other.field.name} matrices")
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field is other.field and self.cols == other.cols
                and self._data == other._data)

    def __hash__(self):
        return hash((self.field.name, self.cols, self._data))

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        if self.shape != other.shape:
            raise SizeMismatch(f"shapes {self.shape} and {other.shape} differ")
        return Matrix._raw(self.field, tuple(tuple(a + b for a, b in zip(r, s))
                                             for r, s in zip(self._data, other._data)),
                           self.cols)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        if self.shape != other.shape:
            raise SizeMismatch(f"shapes {self.shape} and {other.shape} differ")
        return Matrix._raw(self.field, tuple(tuple(a - b for a, b in zip(r, s))
                                             for r, s in zip(self._data, other._data)),
                           self.cols)

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self._data),
                           self.cols)

    def _scalar(self, c):
        if isinstance(c, int):
            return self.field.coerce(c)
        if isinstance(c, RationalFunction) and self.field is QT:
            return c
        if isinstance(c, Fraction) and self.field is Q:
            return c
        raise BackendMismatch(f"scalar {c!r} does not belong to {self.field.name}")

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = self._scalar(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self._data),
                           self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not self._check(other):
            return NotImplemented
        if self.cols != other.rows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        ocols = tuple(zip(*other._data))
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in ocols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(self.field, tuple(out), other.cols)

    def gram(self):
        """``A^T A`` (defined also for matrices without rows)."""
        n = self.cols
        zero = self.field.zero
        cols = tuple(zip(*self._data)) if self.rows else ((),) * n
        out = [[zero] * n for _ in range(n)]
        for i in range(n):
            ci = cols[i]
            for j in range(i, n):
                cj = cols[j]
                acc = zero
                for a, b in zip(ci, cj):
                    if a and b:
                        acc = acc + a * b
                out[i][j] = acc
                out[j][i] = acc
        return Matrix.from_lists(self.field, out, n)

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(format_element(x) for x in r) + "]"
                         for r in self._data)
        return f"Matrix({self.field.name}, [{rows}])"

    def to_strings(self):
        """Entries serialized in the entry-expression grammar."""
        return [[format_element(x) for x in r] for r in self._data]


def vstack(*blocks):
    """Stack matrices with equal column counts on top of each other."""
    first = blocks[0]
    for b in blocks[1:]:
        first._check(b)
        if b.cols != first.cols:
            raise ColumnMismatch("column counts differ")
    return Matrix._raw(first.field, tuple(r for b in blocks for r in b._data), first.cols)
