"""Exception hierarchy."""


class ArchClassError(Exception):
    """Base class for all errors raised by this package."""


class BackendMismatch(ArchClassError, TypeError):
    """Operands come from different field backends."""


class DivisionByZero(ArchClassError, ZeroDivisionError):
    pass


class ZeroInput(ArchClassError, ValueError):
    pass


class ParseError(ArchClassError, ValueError):
    pass


class SizeMismatch(ArchClassError, ValueError):
    pass


class ColumnMismatch(SizeMismatch):
    pass


class BadSize(ArchClassError, ValueError):
    pass


class NotSymmetric(ArchClassError, ValueError):
    pass


class NotPSD(ArchClassError, ValueError):
    pass


class ZeroMatrix(ArchClassError, ValueError):
    pass


class NotEchelon(ArchClassError, ValueError):
    pass


class NotBibounded(ArchClassError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularMatrix(ArchClassError, ValueError):
    pass
