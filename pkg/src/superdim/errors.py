"""Exception hierarchy."""


class SuperdimError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SuperdimError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InvalidAlgebraError(SuperdimError, ValueError):
    pass


class PreconditionError(SuperdimError, ValueError):
    pass


class SingularSystemError(SuperdimError, ArithmeticError):
    pass


class DegenerateFormError(SuperdimError, ArithmeticError):
    """Some 1 - c1(beta) vanishes, so the symmetric-function form cannot be used."""


class ConsistencyError(SuperdimError, AssertionError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, k: int | None = None):
        super().__init__(message)
        self.k = k
