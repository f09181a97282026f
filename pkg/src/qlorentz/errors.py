"""Exception hierarchy shared by the symbolic engine, numerics and CLI."""


class QLorentzError(Exception):
    """Base class for all errors raised by this package."""


class NonInvertibleScalarError(QLorentzError, ZeroDivisionError):
    pass


class AlgebraMismatchError(QLorentzError, ValueError):
    pass


class ReductionBudgetError(QLorentzError, RuntimeError):
    """Raised when rewriting does not terminate within the step budget."""


class ExprSyntaxError(QLorentzError, ValueError):
    """Lexical or syntax error in expression text; ``offset`` is a byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownIdentityError(QLorentzError, KeyError):
    pass


class NumericPreconditionError(QLorentzError, ValueError):
    """Base for numeric domain violations (CLI exit code 3)."""


class SuperluminalFrameError(NumericPreconditionError):
    pass


class MasslessFrameError(NumericPreconditionError):
    pass


class InvariantViolationError(NumericPreconditionError):
    pass


class DomainError(NumericPreconditionError):
    pass


class GridTooSmallError(NumericPreconditionError):
    pass


class UnitBindingError(QLorentzError, ValueError):
    pass
