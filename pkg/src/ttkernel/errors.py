"""Error types with stable machine-readable codes."""

from __future__ import annotations


class KernelError(Exception):
    """Base of all user-facing errors. ``code`` is stable; ``line``/``col``
    are attached by the frontend when a source span is known."""

    code = "error"

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.line = line
        self.col = col


class ParseError(KernelError):
    code = "parse_error"


class CheckError(KernelError):
    """Base of type-checking errors."""

    code = "type_error"


class UnboundVariable(CheckError):
    code = "unbound_variable"


class UnknownConstant(CheckError):
    code = "unknown_constant"


class ArityMismatch(CheckError):
    code = "arity_mismatch"


class NotAFunction(CheckError):
    code = "not_a_function"


class CannotInfer(CheckError):
    code = "cannot_infer"


class Mismatch(CheckError):
    """Conversion failure; carries both sides in normal form."""

    code = "mismatch"

    def __init__(self, message, expected_nf=None, actual_nf=None):
        super().__init__(message)
        self.expected_nf = expected_nf
        self.actual_nf = actual_nf


class MotiveMismatch(CheckError):
    code = "motive_mismatch"


class DuplicateName(CheckError):
    code = "duplicate_name"


class UnknownName(KernelError):
    code = "unknown_name"


class FuelExhausted(KernelError):
    """The rewriting oracle ran out of fuel: a kernel bug, not a user error."""

    code = "fuel_exhausted"
