"""Exception hierarchy.

Every error carries a short ``kind`` tag; the CLI maps kinds onto exit codes
(usage-level kinds exit 1, mathematical precondition failures exit 2).
"""


class FlagSpecError(Exception):
    kind = "error"
    exit_code = 1


class InvalidInputError(FlagSpecError, ValueError):
    """Malformed or out-of-range input (bad Lie type, wrong vector length, ...)."""

    kind = "invalid-input"


class NotSpincError(FlagSpecError, ValueError):
    kind = "not-spinc"
    exit_code = 2


class NotKahlerError(FlagSpecError, ValueError):
    kind = "not-kahler"
    exit_code = 2


class UnitMismatchError(FlagSpecError, ValueError):
    kind = "unit-mismatch"
    exit_code = 2


class SingularInputError(FlagSpecError, ValueError):
    kind = "singular-input"
    exit_code = 2
