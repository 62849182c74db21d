"""
Exception hierarchy for the toolkit.

Every error carries an UPPER_SNAKE ``error_code`` (the ``"error"`` field of the
JSON payload written by the error handler) and the process exit code the CLI
should return for it.
"""
from typing import Any, Optional, Tuple

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_DEVIATION = 2


class GroupToolkitError(Exception):
    """Base class for all toolkit errors"""

    error_code = "TOOLKIT_ERROR"
    exit_code = EXIT_USAGE

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class MalformedTable(GroupToolkitError):
    error_code = "MALFORMED_TABLE"


class NotAGroup(GroupToolkitError):
    """A table fails one of the group axioms; ``witness`` locates the failure"""

    error_code = "NOT_A_GROUP"

    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(message, {"witness": list(witness)})
        self.witness = tuple(witness)


class InvalidSpec(GroupToolkitError):
    error_code = "INVALID_SPEC"


class ClosureTooLarge(GroupToolkitError):
    error_code = "CLOSURE_TOO_LARGE"

    def __init__(self, message: str, cap: int):
        super().__init__(message, {"cap": cap})
        self.cap = cap


class GroupMismatch(GroupToolkitError):
    error_code = "GROUP_MISMATCH"


class EmptySubset(GroupToolkitError):
    error_code = "EMPTY_SUBSET"


class Inconclusive(GroupToolkitError):
    """Iteration bound exhausted before a decision; raise ``max_steps``"""

    error_code = "INCONCLUSIVE"

    def __init__(self, max_steps: int):
        super().__init__(
            f"No stabilization or cycle detected within {max_steps} steps",
            {"max_steps": max_steps},
        )
        self.max_steps = max_steps


class Overflow(GroupToolkitError):
    error_code = "OVERFLOW"


class TooLarge(GroupToolkitError):
    error_code = "TOO_LARGE"

    def __init__(self, message: str, cap: int):
        super().__init__(message, {"cap": cap})
        self.cap = cap


class ParseError(GroupToolkitError):
    error_code = "PARSE_ERROR"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})", {"line": line, "column": column})
        self.line = line
        self.column = column


class InternalInconsistency(GroupToolkitError):
    """An unconditional identity was violated: an implementation bug, never valid output"""

    error_code = "INTERNAL_INCONSISTENCY"
    exit_code = EXIT_CLAIM_DEVIATION


class ClaimDeviation(GroupToolkitError):
    error_code = "CLAIM_DEVIATION"
    exit_code = EXIT_CLAIM_DEVIATION
