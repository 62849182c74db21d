"""
Global error handling for the command line
"""
import logging
import sys
import traceback
from typing import Callable, Dict, Optional, TextIO, Type

from models.errors import EXIT_USAGE, GroupToolkitError
from models.schemas import ErrorResponse
from utils.helpers import generate_error_id

logger = logging.getLogger(__name__)

Handler = Callable[[BaseException, Optional[TextIO]], int]


def _emit(payload: ErrorResponse, stream: Optional[TextIO]) -> int:
    stream = stream or sys.stderr
    stream.write(payload.model_dump_json(exclude_none=True) + "\n")
    return payload.exit_code


class ErrorHandlerMiddleware:
    """Maps exceptions escaping a command to a JSON payload on stderr and an exit code"""

    def __init__(self):
        self._handlers: Dict[Type[BaseException], Handler] = {}

    def add_exception_handler(self, exc_class: Type[BaseException], handler: Handler) -> None:
        self._handlers[exc_class] = handler

    def handle(self, exc: BaseException, stream: Optional[TextIO] = None) -> int:
        """Dispatch to the handler registered for the closest class in the MRO"""
        for cls in type(exc).__mro__:
            if cls in self._handlers:
                return self._handlers[cls](exc, stream)
        return self.general_exception_handler(exc, stream)

    @staticmethod
    def toolkit_error_handler(exc: GroupToolkitError, stream: Optional[TextIO] = None) -> int:
        """Handle domain errors"""
        error_id = generate_error_id()

        logger.warning(f"{exc.error_code} {error_id}: {exc.message}")

        return _emit(ErrorResponse(
            error=exc.error_code,
            message=exc.message,
            error_id=error_id,
            exit_code=exc.exit_code,
            details=exc.details or None,
        ), stream)

    @staticmethod
    def usage_error_handler(exc: Exception, stream: Optional[TextIO] = None) -> int:
        """Handle bad command-line values rejected outside the toolkit (pydantic, argparse types)"""
        error_id = generate_error_id()

        logger.warning(f"Usage Error {error_id}: {exc}")

        return _emit(ErrorResponse(
            error="USAGE_ERROR",
            message=str(exc),
            error_id=error_id,
            exit_code=EXIT_USAGE,
        ), stream)

    @staticmethod
    def general_exception_handler(exc: BaseException, stream: Optional[TextIO] = None) -> int:
        """Handle unexpected exceptions"""
        error_id = generate_error_id()

        logger.error(
            f"Unexpected Error {error_id}: {str(exc)}\n"
            f"Traceback: {''.join(traceback.format_exception(type(exc), exc, exc.__traceback__))}"
        )

        return _emit(ErrorResponse(
            error="INTERNAL_ERROR",
            message="An unexpected error occurred",
            error_id=error_id,
            exit_code=EXIT_USAGE,
        ), stream)


# Global error handler instance
error_handler = ErrorHandlerMiddleware()
