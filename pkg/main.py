"""
groupcover command-line entry point
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from commands import algebra, examples, groups, subsets, walks
from config import APP_NAME, APP_VERSION, LOG_LEVEL
from middleware.error_handler import error_handler
from models.errors import GroupToolkitError
from models.schemas import OutputFormat

logger = logging.getLogger(__name__)

# Add error handlers
error_handler.add_exception_handler(GroupToolkitError, error_handler.toolkit_error_handler)
error_handler.add_exception_handler(ValidationError, error_handler.usage_error_handler)
error_handler.add_exception_handler(Exception, error_handler.general_exception_handler)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Exact subset products, counting identities and random walks on finite groups",
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--no-header", action="store_true", help="omit the version line from text output")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="logging level for stderr diagnostics")

    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include command modules
    groups.register(subparsers)
    subsets.register(subparsers)
    algebra.register(subparsers)
    walks.register(subparsers)
    examples.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors; usage is exit code 1 here
        return 0 if e.code == 0 else 1

    try:
        logging.basicConfig(
            level=args.log_level.upper(),
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        logger.debug(f"Running {args.command}")
        return args.handler(args)
    except Exception as exc:
        return error_handler.handle(exc)


if __name__ == "__main__":
    sys.exit(main())
