"""Main application entry point.

This module parses the command line, configures logging and maps failures
to exit codes: 0 success, 1 unexpected error, 2 configuration or input
error, 3 solver-failure rate above 10 %, 4 I/O failure.
"""

import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from .adapters.api.cli import HANDLERS, build_parser
from .domain.models.exceptions import ShrinkLPError
from .infrastructure.config import get_settings
from .infrastructure.dependency_injection import Container

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def main(argv: Sequence[str] | None = None) -> int:
    """Run one CLI command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    try:
        settings = get_settings()
    except ValidationError as e:
        logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
        logger.error(f"Invalid SHRINKLP_* settings: {e}")
        return 2

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    level = (args.log_level or settings.log_level).upper()
    if level not in logging.getLevelNamesMapping():
        parser.print_usage(sys.stderr)
        print(f"shrinklp: unknown log level '{level}'", file=sys.stderr)
        return 2
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    logger.info(f"Starting {settings.app_name} v{settings.app_version}: {args.command}")

    container = Container(settings)
    try:
        code = HANDLERS[args.command](args, container)
    except ShrinkLPError as e:
        logger.error(f"{e.code.value}: {e}")
        return e.code.exit_code()
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        return 4
    except Exception:
        logger.exception("Unexpected error")
        return 1

    logger.info(f"Finished {args.command} with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
