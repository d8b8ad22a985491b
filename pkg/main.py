"""
chainforge command-line entry point
"""
from typing import List, Optional
import logging
import sys
import time

from pydantic import ValidationError

from cli.dependencies import UsageError, apply_budget, write_output
from cli.parser import build_parser
from config import get_settings
from services.errors import BudgetExceededError, ChainforgeError

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

settings = get_settings()

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run the selected pipeline and write its report

    Returns:
        int: 0 on pass, 1 on a failed verification, 2 on usage, budget or
        unexpected errors and on incomplete results
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        logging.getLogger().setLevel(args.log_level.upper())
        apply_budget(args)
        start_time = time.time()
        report = args.handler(args)
        report.timing = round(time.time() - start_time, 6)
        write_output(report, args.format, args.out)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.warning(f"{e}; rerun with --budget N --allow-large-budget to raise it")
        return EXIT_USAGE
    except (ValidationError, ChainforgeError) as e:
        logger.error(f"Invalid request: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unhandled exception: {e}", exc_info=True)
        return EXIT_USAGE

    if report.status == "fail":
        return EXIT_FAIL
    if report.status == "incomplete":
        return EXIT_USAGE
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(run())
