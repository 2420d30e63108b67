import functools
import json
import logging
from collections.abc import Callable
from typing import Any, TypeVar

import click

from ..core.errors import CountingError, problem_detail

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

# Exit-code contract: 0 success, 1 verification mismatch, 2 usage or cap error
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def handle_counting_errors(command: F) -> F:
    """Report CountingError as a problem-details JSON document on stderr"""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except CountingError as error:
            logger.warning(f"{error.code}: {error.detail}")
            click.echo(json.dumps(problem_detail(error)), err=True)
            raise SystemExit(error.exit_code) from error

    return wrapper  # type: ignore[return-value]
