"""
Counting CLI - BN and MB structure spaces on n labeled nodes
"""
import logging
import sys

import click

from . import __version__
from .cli.bench import bench_command
from .cli.count import count_command
from .cli.structures import enum_command
from .cli.table import table_command
from .cli.verify import verify_command
from .core.config import Settings, settings
from .core.correlation import new_correlation_id
from .core.logging_config import setup_logging

logger = logging.getLogger(__name__)


def lift_int_digit_limit() -> None:
    """Allow exact decimal output of counts past 4300 digits (BN(n) from n ~ 165)"""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


@click.group()
@click.version_option(__version__, prog_name="mbcount")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=settings.LOG_LEVEL,
    show_default=True,
    help="Level of the JSON log written to stderr.",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=settings.WORKERS,
    show_default=True,
    help="Processes for brute-force enumeration.",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, workers: int) -> None:
    """Exact counts of BN and Markov blanket structures, with enumeration oracles."""
    lift_int_digit_limit()
    config = Settings(LOG_LEVEL=log_level.upper(), WORKERS=workers)
    correlation_id = new_correlation_id()
    setup_logging(config.LOG_LEVEL)
    logger.debug(
        f"Invoking {ctx.invoked_subcommand}",
        extra={"correlation_id": correlation_id, "workers": config.WORKERS},
    )
    ctx.obj = config


# Subcommands
cli.add_command(count_command)
cli.add_command(table_command)
cli.add_command(verify_command)
cli.add_command(enum_command)
cli.add_command(bench_command)


if __name__ == "__main__":
    cli()
