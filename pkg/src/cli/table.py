"""
table - the BN/MB comparison table for n = 1..max_n
"""
import click

from ..core.config import Settings
from ..services.table import TableFormat, count_rows, format_table
from .common import handle_counting_errors


@click.command("table")
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "md", "tsv"]), default="csv")
@click.option("--paper", "paper_mode", is_flag=True, help="Replicate the published layout.")
@click.option("--sig-digits", type=click.IntRange(min=1), default=None)
@click.pass_obj
@handle_counting_errors
def table_command(
    config: Settings, max_n: int, fmt: TableFormat, paper_mode: bool, sig_digits: int | None
) -> None:
    """Emit n, BN(n), MB(n) and BN(n)/MB(n) for n = 1..MAX_N."""
    rows = count_rows(max_n, paper_mode=paper_mode, sig_digits=sig_digits or config.SIG_DIGITS)
    click.echo(format_table(rows, fmt), nl=False)
