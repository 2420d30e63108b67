"""
count - one BN(n), MB(n) or BN(n)/MB(n) value
"""
from typing import Literal

import click

from ..core.config import Settings
from ..services.counting import MemoTable, bn_count, mb_count, ratio
from ..services.rendering import (
    render_decimal,
    render_exact,
    render_scientific,
    render_scientific_ratio,
)
from .common import handle_counting_errors

Kind = Literal["bn", "mb", "ratio"]
CountFormat = Literal["exact", "scientific", "auto"]


def render_value(kind: Kind, n: int, fmt: CountFormat, config: Settings) -> str:
    """
    Render one requested value

    auto prints counts exactly up to PAPER_EXACT_MAX_N and in scientific form
    above it; ratios in auto mode use SIG_DIGITS significant digits and in
    exact mode the lowest-terms fraction.
    """
    memo = MemoTable()
    if kind == "ratio":
        r = ratio(n, memo)
        if fmt == "exact":
            return str(r)
        if fmt == "scientific":
            return render_scientific_ratio(r, config.SCIENTIFIC_PLACES)
        return render_decimal(r, config.SIG_DIGITS)

    value = bn_count(n, memo) if kind == "bn" else mb_count(n, memo)
    if fmt == "scientific" or (fmt == "auto" and n > config.PAPER_EXACT_MAX_N):
        return render_scientific(value, config.SCIENTIFIC_PLACES)
    return render_exact(value)


@click.command("count")
@click.option("--kind", type=click.Choice(["bn", "mb", "ratio"]), required=True)
@click.option("--n", "n", type=int, required=True, help="Number of nodes.")
@click.option(
    "--format", "fmt", type=click.Choice(["exact", "scientific", "auto"]), default="auto"
)
@click.option(
    "--sig-digits",
    type=click.IntRange(min=1),
    default=None,
    help="Significant digits of a decimal ratio (--kind ratio only).",
)
@click.pass_obj
@handle_counting_errors
def count_command(
    config: Settings, kind: Kind, n: int, fmt: CountFormat, sig_digits: int | None
) -> None:
    """Print BN(n), MB(n) or their ratio."""
    minimum = 0 if kind == "bn" else 1
    if n < minimum:
        raise click.BadParameter(f"{kind} needs n >= {minimum}, got {n}", param_hint="--n")
    if sig_digits is not None and kind != "ratio":
        raise click.BadParameter("applies to --kind ratio only", param_hint="--sig-digits")
    if sig_digits is not None:
        config = config.model_copy(update={"SIG_DIGITS": sig_digits})
    click.echo(render_value(kind, n, fmt, config))
