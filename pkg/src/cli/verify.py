"""
verify - closed-form counts against brute-force enumeration
"""
import click

from ..core.config import Settings
from ..services.enumeration import check_enumeration_cap
from ..services.verification import OracleChoice, verification_service
from .common import EXIT_MISMATCH, handle_counting_errors


@click.command("verify")
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option(
    "--oracle", type=click.Choice(["naive", "extract", "both"]), default="both"
)
@click.option(
    "--target",
    type=click.IntRange(min=0),
    default=0,
    help="MB target; sizes with n <= target use node n - 1.",
)
@click.option("--force", is_flag=True, help="Allow enumeration above the cap.")
@click.pass_obj
@handle_counting_errors
def verify_command(
    config: Settings, max_n: int, oracle: OracleChoice, target: int, force: bool
) -> None:
    """Check BN(n) and MB(n) against exhaustive enumeration for n = 1..MAX_N."""
    check_enumeration_cap(max_n, force)

    report = verification_service.run(max_n, oracle, target, force, config.WORKERS)
    for record in report.records:
        click.echo(record.render())

    if report.passed:
        click.echo(f"verify: PASS ({len(report.records)} checks)")
        return
    click.echo(
        f"verify: FAIL ({len(report.mismatches)} of {len(report.records)} checks mismatched)"
    )
    raise SystemExit(EXIT_MISMATCH)
