"""
bench - summands evaluated by the BN and MB recurrences
"""
import click

from ..core.config import Settings
from ..services.verification import verification_service


@click.command("bench")
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.pass_obj
def bench_command(config: Settings, max_n: int) -> None:
    """Print per-n term counts (n for BN, n(n+1)/2 for MB) and wall time."""
    click.echo("n\tbn_terms\tmb_terms\tbig_multiplications\twall_time_s")
    for record in verification_service.bench(max_n):
        click.echo(
            f"{record.n}\t{record.bn_terms}\t{record.mb_terms}\t"
            f"{record.big_multiplications}\t{record.wall_time_seconds:.6f}"
        )
