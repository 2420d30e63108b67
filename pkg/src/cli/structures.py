"""
enum - materialize every MB structure for one target
"""
from typing import Literal

import click

from ..core.config import Settings
from ..services.enumeration import enumerate_mb
from ..services.exports import dot_export_service
from .common import handle_counting_errors


@click.command("enum")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--target", type=click.IntRange(min=0), default=0)
@click.option("--format", "fmt", type=click.Choice(["edges", "dot"]), default="edges")
@click.option("--force", is_flag=True, help="Allow enumeration above the cap.")
@click.pass_obj
@handle_counting_errors
def enum_command(
    config: Settings, n: int, target: int, fmt: Literal["edges", "dot"], force: bool
) -> None:
    """List the MB structures on N nodes, one line (edges) or block (dot) each."""
    for index, key in enumerate(enumerate_mb(n, target, force), 1):
        if fmt == "dot":
            click.echo(dot_export_service.render_block(key, index), nl=False)
        else:
            click.echo(key.render_edges())
