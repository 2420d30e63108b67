"""
BN/MB comparison table: rows and their CSV / TSV / Markdown encodings
"""
import csv
import io
from collections.abc import Iterable, Iterator
from typing import Literal

from ..core.config import settings
from ..schemas.counting import CountRow
from .counting import ExactRatio, MemoTable, bn_count, mb_count
from .rendering import render_count, render_decimal

TableFormat = Literal["csv", "md", "tsv"]

HEADER = ("n", "bn", "mb", "ratio")


def make_row(n: int, memo: MemoTable, paper_mode: bool, sig_digits: int) -> CountRow:
    """
    Row n with renderings for the active mode

    Paper mode replicates the published layout: comma-grouped integers up to
    PAPER_EXACT_MAX_N, scientific form above it, and a grouped ratio at
    SIG_DIGITS significant digits. Otherwise integers are exact and ungrouped.
    """
    bn = bn_count(n, memo)
    mb = mb_count(n, memo)
    r = ExactRatio(bn, mb)

    if paper_mode:
        mode = "exact" if n <= settings.PAPER_EXACT_MAX_N else "scientific"
        bn_text = render_count(bn, mode, grouped=True, decimal_places=settings.SCIENTIFIC_PLACES)
        mb_text = render_count(mb, mode, grouped=True, decimal_places=settings.SCIENTIFIC_PLACES)
        ratio_text = render_decimal(r, settings.SIG_DIGITS, grouped=True)
    else:
        bn_text, mb_text = str(bn), str(mb)
        ratio_text = render_decimal(r, sig_digits)

    return CountRow(
        n=n, bn=bn, mb=mb, ratio=r, bn_text=bn_text, mb_text=mb_text, ratio_text=ratio_text
    )


def count_rows(
    max_n: int,
    paper_mode: bool = False,
    sig_digits: int | None = None,
    memo: MemoTable | None = None,
) -> Iterator[CountRow]:
    """Rows 1..max_n from one shared memo, so each BN entry is computed once"""
    memo = memo if memo is not None else MemoTable()
    for n in range(1, max_n + 1):
        yield make_row(n, memo, paper_mode, sig_digits or settings.SIG_DIGITS)


def format_table(rows: Iterable[CountRow], fmt: TableFormat) -> str:
    cells = [(str(row.n), row.bn_text, row.mb_text, row.ratio_text) for row in rows]

    if fmt == "md":
        lines = [
            "| " + " | ".join(HEADER) + " |",
            "|" + "---:|" * len(HEADER),
        ]
        lines.extend("| " + " | ".join(row) + " |" for row in cells)
        return "\n".join(lines) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(cells)
    return buffer.getvalue()
