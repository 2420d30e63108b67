"""
Formula-vs-oracle verification and term-count benchmarking
"""
import logging
import time
from collections.abc import Callable
from typing import Literal

from ..schemas.counting import BenchRecord
from ..schemas.reports import OracleKind, VerifyRecord, VerifyReport
from .counting import MemoTable, OpCounter, bn_count, mb_count
from .enumeration import count_dags_brute, count_mb_by_extraction, count_mb_naive

logger = logging.getLogger(__name__)

OracleChoice = Literal["naive", "extract", "both"]
Quantity = Literal["bn", "mb"]


def _timed(compute: Callable[[], int]) -> tuple[int, float]:
    started = time.perf_counter()
    value = compute()
    return value, time.perf_counter() - started


class VerificationService:
    """Checks the closed-form counts against enumeration and measures their cost"""

    def run(
        self,
        max_n: int,
        oracle: OracleChoice = "both",
        target: int = 0,
        force: bool = False,
        workers: int | None = None,
    ) -> VerifyReport:
        """
        Compare BN(n) with the DAG oracle and MB(n) with the selected MB oracle(s)

        Records come out in ascending n; within one n the BN check precedes the
        naive and then the extraction check.
        """
        memo = MemoTable()
        report = VerifyReport()

        for n in range(1, max_n + 1):
            mb_target = min(target, n - 1)
            for quantity, kind, formula_value, compute in self._checks(
                n, mb_target, oracle, force, workers, memo
            ):
                oracle_value, elapsed = _timed(compute)
                record = VerifyRecord(
                    n=n,
                    quantity=quantity,
                    formula_value=formula_value,
                    oracle_value=oracle_value,
                    oracle_kind=kind,
                    target=mb_target,
                    wall_time_seconds=elapsed,
                )
                report.records.append(record)
                log = logger.info if record.matched else logger.error
                log(
                    f"Oracle check {kind} n={n}: {'match' if record.matched else 'MISMATCH'}",
                    extra={"n": n, "oracle": kind, "wall_time_seconds": round(elapsed, 6)},
                )

        return report

    def _checks(
        self,
        n: int,
        target: int,
        oracle: OracleChoice,
        force: bool,
        workers: int | None,
        memo: MemoTable,
    ) -> list[tuple[Quantity, OracleKind, int, Callable[[], int]]]:
        checks: list[tuple[Quantity, OracleKind, int, Callable[[], int]]] = [
            ("bn", "dags", bn_count(n, memo), lambda: count_dags_brute(n, force, workers)),
        ]
        mb = mb_count(n, memo)
        if oracle in ("naive", "both"):
            checks.append(("mb", "naive", mb, lambda: count_mb_naive(n, target, force, workers)))
        if oracle in ("extract", "both"):
            checks.append(
                ("mb", "extract", mb, lambda: count_mb_by_extraction(n, target, force, workers))
            )
        return checks

    def bench(self, max_n: int) -> list[BenchRecord]:
        """Term counts of bn_count and mb_count on a fresh memo per n"""
        records = []
        for n in range(1, max_n + 1):
            bn_counter, mb_counter = OpCounter(), OpCounter()
            started = time.perf_counter()
            bn_count(n, MemoTable(), bn_counter)
            mb_count(n, MemoTable(), mb_counter)
            elapsed = time.perf_counter() - started
            records.append(
                BenchRecord(
                    n=n,
                    bn_terms=bn_counter.terms_evaluated,
                    mb_terms=mb_counter.terms_evaluated,
                    bn_fill_terms=bn_counter.fill_terms,
                    mb_fill_terms=mb_counter.fill_terms,
                    big_multiplications=bn_counter.big_multiplications
                    + mb_counter.big_multiplications,
                    wall_time_seconds=elapsed,
                )
            )
        return records


# Singleton instance
verification_service = VerificationService()
