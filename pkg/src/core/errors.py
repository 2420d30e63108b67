from typing import Any

from .correlation import get_correlation_id


class CountingError(ValueError):
    """Base class for counting and enumeration failures"""

    code = "COUNTING_ERROR"
    title = "Counting Error"
    exit_code = 2

    def __init__(self, detail: str, **context: Any):
        super().__init__(detail)
        self.detail = detail
        self.context = context


class DomainError(CountingError):
    """Argument outside the domain of an operation (k > n, MB(0), bad target)"""

    code = "DOMAIN_ERROR"
    title = "Argument Outside Domain"


class CyclicGraphError(DomainError):
    """DAG-only operation applied to a digraph with a directed cycle"""

    code = "CYCLIC_GRAPH"
    title = "Digraph Is Not Acyclic"


class EnumerationCapExceeded(CountingError):
    """Brute-force enumeration requested above the configured cap"""

    code = "ENUMERATION_CAP_EXCEEDED"
    title = "Enumeration Cap Exceeded"

    def __init__(self, n: int, cap: int, forced: bool = False):
        edges = n * (n - 1)
        hint = "no override exists above this limit" if forced else "pass --force to proceed"
        super().__init__(
            f"n={n} exceeds the enumeration cap {cap}: "
            f"2^{edges} = {2 ** edges:,} digraphs would be generated ({hint})",
            n=n,
            cap=cap,
        )


def problem_detail(error: CountingError) -> dict[str, Any]:
    """
    Render an error as an RFC 7807 Problem Details payload

    https://datatracker.ietf.org/doc/html/rfc7807
    """
    return {
        "type": f"about:blank#{error.code.lower()}",
        "title": error.title,
        "status": error.exit_code,
        "code": error.code,
        "detail": error.detail,
        "correlation_id": get_correlation_id() or "none",
    }
