"""
Exact counts of labeled DAGs (BN structures) and Markov blanket structures

All arithmetic is on Python integers; no floating point is involved. BN values
are memoized bottom-up in a MemoTable that callers may share between calls.
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import NamedTuple

from ..core.errors import DomainError

logger = logging.getLogger(__name__)


def _require_count(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}", **{name: value})


class PartitionTriple(NamedTuple):
    """Split of the n - 1 non-target nodes into parents, children and spouse-or-other"""

    n_p: int
    n_c: int
    n_so: int

    @classmethod
    def for_node_count(cls, n: int, n_p: int, n_so: int) -> "PartitionTriple":
        """Build the triple for n nodes, deriving n_c = n - 1 - n_p - n_so"""
        if n < 1:
            raise DomainError(f"a partition needs n >= 1 (the target), got n={n}", n=n)
        _require_count("n_p", n_p)
        _require_count("n_so", n_so)
        n_c = n - 1 - n_p - n_so
        if n_c < 0:
            raise DomainError(
                f"n_p + n_so = {n_p + n_so} exceeds n - 1 = {n - 1}",
                n=n,
                n_p=n_p,
                n_so=n_so,
            )
        return cls(n_p=n_p, n_c=n_c, n_so=n_so)


@dataclass
class OpCounter:
    """
    Big-integer work done by one computation

    terms_evaluated counts the summands of the requested quantity's own
    summation; fill_terms counts summands spent populating lower memo entries.
    """

    big_multiplications: int = 0
    big_additions: int = 0
    terms_evaluated: int = 0
    fill_terms: int = 0

    def reset(self) -> None:
        self.big_multiplications = 0
        self.big_additions = 0
        self.terms_evaluated = 0
        self.fill_terms = 0


class MemoTable:
    """
    Write-once cache of BN(0..n) and the factorials 0..n

    Entries are appended in order under a lock and never rewritten, so readers
    of already completed entries need no synchronisation.
    """

    def __init__(self) -> None:
        self._entries: list[int] = [1]  # BN(0) = 1
        self._factorials: list[int] = [1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and 0 <= n < len(self._entries)

    @property
    def entries(self) -> dict[int, int]:
        """Snapshot of the BN entries keyed by node count"""
        return dict(enumerate(self._entries))

    def factorials(self, n: int) -> list[int]:
        """Factorials 0..n (at least), extended in a single pass when needed"""
        if n >= len(self._factorials):
            with self._lock:
                for m in range(len(self._factorials), n + 1):
                    self._factorials.append(self._factorials[-1] * m)
        return self._factorials

    def bn(self, n: int, counter: OpCounter | None = None, top_level: int | None = None) -> int:
        """
        BN(n), computing missing entries bottom-up

        Summands of entry `top_level` are charged to counter.terms_evaluated,
        all others to counter.fill_terms.
        """
        if n >= len(self._entries):
            fact = self.factorials(n)
            with self._lock:
                for m in range(len(self._entries), n + 1):
                    self._entries.append(
                        _robinson_entry(m, self._entries, fact, counter, m == top_level)
                    )
        return self._entries[n]


def _robinson_entry(
    m: int,
    entries: list[int],
    fact: list[int],
    counter: OpCounter | None,
    top_level: bool,
) -> int:
    total = 0
    for k in range(1, m + 1):
        term = (fact[m] // (fact[k] * fact[m - k])) * entries[m - k] << (k * (m - k))
        total = total + term if k % 2 else total - term
        if counter is not None:
            counter.big_multiplications += 2
            counter.big_additions += 1
            if top_level:
                counter.terms_evaluated += 1
            else:
                counter.fill_terms += 1
    return total


def factorial_table(n: int, memo: MemoTable | None = None) -> list[int]:
    """Factorials 0..n in one pass, shared through the memo when given"""
    _require_count("n", n)
    return (memo or MemoTable()).factorials(n)[: n + 1]


def binomial(n: int, k: int, memo: MemoTable | None = None) -> int:
    """n! / (k! (n - k)!) exactly"""
    _require_count("n", n)
    _require_count("k", k)
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}", n=n, k=k)
    fact = (memo or MemoTable()).factorials(n)
    return fact[n] // (fact[k] * fact[n - k])


def multinomial3(n_p: int, n_c: int, n_so: int, memo: MemoTable | None = None) -> int:
    """Multiplicity (n_p + n_c + n_so)! / (n_p! n_c! n_so!)"""
    _require_count("n_p", n_p)
    _require_count("n_c", n_c)
    _require_count("n_so", n_so)
    total = n_p + n_c + n_so
    fact = (memo or MemoTable()).factorials(total)
    return fact[total] // (fact[n_p] * fact[n_c] * fact[n_so])


def bn_count(n: int, memo: MemoTable | None = None, counter: OpCounter | None = None) -> int:
    """
    Number of labeled DAGs on n nodes

    BN(n) = sum_{k=1..n} (-1)^(k+1) C(n, k) 2^(k(n-k)) BN(n-k), BN(0) = 1.
    A memo already holding BN(n) answers without evaluating any term.
    """
    _require_count("n", n)
    memo = memo if memo is not None else MemoTable()
    return memo.bn(n, counter, top_level=n)


def mb_partition_term(n: int, n_p: int, n_so: int, memo: MemoTable | None = None) -> int:
    """
    MB structures with exactly n_p parents and n_so spouse-or-other nodes

    multiplicity * 2^(n_c n_p) * 2^(n_c n_so) * BN(n_c)
    """
    memo = memo if memo is not None else MemoTable()
    n_p, n_c, n_so = PartitionTriple.for_node_count(n, n_p, n_so)
    return multinomial3(n_p, n_c, n_so, memo) * memo.bn(n_c) << (n_c * n_p + n_c * n_so)


def mb_count(n: int, memo: MemoTable | None = None, counter: OpCounter | None = None) -> int:
    """
    Number of canonical MB structures on n labeled nodes with one fixed target

    Sums mb_partition_term over n_p = 0..n-1, n_so = 0..n-1-n_p, i.e.
    n(n+1)/2 summands. Summands sharing n_c share the factor
    C(n-1, n_c) 2^(n_c (n - 1 - n_c)) BN(n_c); each summand is that factor
    times C(n - 1 - n_c, n_p), which equals the multiplicity split.
    """
    if n < 1:
        raise DomainError(f"MB(n) is defined from n = 1, got n={n}", n=n)
    memo = memo if memo is not None else MemoTable()
    memo.bn(n - 1, counter)
    fact = memo.factorials(n - 1)

    total = 0
    for n_c in range(n):
        rest = n - 1 - n_c  # n_p + n_so
        shared = (fact[n - 1] // (fact[n_c] * fact[rest])) * memo.bn(n_c) << (n_c * rest)
        split = 1  # C(rest, n_p)
        for n_p in range(rest + 1):
            total += shared * split
            split = split * (rest - n_p) // (n_p + 1)
            if counter is not None:
                counter.big_multiplications += 1
                counter.big_additions += 1
                counter.terms_evaluated += 1
    return total


def mb_count_by_children(n: int, memo: MemoTable | None = None) -> int:
    """
    MB(n) regrouped by child count

    The parent/spouse split sums to 2^(n-1-n_c), leaving
    sum_{n_c} C(n-1, n_c) 2^((n-1-n_c)(n_c+1)) BN(n_c).
    """
    if n < 1:
        raise DomainError(f"MB(n) is defined from n = 1, got n={n}", n=n)
    memo = memo if memo is not None else MemoTable()
    return sum(
        binomial(n - 1, n_c, memo) * memo.bn(n_c) << ((n - 1 - n_c) * (n_c + 1))
        for n_c in range(n)
    )


@total_ordering
@dataclass(frozen=True, eq=False)
class ExactRatio:
    """
    BN(n) / MB(n) kept unreduced

    Equality, ordering and hashing go through cross-multiplication / the
    lowest-terms fraction, so 25/15 == 5/3.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise DomainError(f"denominator must be > 0, got {self.denominator}")
        _require_count("numerator", self.numerator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reduced(self) -> "ExactRatio":
        fraction = self.as_fraction()
        return ExactRatio(fraction.numerator, fraction.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactRatio):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExactRatio):
            return NotImplemented
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __truediv__(self, other: "ExactRatio") -> Fraction:
        return self.as_fraction() / other.as_fraction()

    def __str__(self) -> str:
        fraction = self.as_fraction()
        return f"{fraction.numerator}/{fraction.denominator}"


def ratio(n: int, memo: MemoTable | None = None) -> ExactRatio:
    """BN(n) / MB(n) as an exact rational"""
    if n < 1:
        raise DomainError(f"the BN/MB ratio is defined from n = 1, got n={n}", n=n)
    memo = memo if memo is not None else MemoTable()
    return ExactRatio(bn_count(n, memo), mb_count(n, memo))
