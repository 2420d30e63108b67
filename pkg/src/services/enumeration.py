"""
Brute-force oracles over every digraph on n labeled nodes

A digraph is a bitmask over ordered pairs laid out row-major in the parent
matrix: row j holds the n - 1 possible arcs i -> j (i != j) in ascending i.
Enumeration walks the masks 0 .. 2^(n(n-1)) - 1 in order, so every stream and
count here is deterministic. Nothing is pruned; these are reference counts
for the closed-form recurrences.
"""
import logging
from collections.abc import Iterable, Iterator
from enum import Enum
from typing import NamedTuple

from ..core.config import settings
from ..core.errors import CyclicGraphError, DomainError, EnumerationCapExceeded
from ..tasks.partition import run_partitioned
from .counting import PartitionTriple

logger = logging.getLogger(__name__)


class NodeRole(str, Enum):
    TARGET = "target"
    PARENT = "parent"
    CHILD = "child"
    SPOUSE = "spouse"
    OTHER = "other"

    @property
    def letter(self) -> str:
        return self.value[0].upper()


# ============================================================================
# BITMASK LAYOUT
# ============================================================================


def edge_bit(n: int, source: int, dest: int) -> int:
    """Bit index of arc source -> dest"""
    return dest * (n - 1) + (source if source < dest else source - 1)


def _parent_rows(n: int, mask: int) -> list[int]:
    width = n - 1
    row_mask = (1 << width) - 1
    rows = []
    for dest in range(n):
        bits = (mask >> (dest * width)) & row_mask
        rows.append((bits & ((1 << dest) - 1)) | ((bits >> dest) << (dest + 1)))
    return rows


def _mask_from_rows(n: int, rows: list[int]) -> int:
    width = n - 1
    mask = 0
    for dest, parents in enumerate(rows):
        bits = (parents & ((1 << dest) - 1)) | ((parents >> (dest + 1)) << dest)
        mask |= bits << (dest * width)
    return mask


def _acyclic(rows: list[int], nodes: int) -> bool:
    """Kahn-style peeling of in-degree-zero nodes, restricted to the node set `nodes`"""
    remaining = nodes
    while remaining:
        sources = 0
        pending = remaining
        while pending:
            low = pending & -pending
            if rows[low.bit_length() - 1] & remaining == 0:
                sources |= low
            pending ^= low
        if not sources:
            return False
        remaining &= ~sources
    return True


def _children_of(rows: list[int], target: int) -> int:
    flag = 1 << target
    children = 0
    for node, parents in enumerate(rows):
        if parents & flag:
            children |= 1 << node
    return children


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ============================================================================
# GRAPH TYPES
# ============================================================================


class Digraph(NamedTuple):
    """Labeled digraph on n nodes with a designated target; no self-loops"""

    n: int
    target: int
    mask: int

    @classmethod
    def from_edges(cls, n: int, target: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        _require_target(n, target)
        mask = 0
        for source, dest in edges:
            if not (0 <= source < n and 0 <= dest < n):
                raise DomainError(f"arc {source}->{dest} is outside 0..{n - 1}")
            if source == dest:
                raise DomainError(f"self-loop {source}->{dest} is not representable")
            mask |= 1 << edge_bit(n, source, dest)
        return cls(n=n, target=target, mask=mask)

    def has_edge(self, source: int, dest: int) -> bool:
        if source == dest:
            return False
        return bool(self.mask >> edge_bit(self.n, source, dest) & 1)

    def parent_rows(self) -> list[int]:
        """Per node, the bitmask of its in-neighbours"""
        return _parent_rows(self.n, self.mask)

    def edges(self) -> list[tuple[int, int]]:
        """Arcs sorted by (source, destination)"""
        rows = self.parent_rows()
        return sorted((source, dest) for dest in range(self.n) for source in _bits(rows[dest]))


class MbStructureKey(NamedTuple):
    """Canonical, order-independent encoding of one MB structure"""

    n: int
    target: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_digraph(cls, g: Digraph) -> "MbStructureKey":
        return cls(n=g.n, target=g.target, edges=tuple(g.edges()))

    def to_digraph(self) -> Digraph:
        return Digraph.from_edges(self.n, self.target, self.edges)

    def normalized(self) -> "MbStructureKey":
        """Swap the target with node 0 so keys for different targets compare directly"""
        t = self.target

        def relabel(v: int) -> int:
            return 0 if v == t else t if v == 0 else v

        return MbStructureKey(
            n=self.n,
            target=0,
            edges=tuple(sorted((relabel(s), relabel(d)) for s, d in self.edges)),
        )

    def partition(self) -> PartitionTriple:
        roles = classify_roles(self.to_digraph())
        n_p = sum(role is NodeRole.PARENT for role in roles.values())
        n_c = sum(role is NodeRole.CHILD for role in roles.values())
        return PartitionTriple(n_p=n_p, n_c=n_c, n_so=self.n - 1 - n_p - n_c)

    def render_edges(self) -> str:
        """'0>2;1>2', or '-' for the empty structure"""
        return ";".join(f"{s}>{d}" for s, d in self.edges) or "-"


def _require_target(n: int, target: int) -> None:
    if not 0 <= target < n:
        raise DomainError(f"target {target} is outside 0..{n - 1}", n=n, target=target)


def check_enumeration_cap(n: int, force: bool) -> None:
    if n < 1:
        raise DomainError(f"enumeration needs n >= 1, got n={n}", n=n)
    if n <= settings.ENUMERATION_CAP:
        return
    if not force:
        raise EnumerationCapExceeded(n, settings.ENUMERATION_CAP)
    if n > settings.FORCED_ENUMERATION_LIMIT:
        raise EnumerationCapExceeded(n, settings.FORCED_ENUMERATION_LIMIT, forced=True)
    logger.warning(
        f"Forced enumeration above cap: 2^{n * (n - 1)} digraphs",
        extra={"n": n, "cap": settings.ENUMERATION_CAP},
    )


# ============================================================================
# PREDICATES
# ============================================================================


def is_dag(g: Digraph) -> bool:
    return _acyclic(g.parent_rows(), (1 << g.n) - 1)


def classify_roles(g: Digraph) -> dict[int, NodeRole]:
    """
    Role of every node with respect to g.target

    Parents are in-neighbours of the target, children its out-neighbours;
    a remaining node with an arc into a child is a spouse, anything else other.
    """
    rows = g.parent_rows()
    if not _acyclic(rows, (1 << g.n) - 1):
        raise CyclicGraphError("roles are defined for acyclic digraphs only", n=g.n)

    parents = rows[g.target]
    children = _children_of(rows, g.target)
    spouses = 0
    for child in _bits(children):
        spouses |= rows[child]
    spouses &= ~(parents | children | 1 << g.target)

    roles = {}
    for node in range(g.n):
        flag = 1 << node
        if node == g.target:
            roles[node] = NodeRole.TARGET
        elif parents & flag:
            roles[node] = NodeRole.PARENT
        elif children & flag:
            roles[node] = NodeRole.CHILD
        elif spouses & flag:
            roles[node] = NodeRole.SPOUSE
        else:
            roles[node] = NodeRole.OTHER
    return roles


def _is_canonical_rows(rows: list[int], target: int) -> bool:
    # Only the target and children may have incoming arcs: the target from
    # parents, a child from anyone. A child that is also a parent is a 2-cycle.
    children = _children_of(rows, target)
    if rows[target] & children:
        return False
    inside = children | 1 << target
    for node, parents in enumerate(rows):
        if parents and not inside >> node & 1:
            return False
    return _acyclic(rows, children)


def is_canonical_mb(g: Digraph) -> bool:
    """
    True iff every arc is parent->target, target->child, parent->child,
    spouse->child or child->child and the children induce a DAG
    """
    return _is_canonical_rows(g.parent_rows(), g.target)


def _extract_rows(rows: list[int], target: int) -> list[int]:
    children = _children_of(rows, target)
    keep = children | 1 << target
    return [parents if keep >> node & 1 else 0 for node, parents in enumerate(rows)]


def extract_mb(g: Digraph) -> MbStructureKey:
    """
    MB structure of g around its target

    Keeps the arcs into the target and into its children, which are exactly
    parent->target, target->child, parent->child, spouse->child and
    child->child; every other arc leaves the blanket.
    """
    rows = g.parent_rows()
    if not _acyclic(rows, (1 << g.n) - 1):
        raise CyclicGraphError("extraction is defined for acyclic digraphs only", n=g.n)
    return MbStructureKey.from_digraph(
        Digraph(g.n, g.target, _mask_from_rows(g.n, _extract_rows(rows, g.target)))
    )


# ============================================================================
# RANGE WORKERS (top-level so process pools can pickle them)
# ============================================================================


def _dag_count_in(n: int, target: int, start: int, stop: int) -> int:
    everything = (1 << n) - 1
    return sum(1 for mask in range(start, stop) if _acyclic(_parent_rows(n, mask), everything))


def _canonical_count_in(n: int, target: int, start: int, stop: int) -> int:
    return sum(
        1 for mask in range(start, stop) if _is_canonical_rows(_parent_rows(n, mask), target)
    )


def _extracted_masks_in(n: int, target: int, start: int, stop: int) -> set[int]:
    everything = (1 << n) - 1
    extracted = set()
    for mask in range(start, stop):
        rows = _parent_rows(n, mask)
        if _acyclic(rows, everything):
            extracted.add(_mask_from_rows(n, _extract_rows(rows, target)))
    return extracted


# ============================================================================
# ORACLES
# ============================================================================


def all_digraphs(n: int, target: int = 0, force: bool = False) -> Iterator[Digraph]:
    """Every digraph on n nodes, once each, in ascending bitmask order"""
    check_enumeration_cap(n, force)
    _require_target(n, target)
    for mask in range(1 << (n * (n - 1))):
        yield Digraph(n, target, mask)


def count_dags_brute(n: int, force: bool = False, workers: int | None = None) -> int:
    check_enumeration_cap(n, force)
    parts = run_partitioned(
        _dag_count_in, n, 0, 1 << (n * (n - 1)), workers or settings.WORKERS
    )
    return sum(parts)


def count_mb_naive(
    n: int, target: int = 0, force: bool = False, workers: int | None = None
) -> int:
    """Digraphs on n nodes that pass is_canonical_mb for the fixed target"""
    check_enumeration_cap(n, force)
    _require_target(n, target)
    parts = run_partitioned(
        _canonical_count_in, n, target, 1 << (n * (n - 1)), workers or settings.WORKERS
    )
    return sum(parts)


def count_mb_by_extraction(
    n: int, target: int = 0, force: bool = False, workers: int | None = None
) -> int:
    """
    Distinct MB structures extracted from all DAGs on n nodes

    Keys are deduplicated on their bitmask, which is a bijective encoding of
    the edge sequence for fixed (n, target).
    """
    check_enumeration_cap(n, force)
    _require_target(n, target)
    parts = run_partitioned(
        _extracted_masks_in, n, target, 1 << (n * (n - 1)), workers or settings.WORKERS
    )
    distinct: set[int] = set()
    for part in parts:
        distinct |= part
    return len(distinct)


def enumerate_mb(n: int, target: int = 0, force: bool = False) -> Iterator[MbStructureKey]:
    """Each canonical MB structure once, in ascending bitmask order"""
    for g in all_digraphs(n, target, force):
        if is_canonical_mb(g):
            yield MbStructureKey.from_digraph(g)


def three_node_extraction_counts(target: int = 0) -> tuple[int, int]:
    """(DAGs on three nodes, distinct MB structures they extract to) = (25, 15)"""
    dags = [g for g in all_digraphs(3, target) if is_dag(g)]
    return len(dags), len({extract_mb(g) for g in dags})
