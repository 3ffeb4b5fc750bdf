# surface_model.py - Combinatorial model of the surface: chord diagram, curves and G_{2k,k}
import logging
import numbers
from dataclasses import dataclass
from functools import lru_cache

from utils import cyclic_distance, normalize_label, strictly_between

logger = logging.getLogger(__name__)


class UnsupportedSurfaceError(ValueError):
    """k does not describe a surface of the family (k must be odd and >= 3)."""


class LabelQueryError(ValueError):
    """A linking query named the same label twice or a label out of range."""


@dataclass(frozen=True)
class GenusParameter:
    """Family parameter k, odd and at least 3."""

    k: int

    def __post_init__(self):
        k = self.k
        # bool is an Integral too, and True would otherwise pass as 1
        if isinstance(k, bool) or not isinstance(k, numbers.Integral):
            raise UnsupportedSurfaceError(f"k must be an integer, got {k!r}")
        if k < 3:
            raise UnsupportedSurfaceError(f"k must be at least 3, got {k}")
        if k % 2 == 0:
            raise UnsupportedSurfaceError(f"k must be odd, got {k}")
        object.__setattr__(self, "k", int(k))

    @property
    def n(self):
        """Number of curves, labels and polygon vertices (2k)."""
        return 2 * self.k

    @property
    def s(self):
        """Offset of the second label in each pair of the cyclic word."""
        return (3 * self.k + 3) // 2

    @property
    def genus(self):
        return self.k + 2

    @property
    def threshold(self):
        """Smallest cyclic distance at which two polygon vertices are joined."""
        return (self.k + 1) // 2


@dataclass(frozen=True)
class LabelSequence:
    k: int
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def positions(self, label):
        """
        Cyclic positions (1-based, increasing) of the two intervals carrying a label.

        Parameters:
        - label: Integer in 1..2k

        Returns:
        - Tuple (a, b) with a < b
        """
        found = tuple(pos for pos, entry in enumerate(self.entries, start=1) if entry == label)
        if len(found) != 2:
            raise LabelQueryError(f"Label {label} does not occur exactly twice")
        return found

    def to_list(self):
        return list(self.entries)


@dataclass(frozen=True)
class IntersectionTable:
    k: int
    counts: tuple

    def row(self, i):
        return self.counts[i - 1]

    def __getitem__(self, ij):
        i, j = ij
        return self.counts[i - 1][j - 1]


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple

    def neighbors(self, v):
        return {w for w in range(1, self.n + 1) if self.adjacency[v - 1][w - 1]}

    def degree(self, v):
        return sum(self.adjacency[v - 1])

    def edges(self):
        """Edges (v, w) with v < w, in lexicographic order."""
        return [
            (v, w)
            for v in range(1, self.n + 1)
            for w in range(v + 1, self.n + 1)
            if self.adjacency[v - 1][w - 1]
        ]


def validate_k(k):
    """
    Check that k describes a surface of the family.

    Parameters:
    - k: Candidate parameter

    Returns:
    - GenusParameter

    Raises:
    - UnsupportedSurfaceError for non-integers, even k, or k < 3
    """
    return GenusParameter(k)


@lru_cache(maxsize=None)
def label_sequence(p):
    """
    Build the cyclic word of interval labels around the disk boundary.

    Position 2i-1 carries label i and position 2i carries s+i-1, both reduced
    into 1..2k. The word reads 1, s, 2, s+1, ..., 2k, s+2k-1.

    Parameters:
    - p: GenusParameter

    Returns:
    - LabelSequence with 4k entries
    """
    n = p.n
    entries = []
    for i in range(1, n + 1):
        entries.append(i)
        entries.append(normalize_label(p.s + i - 1, n))

    seq = LabelSequence(p.k, tuple(entries))
    logger.debug("label sequence for k=%d: %s", p.k, seq.entries)
    return seq


def labels_link(seq, i, j):
    """
    Whether the two i-intervals separate the two j-intervals in the cyclic order.

    Linked labels belong to disjoint curves.
    """
    n = 2 * seq.k
    for label in (i, j):
        if not 1 <= label <= n:
            raise LabelQueryError(f"Label {label} is outside 1..{n}")
    if i == j:
        raise LabelQueryError(f"Cannot link label {i} with itself")

    a, b = seq.positions(i)
    inside = sum(strictly_between(pos, a, b) for pos in seq.positions(j))
    return inside == 1


@lru_cache(maxsize=None)
def intersection_table(p):
    """
    Geometric intersection numbers of the curves c_1..c_2k.

    Curves meet once unless their labels link, in which case they are disjoint.

    Parameters:
    - p: GenusParameter

    Returns:
    - IntersectionTable (2k x 2k, symmetric, 0/1 entries, zero diagonal)
    """
    seq = label_sequence(p)
    n = p.n
    counts = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not labels_link(seq, i, j):
                counts[i - 1][j - 1] = counts[j - 1][i - 1] = 1

    return IntersectionTable(p.k, tuple(tuple(row) for row in counts))


def farthest_graph(p):
    """
    G_{2k,k}: every polygon vertex is joined to the k vertices farthest from it.

    The antipode sits at distance k and every distance from (k+1)/2 to k-1 is
    realised by two vertices, so "the k farthest" is exactly d >= (k+1)/2.
    """
    n = p.n
    adjacency = tuple(
        tuple(int(v != w and cyclic_distance(v, w, n) >= p.threshold) for w in range(1, n + 1))
        for v in range(1, n + 1)
    )
    return Graph(n, adjacency)


def intersection_graph(table):
    """Graph on the curves with an edge for every intersecting pair."""
    n = 2 * table.k
    adjacency = tuple(tuple(int(c > 0) for c in row) for row in table.counts)
    return Graph(n, adjacency)


def check_consistency(p):
    """
    Cross-check the chord diagram against G_{2k,k}.

    Returns:
    - True when the intersection graph of the curves equals the farthest-vertex graph
    """
    ok = intersection_graph(intersection_table(p)) == farthest_graph(p)
    if not ok:
        logger.error("intersection graph differs from G_{2k,k} at k=%d", p.k)
    return ok
