# surface_topology.py - Euler characteristic, boundary circles and genus of the band surface
import logging
from dataclasses import dataclass

import networkx as nx

from surface_model import label_sequence

logger = logging.getLogger(__name__)

# Side-edge conventions for a band joining intervals P and Q
TWISTED = "twisted"    # start(P)-start(Q), end(P)-end(Q)
ANNULAR = "annular"    # start(P)-end(Q), end(P)-start(Q)


class MalformedBandError(ValueError):
    """A band list that does not pair every interval exactly once."""


@dataclass(frozen=True)
class BandSurface:
    """
    Disk (optionally with crosscaps) plus bands glued to boundary intervals.

    Intervals are numbered 1..n_intervals in boundary order. bands holds pairs
    of interval numbers; twisted holds one flag per band.
    """

    k: object
    n_intervals: int
    bands: tuple
    twisted: tuple
    crosscaps: int = 1

    @property
    def endpoints(self):
        """Endpoint slots in boundary order: start(1), end(1), start(2), ..."""
        return list(range(2 * self.n_intervals))

    @property
    def n_bands(self):
        return len(self.bands)


@dataclass(frozen=True)
class TopologyReport:
    k: object
    euler_characteristic: int
    boundary_components: int
    orientable: bool
    genus: int


def _start(interval):
    return 2 * (interval - 1)


def _end(interval):
    return 2 * (interval - 1) + 1


def make_band_surface(n_intervals, bands, twisted=True, crosscaps=1, k=None):
    """
    Assemble and validate a band surface from raw interval pairs.

    Parameters:
    - n_intervals: Number of intervals on the disk boundary
    - bands: Iterable of (P, Q) interval pairs
    - twisted: One flag for all bands, or an iterable with one flag per band
    - crosscaps: Crosscaps in the disk interior
    - k: Family parameter, for reporting only

    Returns:
    - BandSurface
    """
    bands = tuple((int(a), int(b)) for a, b in bands)
    if isinstance(twisted, bool):
        twisted = (twisted,) * len(bands)
    twisted = tuple(bool(t) for t in twisted)

    if len(twisted) != len(bands):
        raise MalformedBandError(f"{len(bands)} bands but {len(twisted)} twist flags")
    if crosscaps < 0:
        raise MalformedBandError(f"crosscap count must be nonnegative, got {crosscaps}")

    # Every interval must be used by exactly one band
    used = [interval for band in bands for interval in band]
    if sorted(used) != list(range(1, n_intervals + 1)):
        raise MalformedBandError(
            f"bands {bands} do not pair the intervals 1..{n_intervals} exactly once"
        )

    return BandSurface(k, n_intervals, bands, twisted, crosscaps)


def band_surface(p, seq=None):
    """
    Band decomposition of the surface: a disk with one crosscap, 4k boundary
    intervals labelled by the cyclic word, and one half-twisted band per label.
    """
    if seq is None:
        seq = label_sequence(p)

    bands = [seq.positions(label) for label in range(1, p.n + 1)]
    return make_band_surface(len(seq), bands, twisted=True, crosscaps=1, k=p.k)


def euler_characteristic(bs):
    """
    chi = chi(disk with crosscaps) - number of bands.
    Example: one crosscap and no bands (a Moebius band) → 0
    """
    return (1 - bs.crosscaps) - bs.n_bands


def boundary_graph(bs):
    """
    Graph on the endpoint slots whose cycles are the boundary circles.

    Each slot meets one gap edge (the arc of disk boundary leading to the next
    interval) and one band side edge, so every vertex has degree 2.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(bs.endpoints)

    # 1. Gaps between consecutive intervals on the disk boundary
    for interval in range(1, bs.n_intervals + 1):
        following = interval % bs.n_intervals + 1
        graph.add_edge(_end(interval), _start(following), kind="gap")

    # 2. Side edges of each band
    for (a, b), twisted in zip(bs.bands, bs.twisted):
        if twisted:
            graph.add_edge(_start(a), _start(b), kind="band")
            graph.add_edge(_end(a), _end(b), kind="band")
        else:
            graph.add_edge(_start(a), _end(b), kind="band")
            graph.add_edge(_end(a), _start(b), kind="band")

    unmatched = [slot for slot, degree in graph.degree() if degree != 2]
    if unmatched:
        raise MalformedBandError(f"endpoint slots {unmatched} are not matched exactly once")
    return graph


def boundary_cycles(bs):
    """
    Endpoint slots grouped by boundary circle, each group sorted.

    Returns:
    - List of lists of slot indices, ordered by smallest slot (empty without intervals)
    """
    if bs.n_intervals == 0:
        return []
    graph = boundary_graph(bs)
    return sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])


def boundary_components(bs):
    """
    Number of boundary circles of the band surface.

    The crosscap sits in the disk interior and never meets the boundary. A
    disk with no intervals keeps its single boundary circle.
    """
    if bs.n_intervals == 0:
        return 1
    return nx.number_connected_components(boundary_graph(bs))


def is_orientable(bs):
    """A disk with bands is orientable when it has no crosscap and no twisted band."""
    return bs.crosscaps == 0 and not any(bs.twisted)


def topology_report(bs):
    """
    Classify the band surface.

    Parameters:
    - bs: BandSurface

    Returns:
    - TopologyReport; genus counts crosscaps when nonorientable, handles otherwise
    """
    chi = euler_characteristic(bs)
    b = boundary_components(bs)
    orientable = is_orientable(bs)

    if orientable:
        genus = (2 - chi - b) // 2
    else:
        genus = 2 - chi - b

    report = TopologyReport(bs.k, chi, b, orientable, genus)
    logger.info(
        "topology k=%s: chi=%d boundary=%d orientable=%s genus=%d",
        bs.k, chi, b, orientable, genus,
    )
    return report


def matches_classification(report, p):
    """Whether a report shows the nonorientable genus k+2 surface with k boundary circles."""
    return (
        not report.orientable
        and report.genus == p.genus
        and report.boundary_components == p.k
        and report.euler_characteristic == -p.n
    )
