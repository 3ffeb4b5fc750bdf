# verification.py - Per-k verification and range scans
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from config import DILATATION_TOLERANCE
from mapping_class import spectral_report
from surface_model import check_consistency, validate_k
from surface_topology import band_surface, matches_classification, topology_report

logger = logging.getLogger(__name__)


class ScanRangeError(ValueError):
    pass


@dataclass(frozen=True)
class ScanRow:
    k: int
    genus: int
    boundary: int
    identity_verified: bool
    dilatation: float
    runtime_ms: int
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return not self.failures


def verify(p, tol=DILATATION_TOLERANCE):
    """
    Run every check for one surface.

    Parameters:
    - p: GenusParameter
    - tol: Dilatation tolerance

    Returns:
    - (SpectralReport, TopologyReport, failures) where failures merges the
      spectral failures with the topology and graph checks
    """
    spectral = spectral_report(p, tol=tol)
    topology = topology_report(band_surface(p))

    failures = list(spectral.failures)
    if not matches_classification(topology, p):
        failures.append(
            f"topology gives genus {topology.genus} with {topology.boundary_components} "
            f"boundary components, expected genus {p.genus} with {p.k}"
        )
    if not check_consistency(p):
        failures.append("intersection graph differs from G_{2k,k}")

    return spectral, topology, failures


def scan_row(k, tol=DILATATION_TOLERANCE):
    """Verify one k and time it."""
    started = time.perf_counter()
    p = validate_k(k)
    spectral, topology, failures = verify(p, tol=tol)
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))

    return ScanRow(
        k=p.k,
        genus=topology.genus,
        boundary=topology.boundary_components,
        identity_verified=spectral.identity_verified,
        dilatation=spectral.dilatation,
        runtime_ms=elapsed_ms,
        failures=tuple(failures),
    )


def scan_range(k_from, k_to):
    """Odd k from k_from to k_to inclusive; both bounds must be valid parameters."""
    low = validate_k(k_from).k
    high = validate_k(k_to).k
    if low > high:
        raise ScanRangeError(f"empty range: --from {low} is larger than --to {high}")
    return list(range(low, high + 1, 2))


def run_scan(k_from, k_to, jobs=1, tol=DILATATION_TOLERANCE):
    """
    Verify every odd k in the range.

    Parameters:
    - k_from, k_to: Inclusive odd bounds
    - jobs: Worker processes; 1 runs in this process

    Returns:
    - List of ScanRow sorted by k
    """
    ks = scan_range(k_from, k_to)
    logger.info("scanning k in %s with %d job(s)", ks, jobs)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(scan_row, ks, [tol] * len(ks)))
    else:
        rows = [scan_row(k, tol) for k in ks]

    return sorted(rows, key=lambda row: row.k)
