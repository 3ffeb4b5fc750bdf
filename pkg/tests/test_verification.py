import pytest

from exports import SCAN_COLUMNS, graph_dot, scan_frame, spectral_payload, to_json
from mapping_class import spectral_report
from surface_model import UnsupportedSurfaceError, farthest_graph
from utils import from_decimal_strings
from verification import ScanRangeError, run_scan, scan_range, scan_row, verify


def test_scan_range_odd_values():
    assert scan_range(3, 25) == list(range(3, 26, 2))
    assert len(scan_range(3, 25)) == 12


def test_scan_range_rejects_bad_bounds():
    with pytest.raises(ScanRangeError):
        scan_range(9, 3)
    with pytest.raises(UnsupportedSurfaceError):
        scan_range(4, 9)


def test_verify_k3_has_no_failures(k3):
    spectral, topology, failures = verify(k3)
    assert failures == []
    assert spectral.sink_block == (3, 6)
    assert topology.genus == 5


def test_scan_row_fields():
    row = scan_row(5)
    assert (row.k, row.genus, row.boundary) == (5, 7, 5)
    assert row.identity_verified
    assert row.runtime_ms >= 0
    assert row.ok


def test_run_scan_sorted_and_verified():
    rows = run_scan(3, 11, jobs=2)
    assert [row.k for row in rows] == [3, 5, 7, 9, 11]
    assert all(row.ok for row in rows)


def test_scan_frame_columns():
    frame = scan_frame(run_scan(3, 5))
    assert list(frame.columns) == SCAN_COLUMNS
    assert frame["k"].tolist() == [3, 5]


def test_spectral_payload_keys(k3):
    payload = spectral_payload(spectral_report(k3))
    assert list(payload)[:10] == [
        "k", "char_poly", "expected_char_poly", "identity_verified", "blocks",
        "sink", "sink_matrix", "sink_char_poly", "dilatation", "entropy",
    ]
    assert payload["blocks"] == [[1, 4], [2, 5], [3, 6]]
    assert all(isinstance(c, str) for c in payload["char_poly"])
    assert from_decimal_strings(payload["char_poly"]) == [-1, -1, 3, 2, -3, -1, 1]
    assert to_json(payload).endswith("\n")


def test_graph_dot_lists_every_vertex(k5):
    text = graph_dot(farthest_graph(k5))
    for v in range(1, 11):
        assert f'  "{v}";' in text
    assert text.count(" -- ") == 25
