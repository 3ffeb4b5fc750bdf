from collections import Counter

import numpy as np
import pytest

from surface_model import (
    GenusParameter,
    LabelQueryError,
    UnsupportedSurfaceError,
    check_consistency,
    farthest_graph,
    intersection_graph,
    intersection_table,
    label_sequence,
    labels_link,
    validate_k,
)


def test_validate_k_accepts_smallest_member():
    assert validate_k(3) == GenusParameter(3)


@pytest.mark.parametrize("bad", [4, 2, 1, 0, -3, 3.0, "3", True, None])
def test_validate_k_rejects(bad):
    with pytest.raises(UnsupportedSurfaceError):
        validate_k(bad)


def test_parameter_derived_values(k5):
    assert k5.n == 10
    assert k5.s == 9
    assert k5.genus == 7
    assert k5.threshold == 3


def test_label_sequence_k3(k3):
    assert label_sequence(k3).entries == (1, 6, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5)


def test_label_one_positions_k3(k3):
    assert label_sequence(k3).positions(1) == (1, 4)


def test_label_sequence_k5(k5):
    assert label_sequence(k5).entries == (
        1, 9, 2, 10, 3, 1, 4, 2, 5, 3, 6, 4, 7, 5, 8, 6, 9, 7, 10, 8,
    )


def test_label_sequence_shape(odd_p):
    seq = label_sequence(odd_p)
    assert len(seq) == 4 * odd_p.k
    counts = Counter(seq.entries)
    assert set(counts) == set(range(1, odd_p.n + 1))
    assert all(c == 2 for c in counts.values())
    # odd positions read 1, 2, ..., 2k
    assert seq.entries[0::2] == tuple(range(1, odd_p.n + 1))


def test_labels_link_examples(k3):
    seq = label_sequence(k3)
    assert labels_link(seq, 1, 2)
    assert not labels_link(seq, 1, 3)
    assert labels_link(seq, 1, 6)


def test_labels_link_symmetric(odd_p):
    seq = label_sequence(odd_p)
    for i in range(1, odd_p.n + 1):
        for j in range(i + 1, odd_p.n + 1):
            assert labels_link(seq, i, j) == labels_link(seq, j, i)


def test_labels_link_rejects_bad_queries(k3):
    seq = label_sequence(k3)
    with pytest.raises(LabelQueryError):
        labels_link(seq, 2, 2)
    with pytest.raises(LabelQueryError):
        labels_link(seq, 1, 7)


def test_intersection_row_one_k3(k3):
    table = intersection_table(k3)
    assert list(table.row(1)) == [0, 0, 1, 1, 1, 0]
    assert table[1, 6] == 0


def test_intersection_table_shape(odd_p):
    table = intersection_table(odd_p)
    n = odd_p.n
    for i in range(1, n + 1):
        assert table[i, i] == 0
        assert sum(table.row(i)) == odd_p.k
        for j in range(1, n + 1):
            assert table[i, j] in (0, 1)
            assert table[i, j] == table[j, i]


def test_farthest_graph_k3(k3):
    graph = farthest_graph(k3)
    assert graph.neighbors(1) == {3, 4, 5}
    assert 2 not in graph.neighbors(1)
    assert len(graph.edges()) == 9


def test_farthest_graph_regular(odd_p):
    graph = farthest_graph(odd_p)
    assert all(graph.degree(v) == odd_p.k for v in range(1, odd_p.n + 1))
    assert len(graph.edges()) == odd_p.n * odd_p.k // 2


def test_intersection_graph_matches_farthest_graph_k3(k3):
    assert intersection_graph(intersection_table(k3)) == farthest_graph(k3)


def test_check_consistency(odd_p):
    assert check_consistency(odd_p)


@pytest.mark.parametrize("bad", [4, 1, -5, True, 3.0])
def test_genus_parameter_checks_direct_construction(bad):
    with pytest.raises(UnsupportedSurfaceError):
        GenusParameter(bad)


def test_genus_parameter_normalizes_integral_types():
    assert GenusParameter(np.int64(5)) == validate_k(5)
    assert type(GenusParameter(np.int64(5)).k) is int
