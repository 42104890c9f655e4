import io

import pytest
from hypothesis import given

from conftest import graphs
from scclevel import (
    EdgeCountMismatch,
    EndpointOutOfRange,
    MalformedHeader,
    SccPartition,
    TokenNotInteger,
    format_edge_list,
    format_partition,
    parse_edge_list,
)


def test_smallest_file():
    g = parse_edge_list("2 1\n1 2\n")
    assert g.vertex_count == 2
    assert g.adjacency == [[1], []]


def test_example_file_is_zero_based():
    g = parse_edge_list("4 4\n1 2\n2 3\n3 1\n3 4\n")
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 0), (2, 3)]
    assert g.edge_count == 4


def test_accepts_stream_and_loose_whitespace():
    g = parse_edge_list(io.StringIO("  3\t2 1 2\n\n\n 2\n 3 \n\n"))
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_empty_graph():
    assert parse_edge_list("0 0\n").vertex_count == 0


@pytest.mark.parametrize(
    "text, error",
    [
        ("", MalformedHeader),
        ("5", MalformedHeader),
        ("a 1\n", MalformedHeader),
        ("-1 0\n", MalformedHeader),
        ("2 2\n1 2\n", EdgeCountMismatch),
        ("2 1\n1 2\n2 1\n", EdgeCountMismatch),
        ("2 1\n1\n", EdgeCountMismatch),
        ("2 1\n1 x\n", TokenNotInteger),
        ("2 1\n1 3\n", EndpointOutOfRange),
        ("2 1\n0 1\n", EndpointOutOfRange),
    ],
)
def test_errors(text, error):
    with pytest.raises(error):
        parse_edge_list(text)


@given(graphs())
def test_round_trip(g):
    back = parse_edge_list(format_edge_list(g))
    assert back.vertex_count == g.vertex_count
    assert list(back.edges()) == list(g.edges())


def test_format_partition():
    assert format_partition(SccPartition.from_labels([])) == "0\n"
    assert format_partition(SccPartition.from_labels([0, 1])) == "2\n1 \n2 \n"
    assert format_partition(SccPartition.from_blocks(4, [[0, 1, 2], [3]])) == "2\n1 2 3 \n4 \n"
