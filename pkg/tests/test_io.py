import pytest
from hypothesis import given

from conftest import any_graphs
from olaplus.exceptions import DuplicateEdge, EndpointOutOfRange, LoopEdge, ParseError
from olaplus.generators import clique, path
from olaplus.graphio import format_graph, parse_graph, parse_graph_text, parse_labeled_text, write_graph


def test_examples():
    assert parse_graph_text("3 2\n1 2\n2 3\n") == path(3)
    assert parse_graph_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == clique(3)
    with pytest.raises(EndpointOutOfRange) as info:
        parse_graph_text("3 1\n1 4\n")
    assert info.value.line == 2


def test_comments_and_blank_lines():
    text = "# a path\n\n3 2\nc edges follow\n1 2\n\n2 3\n"
    assert parse_graph_text(text) == path(3)


@pytest.mark.parametrize("text, line", [
    ("", 0),
    ("3\n", 1),
    ("3 2\n1 2\n", 2),
    ("3 1\n1 x\n", 2),
    ("p edge 3 1\n1 2\n", 2),
    ("p edge 3\n", 1),
    ("3 1\n1 2 3\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_text(text)
    assert info.value.line == line


def test_construction_errors_carry_line():
    with pytest.raises(LoopEdge) as info:
        parse_graph_text("# x\n3 2\n1 2\n2 2\n")
    assert info.value.line == 4
    with pytest.raises(DuplicateEdge):
        parse_graph_text("p edge 3 2\ne 1 2\ne 2 1\n")


@given(any_graphs(max_n=9))
def test_round_trip(g):
    for style in ("edgelist", "dimacs"):
        assert parse_graph_text(format_graph(g, style)) == g


def test_file_round_trip(tmp_path):
    f = tmp_path / "k4.dimacs"
    write_graph(clique(4), f, "dimacs")
    assert parse_graph(f) == clique(4)


def test_arbitrary_labels(tmp_path):
    f = tmp_path / "named.txt"
    f.write_text("4 3\nalpha beta\nbeta gamma\ngamma delta\n")
    g, labels = parse_graph(f, labels="map")
    assert g == path(4)
    assert labels == ("alpha", "beta", "gamma", "delta")
    g, labels = parse_labeled_text("3 1\n10 20\n")
    assert labels == ("10", "20", "_1")
    with pytest.raises(EndpointOutOfRange):
        parse_labeled_text("2 2\na b\nb c\n")
