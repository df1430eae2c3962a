import io

import pytest

from splitchroma.fileio import (
    ParseError,
    digest,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    parse_graph_file,
    write_dimacs,
    write_edgelist,
)
from splitchroma.generate import InstanceSpec, enumerate_small, gen_random

from conftest import K3, P3


def test_dimacs_examples():
    assert parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").graph == K3
    assert parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n").graph == P3


def test_edge_count_mismatch_names_line():
    with pytest.raises(ParseError, match="declares 5 edges but 4") as info:
        parse_dimacs("c x\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
    assert info.value.line == 2


@pytest.mark.parametrize(
    "text,line",
    [
        ("p edge 3\n", 1),
        ("p edge 2 1\ne 1 3\n", 2),
        ("e 1 2\n", 1),
        ("p edge 2 1\nx 1 2\n", 2),
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 1\ne 1 b\n", 2),
        ("p edge 2 1\np edge 2 1\n", 2),
    ],
)
def test_malformed_dimacs(text, line):
    with pytest.raises(ParseError) as info:
        parse_dimacs(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(ParseError, match="header"):
        parse_dimacs("c nothing\n")


def test_duplicates_counted():
    parsed = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n")
    assert parsed.duplicates == 1 and parsed.graph == P3


def test_edgelist():
    parsed = parse_edgelist("# path\n0 1\n1 2\n1 2\n")
    assert parsed.graph == P3 and parsed.duplicates == 1
    with pytest.raises(ParseError):
        parse_edgelist("0 1 2\n")
    assert parse_graph(write_edgelist(K3), "edgelist").graph == K3
    with pytest.raises(ValueError):
        parse_graph("", "gml")


def test_stream_and_round_trip():
    assert parse_graph_file(io.StringIO(write_dimacs(K3, comment="k3"))).graph == K3
    for g, _ in enumerate_small(6):
        assert parse_dimacs(write_dimacs(g)).graph == g
    for seed in range(10):
        g = gen_random(InstanceSpec(seed, 3, 2, 2, 2, 2, 1))
        assert parse_dimacs(write_dimacs(g)).graph == g


def test_digest_depends_on_labels_only():
    assert digest(K3) == digest(parse_dimacs(write_dimacs(K3)).graph)
    assert digest(K3) != digest(P3)
