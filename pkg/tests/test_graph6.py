"""graph6 codec: format examples, round trips, and malformed records."""

import random

import pytest

from util import random_graph
from zeroforcing import (Graph, Graph6Error, complete_graph, iter_graph6,
                         parse_graph6, path_graph, write_graph6)


def reference_encode(g: Graph) -> str:
    """Independent encoder: build the whole bitstring, then chop into bytes."""
    bits = ""
    for j in range(g.n):
        for i in range(j):
            bits += "1" if g.has_edge(i, j) else "0"
    bits += "0" * (-len(bits) % 6)
    out = chr(63 + g.n)
    for k in range(0, len(bits), 6):
        out += chr(63 + int(bits[k:k + 6], 2))
    return out


def test_single_vertex():
    assert parse_graph6("@") == Graph(1)
    assert write_graph6(Graph(1)) == "@"


def test_zero_vertices_parse_only():
    assert parse_graph6("?") == Graph(0)


def test_k4():
    assert parse_graph6("C~") == complete_graph(4)
    assert write_graph6(complete_graph(4)) == "C~"


def test_p4_bit_order():
    # 'h' encodes 101001: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
    assert parse_graph6("Ch") == path_graph(4)
    assert reference_encode(path_graph(4)) == "Ch"
    assert write_graph6(path_graph(4)) == "Ch"


def test_header_accepted():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_trailing_newline_tolerated():
    assert parse_graph6("C~\n") == complete_graph(4)


def test_round_trip_random():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randint(1, 62)
        g = random_graph(rng, n, p=rng.random())
        encoded = write_graph6(g)
        assert parse_graph6(encoded) == g
        assert encoded == reference_encode(g)


def test_writer_range():
    with pytest.raises(ValueError):
        write_graph6(Graph(0))
    with pytest.raises(ValueError):
        write_graph6(Graph(63))


def test_malformed_length_field():
    with pytest.raises(Graph6Error, match="length field") as exc:
        parse_graph6("~~~")        # multi-byte size form is out of scope
    assert exc.value.offset == 0


def test_character_out_of_range():
    bad = "C" + chr(30) + ""
    with pytest.raises(Graph6Error, match="printable range") as exc:
        parse_graph6(bad)
    assert exc.value.offset == 1


def test_truncated_record():
    with pytest.raises(Graph6Error, match="data bytes"):
        parse_graph6("C")          # n=4 needs one data byte


def test_trailing_data():
    with pytest.raises(Graph6Error, match="trailing data"):
        parse_graph6("C~~")


def test_nonzero_padding_bits():
    # n=2 uses one adjacency bit; set a padding bit below it
    bad = "A" + chr(63 + 0b100001)
    with pytest.raises(Graph6Error, match="trailing bits") as exc:
        parse_graph6(bad)
    assert exc.value.offset == 1


def test_empty_record():
    with pytest.raises(Graph6Error, match="empty"):
        parse_graph6("")


def test_iter_graph6_line_numbers():
    lines = ["C~", "", "Ch"]
    parsed = list(iter_graph6(lines))
    assert [ln for ln, _ in parsed] == [1, 3]
    assert parsed[0][1] == complete_graph(4)
    with pytest.raises(Graph6Error, match="line 2"):
        list(iter_graph6(["C~", "C" + chr(30)]))
