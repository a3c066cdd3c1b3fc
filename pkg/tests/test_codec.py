import pytest

from hermdig.codec import (
    canonical_code,
    canonical_form,
    decode,
    distinct_classes,
    encode,
    format_text,
    parse_text,
    same_isomorphism_class,
    vertex_cells,
)
from hermdig.digraphs import converse
from hermdig.errors import DecodeError, UnsupportedOrderError
from hermdig.families import directed_cycle, family, necklace, transitive_tournament
from hermdig.models.digraph import Digraph


def test_header_and_packing():
    assert encode(Digraph.empty(0)) == "?"
    assert encode(Digraph.empty(1)) == "@"
    # one pair, state 3 in the high bits: 3 << 4 = 48
    assert encode(family("K", 2)) == "A" + chr(63 + 48)
    assert encode(Digraph(3, (0, 1, 2))) == "B" + chr(63 + (1 << 2 | 2))


def test_decode_inverts_encode(random_digraphs):
    for X in random_digraphs + [necklace(4), family("Y", 3, 2)]:
        assert decode(encode(X)) == X


def test_string_order_is_pair_tuple_order():
    a, b = Digraph(3, (0, 0, 1)), Digraph(3, (0, 1, 0))
    assert a.pairs < b.pairs
    assert encode(a) < encode(b)


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("C", 1),
        ("C??", None),
        ("C???", 3),
        ("C ?", 1),
    ],
)
def test_decode_errors_carry_position(text, position):
    if position is None:
        assert decode(text) == Digraph.empty(4)
        return
    with pytest.raises(DecodeError) as info:
        decode(text)
    assert info.value.position == position


def test_nonzero_padding_rejected():
    # n = 2 has a single pair; the two low codes must be zero
    with pytest.raises(DecodeError):
        decode("A" + chr(63 + 1))


def test_text_format_round_trip():
    X = family("K3prime")
    text = format_text(X)
    assert text.splitlines()[0] == "n=3"
    assert "0=1" in text.splitlines()
    assert parse_text(text) == X
    assert parse_text("# comment\nn=2\n\n1>0  # arc\n") == Digraph.from_arcs(2, [(1, 0)])


@pytest.mark.parametrize("text", ["", "2\n0>1", "n=2\n0-1", "n=2\n0>2", "n=2\n0>0", "n=x"])
def test_text_format_errors(text):
    with pytest.raises(DecodeError):
        parse_text(text)


def test_canonical_form_is_labeling_invariant():
    X = family("Y", 2, 3)
    for order in [(4, 3, 2, 1, 0), (1, 3, 0, 4, 2)]:
        assert canonical_form(X.relabel(order)) == canonical_form(X)
    assert same_isomorphism_class(directed_cycle(4), directed_cycle(4).relabel((3, 0, 1, 2)))
    assert not same_isomorphism_class(directed_cycle(3), family("Ctilde", 3))


def test_converse_of_transitive_tournament_is_isomorphic():
    T = transitive_tournament(5)
    assert canonical_code(converse(T)) == canonical_code(T)


def test_distinct_classes():
    X = directed_cycle(4)
    codes = distinct_classes([X, X.relabel((1, 2, 3, 0)), converse(X), family("C", 4)])
    assert len(codes) == 2


def test_canonical_order_limit():
    with pytest.raises(UnsupportedOrderError):
        canonical_form(Digraph.empty(9))


def test_vertex_cells_follow_relabeling(random_digraphs, rng):
    # out-degrees 3, 2, 1, 0 separate every vertex
    assert sorted(map(len, vertex_cells(transitive_tournament(4).state_matrix(), 4))) == [1, 1, 1, 1]
    assert vertex_cells(directed_cycle(5).state_matrix(), 5) == [[0, 1, 2, 3, 4]]
    for X in random_digraphs:
        order = list(range(X.n))
        rng.shuffle(order)
        cells = vertex_cells(X.state_matrix(), X.n)
        moved = vertex_cells(X.relabel(order).state_matrix(), X.n)
        assert sorted(v for c in cells for v in c) == list(range(X.n))
        assert [sorted(order[p] for p in c) for c in moved] == cells
