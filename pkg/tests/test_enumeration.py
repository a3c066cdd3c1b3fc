import networkx as nx
import pytest

from hermdig.codec import canonical_code, encode
from hermdig.digraphs import is_strongly_connected, is_weakly_connected
from hermdig.enumeration import (
    census,
    connectivity_demo,
    converse_closed,
    generate_codes,
    generate_nonisomorphic,
    iter_codes,
    order3_reference_table,
    underlying_graph_variety,
    verify_classification,
)
from hermdig.errors import UnsupportedOrderError
from hermdig.hermitian import hermitian_char_poly
from hermdig.models.digraph import Digraph
from hermdig.models.spectral import CharPoly
from hermdig.storage import CensusStore, StoredClasses

# n -> (digraphs, distinct, max class, determined, (no graphs, only graphs, mixed))
H_TABLE = {
    2: (3, 2, 2, 1, (0, 1, 1)),
    3: (16, 6, 6, 2, (2, 1, 3)),
    4: (218, 27, 21, 3, (16, 1, 10)),
    5: (9608, 275, 158, 5, (242, 1, 32)),
}

# n -> (distinct, determined, max class)
A_TABLE = {2: (2, 1, 2), 3: (7, 5, 6), 4: (46, 23, 42), 5: (718, 166, 592)}


def _check_h_row(n):
    row = census(n, "H").row
    count, distinct, largest, determined, split = H_TABLE[n]
    assert row.digraph_count == count
    assert row.distinct_charpolys == distinct
    assert row.max_class_size == largest
    assert row.determined_by_spectrum == determined
    assert (row.classes_no_graphs, row.classes_only_graphs, row.classes_mixed) == split


def _check_a_row(n):
    row = census(n, "A").row
    assert (row.distinct_charpolys, row.determined_by_spectrum, row.max_class_size) == A_TABLE[n]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 16), (4, 218)])
def test_generation_counts(n, count):
    codes = generate_codes(n)
    assert len(codes) == count
    assert len(set(codes)) == count


def test_generated_digraphs_are_canonical():
    for X in generate_nonisomorphic(4):
        assert encode(X) == canonical_code(X)


def test_generation_reports_levels():
    seen = []
    generate_codes(4, on_level=lambda m, count: seen.append((m, count)))
    assert seen == [(2, 3), (3, 16), (4, 218)]


def test_generation_order_limits():
    with pytest.raises(UnsupportedOrderError):
        generate_codes(0)
    with pytest.raises(UnsupportedOrderError):
        generate_codes(8, large=True)
    with pytest.raises(UnsupportedOrderError):
        generate_codes(6)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hermitian_census(n):
    _check_h_row(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_adjacency_census(n):
    _check_a_row(n)


@pytest.mark.slow
def test_census_order_five():
    _check_h_row(5)
    _check_a_row(5)


def test_census_rejects_unknown_matrix():
    with pytest.raises(ValueError):
        census(3, "G")


def test_census_classes_are_sorted_and_complete():
    result = census(4)
    keys = [c.key for c in result.classes]
    assert keys == sorted(keys, key=CharPoly.sort_key)
    assert sum(c.size for c in result.classes) == 218
    for cls in result.classes:
        assert cls.members == sorted(cls.members)
        assert converse_closed(cls)


def test_irreducible_and_squarefree_counts():
    row = census(3).row
    # every class polynomial has a rational root; three repeat a root
    assert row.irreducible_classes == 0
    assert row.squarefree_classes == 3
    assert row.squarefree_digraphs == 6 + 2 + 3


def test_store_backed_census_matches_memory(tmp_path):
    store = CensusStore(str(tmp_path / "census.sqlite"))
    try:
        on_disk = census(4, "H", store=store)
        in_memory = census(4, "H")
        assert on_disk.row == in_memory.row
        assert [c.to_dict() for c in on_disk.classes] == [c.to_dict() for c in in_memory.classes]
        assert store.get_row(1) == in_memory.row
    finally:
        store.close()


def test_streamed_codes_match_sorted_generation():
    seen = []
    streamed = list(iter_codes(4, on_level=lambda m, count: seen.append((m, count))))
    assert sorted(streamed) == generate_codes(4)
    assert seen == [(2, 3), (3, 16), (4, 218)]
    assert list(iter_codes(1)) == [()]
    with pytest.raises(UnsupportedOrderError):
        next(iter_codes(6))


def test_store_backed_classes_are_read_lazily(tmp_path):
    store = CensusStore(str(tmp_path / "census.sqlite"))
    try:
        result = census(3, "H", store=store)
        assert isinstance(result.classes, StoredClasses)
        first = [c.to_dict() for c in result.classes]
        assert [c.to_dict() for c in result.classes] == first
        assert len(first) == result.row.distinct_charpolys == 6
        assert store.member_count(result.classes.run_id) == 16
        assert store.duplicate_members(result.classes.run_id) == 0
    finally:
        store.close()


def test_store_detects_duplicate_members(tmp_path):
    store = CensusStore(str(tmp_path / "census.sqlite"))
    try:
        run_id = store.begin_run(2, "H")
        cp = CharPoly.from_expr("t**2 - 1")
        store.append_members(run_id, [("A_", cp, True), ("A_", cp, True), ("AO", cp, False)])
        assert store.duplicate_members(run_id) == 1
    finally:
        store.close()


def test_order3_reference_table():
    table = order3_reference_table()
    assert sorted(len(named) for _, named in table) == [1, 1, 2, 3, 3, 6]
    for key, named in table:
        for _, X in named:
            assert hermitian_char_poly(X) == key
    assert verify_classification(3).checks["order3-table"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classification_checks(n):
    report = verify_classification(n)
    assert report.ok, report.checks


@pytest.mark.slow
def test_classification_checks_order_five():
    report = verify_classification(5)
    assert report.ok, report.checks


def test_classification_order_limits():
    with pytest.raises(UnsupportedOrderError):
        verify_classification(6)


def test_underlying_graph_fixed_on_order_three():
    assert underlying_graph_variety(3) == []


def test_underlying_graphs_differ_from_order_four():
    variety = dict(underlying_graph_variety(4))
    assert variety
    # a directed triangle plus a vertex against the star: both t^4 - 3t^2
    key = CharPoly.from_expr("t**4 - 3*t**2")
    triangle = nx.Graph([(0, 1), (1, 2), (0, 2)])
    triangle.add_node(3)
    assert canonical_code(Digraph.from_graph(triangle)) in variety[key]
    assert canonical_code(Digraph.from_graph(nx.star_graph(3))) in variety[key]
    for graphs in variety.values():
        assert len(graphs) == len(set(graphs)) > 1


@pytest.mark.slow
def test_connectivity_mixes_within_a_class():
    demo = connectivity_demo(5)
    assert CharPoly.from_expr("t**5 - 5*t**3 + 2*t**2 + 2*t") in [key for _, key in demo]
    for (strong, weak, loose), key in demo:
        assert is_strongly_connected(strong)
        assert is_weakly_connected(weak) and not is_strongly_connected(weak)
        assert not is_weakly_connected(loose)
        assert hermitian_char_poly(strong) == hermitian_char_poly(weak) == hermitian_char_poly(loose) == key
