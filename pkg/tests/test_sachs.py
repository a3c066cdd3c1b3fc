import random

import pytest

from hermdig.digraphs import random_digraph
from hermdig.enumeration import generate_nonisomorphic
from hermdig.families import family, necklace
from hermdig.hermitian import hermitian_char_poly
from hermdig.models.spectral import CharPoly
from hermdig.sachs import (
    basic_subgraphs,
    cycle_r,
    is_admissible_cycle,
    sachs_coefficient,
    sachs_coefficients,
    trace_identities,
    triangle_census,
    underlying_cycles,
)


def test_coefficients_of_tilde_c4():
    assert sachs_coefficients(family("Ctilde", 4)) == (4, 0, -4, 0, 1)


@pytest.mark.parametrize(
    "name, params",
    [("K3prime", ()), ("K4prime", ()), ("D", (5,)), ("Ctilde_dprime", (6,)), ("X_ab", (2, 2)), ("SymNotBip", ())],
)
def test_coefficients_match_char_poly_on_families(name, params):
    X = family(name, *params)
    assert CharPoly(sachs_coefficients(X)) == hermitian_char_poly(X)


def test_coefficients_match_char_poly_exhaustively_on_order_four():
    for X in generate_nonisomorphic(4):
        assert CharPoly(sachs_coefficients(X)) == hermitian_char_poly(X)


def test_coefficients_match_char_poly_on_random_digraphs():
    rng = random.Random(99)
    for _ in range(25):
        X = random_digraph(rng.choice((6, 7)), rng)
        assert CharPoly(sachs_coefficients(X)) == hermitian_char_poly(X)


def test_single_coefficient():
    X = family("K3prime")
    assert sachs_coefficient(X, 1) == -3
    assert sachs_coefficient(X, 3) == 1
    with pytest.raises(ValueError):
        sachs_coefficient(X, 4)


def test_basic_subgraphs_of_order_two_are_edges(random_digraphs):
    for X in random_digraphs:
        if X.n >= 2:
            assert sum(1 for _ in basic_subgraphs(X, 2)) == X.edge_count


def test_triangles_need_an_even_number_of_single_arcs():
    assert list(basic_subgraphs(family("Ctilde", 3), 3)) == []
    assert len(list(basic_subgraphs(family("K3prime"), 3))) == 1


def test_cycle_listing_and_admissibility():
    cycles = list(underlying_cycles(family("K", 4)))
    assert len(cycles) == 7  # four triangles, three 4-cycles
    (c,) = list(underlying_cycles(family("K3prime")))
    assert is_admissible_cycle(family("K3prime"), c)
    (d,) = list(underlying_cycles(family("D", 3)))
    assert not is_admissible_cycle(family("D", 3), d)
    (e,) = list(underlying_cycles(family("D", 4)))
    assert cycle_r(family("D", 4), e) == 2


@pytest.mark.parametrize(
    "name, params, census",
    [
        ("K", (3,), (0, 0, 0, 1)),
        ("K3prime", (), (1, 0, 0, 0)),
        ("Ctilde", (3,), (0, 0, 0, 0)),
        ("D", (3,), (0, 0, 0, 0)),
        ("K", (4,), (0, 0, 0, 4)),
    ],
)
def test_triangle_census(name, params, census):
    assert triangle_census(family(name, *params)).as_tuple() == census


def test_trace_identities(random_digraphs):
    for X in random_digraphs + [family("K3prime"), necklace(3)]:
        assert trace_identities(X).ok
    assert trace_identities(family("K3prime")).tr3 == -6
