import math

import numpy as np
import pytest

from hermdig.errors import InvalidVertexSetError
from hermdig.families import directed_cycle, family, transitive_tournament
from hermdig.hermitian import (
    adjacency_char_poly,
    all_ones_eigenvector,
    char_poly,
    eigenvalues,
    hermitian_char_poly,
    hermitian_matrix,
    power_entry,
    spectral_radius,
    spectral_stats,
    spectrum,
    trace_power,
    underlying_adjacency_matrix,
    underlying_char_poly,
    walk_weight_sum,
)
from hermdig.models.digraph import Digraph
from hermdig.models.spectral import CharPoly, GaussianInt


def test_entries():
    M = hermitian_matrix(Digraph.from_arcs(3, [(0, 1), (2, 0), (1, 2), (2, 1)]))
    assert M.entry(0, 1) == GaussianInt(0, 1)
    assert M.entry(1, 0) == GaussianInt(0, -1)
    assert M.entry(0, 2) == GaussianInt(0, -1)
    assert M.entry(1, 2) == GaussianInt(1, 0)
    assert M.entry(0, 0) == GaussianInt(0, 0)
    assert M.is_hermitian()


@pytest.mark.parametrize(
    "name, params, expected",
    [
        ("K3prime", (), "t^3 - 3t + 2"),
        ("Ctilde", (4,), "t^4 - 4t^2 + 4"),
        ("C", (4,), "t^4 - 4t^2"),
        ("Ctilde_prime", (4,), "t^4 - 4t^2 + 2"),
        ("T", (4,), "t^4 - 6t^2 + 1"),
        ("K", (3,), "t^3 - 3t - 2"),
        ("Empty", (2,), "t^2"),
    ],
)
def test_char_poly_of_named_digraphs(name, params, expected):
    assert str(hermitian_char_poly(family(name, *params))) == expected


def test_low_coefficients(random_digraphs):
    for X in random_digraphs:
        cp = hermitian_char_poly(X)
        assert cp.degree == X.n
        if X.n >= 2:
            assert cp.coefficient(X.n - 1) == 0
            assert cp.coefficient(X.n - 2) == -X.edge_count


def test_other_matrices():
    D3 = directed_cycle(3)
    assert adjacency_char_poly(D3) == CharPoly((-1, 0, 0, 1))
    assert underlying_char_poly(D3) == hermitian_char_poly(family("C", 3))
    assert char_poly(underlying_adjacency_matrix(D3)) == CharPoly.from_expr("t**3 - 3*t - 2")


def test_spectrum_clusters_multiplicities():
    spec = spectrum(family("Ctilde", 4))
    assert spec.multiplicities == (2, 2)
    assert spec.eigenvalues[0] == pytest.approx(math.sqrt(2), abs=1e-9)
    assert spec.eigenvalues[1] == pytest.approx(-math.sqrt(2), abs=1e-9)
    assert spec.zero_mult == 0
    assert spec.n == 4


def test_zero_multiplicity_is_exact():
    spec = spectrum(family("C", 4))
    assert spec.zero_mult == 2
    assert spec.values() == [pytest.approx(2.0), 0.0, 0.0, pytest.approx(-2.0)]


def test_trace_sums(random_digraphs):
    for X in random_digraphs:
        values = spectrum(X).values()
        assert sum(values) == pytest.approx(0.0, abs=1e-7)
        assert sum(v * v for v in values) == pytest.approx(2 * X.edge_count, abs=1e-7)
        assert trace_power(hermitian_matrix(X), 2) == 2 * X.edge_count


def test_eigenvalues_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        eigenvalues(hermitian_matrix(directed_cycle(3)), tol=0)


def test_spectral_stats_of_k3_prime():
    stats = spectral_stats(family("K3prime"))
    assert stats.lambda1 == pytest.approx(1.0)
    assert stats.lambda_n == pytest.approx(-2.0)
    assert stats.rho == pytest.approx(2.0)
    assert (stats.eta_plus, stats.eta_minus) == (2, 1)
    assert not stats.symmetric_about_zero


# Two digons plus five arcs; -1 is a double eigenvalue.
REPEATED_NEGATIVE = Digraph.from_arcs(6, [(0, 5), (1, 0), (1, 5), (3, 2), (3, 4), (4, 1), (4, 3), (4, 5), (5, 0)])


def test_inertia_counts_repeated_eigenvalues():
    X = REPEATED_NEGATIVE
    values = np.linalg.eigvalsh(hermitian_matrix(X).to_complex())
    assert np.sum(np.isclose(values, -1.0)) == 2

    stats = spectral_stats(X)
    assert stats.eta_plus == int(np.sum(values > -1e-9)) == 3
    assert stats.eta_minus == int(np.sum(values < 1e-9)) == 3


def test_inertia_matches_numeric_signs(random_digraphs):
    for X in random_digraphs:
        values = np.linalg.eigvalsh(hermitian_matrix(X).to_complex())
        stats = spectral_stats(X)
        assert stats.eta_plus == int(np.sum(values > -1e-6))
        assert stats.eta_minus == int(np.sum(values < 1e-6))


def test_spectral_radius_of_underlying_graph():
    assert spectral_radius(underlying_adjacency_matrix(transitive_tournament(4))) == pytest.approx(3.0)


def test_walk_weights_match_matrix_powers(random_digraphs):
    for X in random_digraphs[:15]:
        M = hermitian_matrix(X)
        for k in (0, 1, 2, 3):
            for v in range(X.n):
                assert power_entry(M, k, 0, v) == walk_weight_sum(X, k, 0, v)


def test_power_entry_bounds():
    with pytest.raises(InvalidVertexSetError):
        power_entry(hermitian_matrix(directed_cycle(3)), 2, 0, 3)


def test_all_ones_eigenvector():
    cycle = all_ones_eigenvector(directed_cycle(4))
    assert cycle.exact and cycle.combinatorial and cycle.eigenvalue == 0
    K3 = all_ones_eigenvector(family("K", 3))
    assert K3.exact and K3.eigenvalue == 2
    assert not all_ones_eigenvector(family("K3prime")).exact
