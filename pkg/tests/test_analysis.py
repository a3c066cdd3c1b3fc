import math

import networkx as nx
import pytest
import sympy

from hermdig.analysis import (
    c4_tilde_class,
    check_interlacing,
    classify_small_radius,
    digraph_from_partition,
    eta_bounds_check,
    odd_cycle_digon_parity,
    odd_cycle_digon_parity_brute,
    quotient,
    radius_certificate,
    radius_inequalities,
    symmetric_sufficient_conditions,
    tournament_bound_check,
    transitive_subtournament_bound,
)
from hermdig.codec import canonical_code
from hermdig.digraphs import delete_vertex, digraph_of, disjoint_union, underlying_graph
from hermdig.errors import (
    DimensionMismatchError,
    EmptyDigraphError,
    HasDigonError,
    InvalidPartitionError,
    NotWeaklyConnectedError,
)
from hermdig.families import directed_cycle, family, transitive_tournament
from hermdig.hermitian import spectrum
from hermdig.models.digraph import Digraph
from hermdig.models.spectral import Spectrum
from hermdig.models.structures import Phase, QuaternaryPartition, RadiusKind, SmallRadiusTag


def test_interlacing_on_vertex_deletion(random_digraphs):
    for X in random_digraphs:
        parent = spectrum(X)
        for v in range(X.n):
            assert check_interlacing(parent, spectrum(delete_vertex(X, v)))


def test_interlacing_detects_violation_and_bad_dimensions():
    assert not check_interlacing(spectrum(family("Empty", 2)), spectrum(family("K", 2)))
    with pytest.raises(DimensionMismatchError):
        check_interlacing(spectrum(family("K", 2)), spectrum(family("K", 3)))


def test_eta_bounds(random_digraphs):
    for X in random_digraphs:
        assert eta_bounds_check(X).ok
    bounds = eta_bounds_check(family("Empty", 4))
    assert bounds.alpha == 4 and bounds.eta_plus == 4


def test_tournament_bound():
    for n in range(2, 8):
        b = tournament_bound_check(transitive_tournament(n))
        assert b.tight and b.matches_transitive and b.ok
    # D_3 switches to T_3
    assert tournament_bound_check(directed_cycle(3)).tight
    b = tournament_bound_check(directed_cycle(4))
    assert not b.tight and not b.matches_transitive and b.ok
    with pytest.raises(HasDigonError):
        tournament_bound_check(family("K", 3))


def test_transitive_subtournament_bound():
    assert transitive_subtournament_bound(transitive_tournament(4)) == 4
    assert transitive_subtournament_bound(family("Empty", 3)) == 1


def test_equitable_quotient():
    q = quotient(family("K", 4), [[0, 1], [2, 3]])
    assert q.equitable
    assert q.B == sympy.Matrix([[1, 2], [2, 1]])
    assert q.eigenvalues == pytest.approx((3.0, -1.0))


def test_quotient_partition_checks():
    with pytest.raises(InvalidPartitionError):
        quotient(family("K", 3), [[0, 1], [1, 2]])
    with pytest.raises(InvalidPartitionError):
        quotient(family("K", 3), [[0, 1]])


def test_quotients_of_random_partitions_interlace(random_digraphs, rng):
    for X in random_digraphs:
        vertices = list(range(X.n))
        rng.shuffle(vertices)
        cuts = sorted(rng.sample(range(1, X.n), rng.randint(0, X.n - 1))) if X.n > 1 else []
        blocks = [vertices[a:b] for a, b in zip([0] + cuts, cuts + [X.n])]
        q = quotient(X, blocks)
        assert len(q.eigenvalues) == len(blocks)
        assert check_interlacing(spectrum(X), Spectrum.from_values(q.eigenvalues, 1e-9), tol=1e-7)


def test_singleton_partition_is_equitable(random_digraphs):
    for X in random_digraphs:
        q = quotient(X, [[v] for v in range(X.n)])
        assert q.equitable
        assert list(q.eigenvalues) == pytest.approx(spectrum(X).values(), abs=1e-9)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
def test_residue_classes_of_directed_cycle_are_equitable(d):
    X = directed_cycle(12)
    q = quotient(X, [[v for v in range(12) if v % d == r] for r in range(d)])
    assert q.equitable
    parent = spectrum(X).values()
    for lam in q.eigenvalues:
        assert any(abs(lam - x) < 1e-9 for x in parent)


@pytest.mark.parametrize("a, b", [(1, 1), (1, 3), (2, 3), (3, 2)])
def test_x_ab_quotient(a, b):
    X = family("X", a, b)
    blocks = [range(a), range(a, 2 * a), range(2 * a, 2 * a + b)]
    q = quotient(X, blocks)
    assert q.equitable
    expected = sympy.Matrix([[0, 1, sympy.I * b], [1, 0, -sympy.I * b], [-sympy.I * a, sympy.I * a, 0]])
    assert sympy.simplify(q.B - expected) == sympy.zeros(3, 3)
    root = math.sqrt(1 + 8 * a * b)
    assert sorted(q.eigenvalues) == pytest.approx(sorted([1.0, (-1 + root) / 2, (-1 - root) / 2]))


def test_radius_certificate_equality_cases():
    cert = radius_certificate(family("C", 4))
    assert cert.kind == RadiusKind.POSITIVE_EQUALITY and cert.delta == 2
    assert set(cert.partition.labels) == {Phase.ONE}

    D4 = directed_cycle(4)
    cert = radius_certificate(D4)
    assert cert.kind == RadiusKind.POSITIVE_EQUALITY
    assert digraph_from_partition(underlying_graph(D4), cert.partition, cert.kind) == D4

    assert radius_certificate(family("Ctilde", 4)).kind == RadiusKind.NO_EQUALITY
    assert radius_certificate(family("P", 3)).kind == RadiusKind.NO_EQUALITY


def test_radius_certificate_negative_equality():
    cert = radius_certificate(family("K3prime"))
    assert cert.kind == RadiusKind.NEGATIVE_EQUALITY
    assert cert.rho == pytest.approx(2.0)
    X = family("K3prime")
    assert digraph_from_partition(underlying_graph(X), cert.partition, cert.kind) == X


def test_radius_certificate_needs_connected_digraph():
    with pytest.raises(NotWeaklyConnectedError):
        radius_certificate(family("Empty", 2))


def test_partition_realisation_over_regular_graph():
    G = nx.cycle_graph(4)
    P = QuaternaryPartition.parse("1,-i,-1,i")
    X = digraph_from_partition(G, P, RadiusKind.POSITIVE_EQUALITY)
    assert X == directed_cycle(4)
    assert spectrum(X).lambda1 == pytest.approx(2.0)
    with pytest.raises(InvalidPartitionError):
        digraph_from_partition(nx.path_graph(3), QuaternaryPartition.uniform(4), RadiusKind.POSITIVE_EQUALITY)


def test_radius_inequalities(random_digraphs):
    for X in random_digraphs:
        if X.edge_count:
            assert radius_inequalities(X).ok
    r = radius_inequalities(family("K3prime"))
    assert r.lambda1 == pytest.approx(1.0) and r.rho == pytest.approx(2.0) and r.delta == 2
    with pytest.raises(EmptyDigraphError):
        radius_inequalities(family("Empty", 3))


def test_symmetric_spectrum_without_sufficient_conditions():
    c = symmetric_sufficient_conditions(family("SymNotBip"))
    assert not c.bipartite and not c.oriented and not c.odd_cycle_digon_parity
    assert c.spectrum_symmetric


def test_odd_cycle_parity_matches_brute_force(random_digraphs):
    for X in random_digraphs:
        assert odd_cycle_digon_parity(X) == odd_cycle_digon_parity_brute(X)
    assert odd_cycle_digon_parity(family("Ctilde", 5))
    assert not odd_cycle_digon_parity(family("Ctilde_prime", 5))


@pytest.mark.parametrize(
    "X, tag",
    [
        (Digraph.empty(3), SmallRadiusTag.LT_SQRT2),
        (disjoint_union(family("K", 2), Digraph.from_arcs(2, [(1, 0)])), SmallRadiusTag.PM1),
        (family("P", 3), SmallRadiusTag.LT_SQRT3),
        (family("P", 4), SmallRadiusTag.LT_SQRT3),
        (family("Ctilde", 4), SmallRadiusTag.LT_SQRT3),
        (family("P", 5), SmallRadiusTag.NONE),
        (family("Star", 3), SmallRadiusTag.NONE),
        (family("K", 3), SmallRadiusTag.NONE),
        (directed_cycle(3), SmallRadiusTag.NONE),
    ],
)
def test_small_radius_classification(X, tag):
    assert classify_small_radius(X) == tag


def test_c4_tilde_class():
    codes = c4_tilde_class()
    assert len(codes) == 3
    assert canonical_code(family("Ctilde", 4)) in codes
    assert canonical_code(digraph_of(nx.cycle_graph(4))) not in codes


def test_cot_bound_value():
    b = tournament_bound_check(transitive_tournament(3))
    assert b.bound == pytest.approx(math.sqrt(3))
