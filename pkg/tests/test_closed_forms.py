import numpy as np
import pytest

from hermdig.closed_forms import (
    closed_form_matches,
    closed_form_spectrum,
    skew_circulant_eigenvalues,
    transitive_tournament_char_poly,
)
from hermdig.digraphs import cartesian_product
from hermdig.errors import FamilyParameterError
from hermdig.families import k4_prime, necklace, transitive_tournament
from hermdig.hermitian import hermitian_char_poly, hermitian_matrix
from hermdig.polynomials import from_roots


@pytest.mark.parametrize("name", ["D", "Ctilde", "Ctilde_prime", "Ctilde_dprime", "C"])
def test_cycle_families(name):
    for n in range(3, 17):
        assert closed_form_matches(closed_form_spectrum(name, n)), (name, n)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["D", "Ctilde", "Ctilde_prime", "Ctilde_dprime"])
def test_cycle_families_large(name):
    for n in (24, 31, 32):
        assert closed_form_matches(closed_form_spectrum(name, n)), (name, n)


def test_transitive_tournament_spectrum():
    for n in range(1, 17):
        assert closed_form_matches(closed_form_spectrum("T", n)), n
        assert hermitian_char_poly(transitive_tournament(n)) == transitive_tournament_char_poly(n)
    assert str(transitive_tournament_char_poly(4)) == "t^4 - 6t^2 + 1"


@pytest.mark.slow
def test_transitive_tournament_char_poly_large():
    assert hermitian_char_poly(transitive_tournament(32)) == transitive_tournament_char_poly(32)


def test_x_ab_family():
    for a in range(1, 6):
        for b in range(1, 6):
            assert closed_form_matches(closed_form_spectrum("X_ab", a, b)), (a, b)


@pytest.mark.parametrize(
    "name, params",
    [("K3prime", ()), ("K4prime", ()), ("Y", (2, 3)), ("K", (5,)), ("P", (6,)), ("Star", (4,)),
     ("Empty", (3,)), ("SymNotBip", ())],
)
def test_small_named_families(name, params):
    assert closed_form_matches(closed_form_spectrum(name, *params))


def test_necklace_cube_identity():
    for k in range(3, 21):
        M = hermitian_matrix(necklace(k)).to_complex()
        assert np.allclose(M @ M @ M, 4 * M)
    for k in range(3, 7):
        assert closed_form_matches(closed_form_spectrum("Necklace", k))


def test_product_of_k4_prime_with_itself():
    cp = hermitian_char_poly(cartesian_product(k4_prime(), k4_prime()))
    assert cp == from_roots((2, 9), (-2, 6), (-6, 1))


def test_skew_circulant_needs_symmetric_row():
    assert skew_circulant_eigenvalues([]) == []
    with pytest.raises(ValueError):
        skew_circulant_eigenvalues([0, 1, 2])
    with pytest.raises(ValueError):
        skew_circulant_eigenvalues([1, 1, 1])


def test_closed_form_parameters_are_checked():
    with pytest.raises(FamilyParameterError):
        closed_form_spectrum("D", 2)
    with pytest.raises(FamilyParameterError):
        closed_form_spectrum("X_ab", 1)


@pytest.mark.slow
def test_x_ab_family_large():
    for a in range(1, 11):
        for b in range(6, 11):
            assert closed_form_matches(closed_form_spectrum("X_ab", a, b)), (a, b)
