import pytest

from hermdig.models.spectral import CharPoly
from hermdig.polynomials import (
    count_roots,
    eta_counts,
    from_roots,
    has_root,
    is_irreducible,
    is_squarefree,
    is_symmetric_about_zero,
    root_multiplicity,
    roots_within,
    squared_roots_poly,
)


def cp(expr: str) -> CharPoly:
    return CharPoly.from_expr(expr)


def test_char_poly_must_be_monic():
    with pytest.raises(ValueError):
        CharPoly((1, 2))
    assert str(cp("t**5 - 5*t**3 + 5*t - 2")) == "t^5 - 5t^3 + 5t - 2"
    assert cp("t**2 - 1").evaluate_int(3) == 8


def test_from_roots():
    assert from_roots((2, 1), (-1, 2)) == CharPoly((-2, -3, 0, 1))
    assert from_roots() == CharPoly((1,))


def test_count_roots_closed_interval():
    p = cp("t**3 - 3*t + 2")  # roots 1, 1, -2
    assert count_roots(p, -2, 1) == 3
    assert count_roots(p, 0, 2) == 2
    assert count_roots(p, -1.5, 0.5) == 0


def test_eta_counts():
    assert eta_counts(cp("t**3 - 3*t + 2")) == (2, 1)
    assert eta_counts(cp("t**4 - 4*t**2")) == (3, 3)


def test_roots_within_is_strict():
    tilde = cp("t**4 - 4*t**2 + 4")  # ±√2 twice
    assert roots_within(tilde, 3)
    assert not roots_within(tilde, 2)
    assert roots_within(cp("t**2 - 1"), 2)
    assert not roots_within(cp("t**2 - 1"), 1)


def test_squared_roots():
    q = squared_roots_poly(cp("t**2 - 2"))
    assert q.all_coeffs() == [1, -4, 4]


def test_symmetry():
    assert is_symmetric_about_zero(cp("t**4 - 4*t**2 + 4"))
    assert is_symmetric_about_zero(cp("t**3 - 3*t"))
    assert not is_symmetric_about_zero(cp("t**3 - 3*t + 2"))


def test_factor_questions():
    assert is_squarefree(cp("t**3 - 3*t"))
    assert not is_squarefree(cp("t**3 - 3*t + 2"))
    assert is_irreducible(cp("t**2 - 2"))
    assert not is_irreducible(cp("t**2 - 1"))
    assert not is_irreducible(CharPoly((1,)))


def test_integer_roots():
    p = from_roots((2, 9), (-2, 6), (-6, 1))
    assert has_root(p, -6)
    assert not has_root(p, 6)
    assert root_multiplicity(p, 2) == 9
    assert root_multiplicity(p, -2) == 6
    assert root_multiplicity(p, 0) == 0


def test_repeated_roots_are_counted_with_multiplicity():
    p = from_roots((-1, 2), (3, 1))
    assert count_roots(p, -1.5, 0) == 2
    assert count_roots(p, -2, 3) == 3
    assert eta_counts(p) == (1, 2)
    assert eta_counts(from_roots((0, 2), (-2, 3), (1, 1))) == (3, 5)


def test_roots_within_with_repeated_roots():
    assert roots_within(from_roots((0, 3)), 1)
    assert roots_within(from_roots((1, 2), (-1, 2)), 2)
    assert not roots_within(from_roots((1, 2), (-1, 2)), 1)
    assert roots_within(cp("t**4 - 4*t**2 + 4"), 3)
