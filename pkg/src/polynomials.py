"""Exact root counting and factorisation questions on characteristic polynomials."""

from functools import lru_cache
from typing import Tuple

import sympy

from .models.spectral import CharPoly, T

U = sympy.Symbol("u")


@lru_cache(maxsize=65536)
def _poly(coeffs: Tuple[int, ...]) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)), T, domain="ZZ")


def _reduced(cp: CharPoly) -> sympy.Poly:
    """The polynomial with its factor t^z removed."""
    z = cp.zero_multiplicity
    return _poly(cp.coeffs[z:])


def _counted(p: sympy.Poly, lo, hi) -> int:
    """Real roots of p in [lo, hi] counted with multiplicity.

    Poly.count_roots only sees distinct roots, so count each square-free factor.
    """
    if p.degree() <= 0:
        return 0
    return sum(m * int(f.count_roots(lo, hi)) for f, m in p.sqf_list()[1])


def count_roots(cp: CharPoly, lo, hi) -> int:
    """Number of real roots in the closed interval [lo, hi], with multiplicity."""
    return _counted(_poly(cp.coeffs), sympy.nsimplify(lo), sympy.nsimplify(hi))


def eta_counts(cp: CharPoly) -> Tuple[int, int]:
    """(η⁺, η⁻): numbers of non-negative and non-positive roots, exactly.

    All roots are real and bounded by n in absolute value.
    """
    z = cp.zero_multiplicity
    bound = max(cp.degree, 1)
    rest = _reduced(cp)
    positive = _counted(rest, 0, bound)
    negative = _counted(rest, -bound, 0)
    return z + positive, z + negative


def squared_roots_poly(cp: CharPoly) -> sympy.Poly:
    """q(u) whose roots are the squares of the roots of cp.

    p(t) p(-t) has only even powers; reading t^2 as u and fixing the sign
    gives the monic q.
    """
    n = cp.degree
    p = _poly(cp.coeffs)
    product = p * p.compose(sympy.Poly(-T, T))
    coeffs = product.all_coeffs()  # descending, degree 2n
    q = coeffs[0::2]
    sign = -1 if n % 2 else 1
    return sympy.Poly([sign * c for c in q], U, domain="ZZ")


def roots_within(cp: CharPoly, a_squared: int) -> bool:
    """True iff every root lies in the open interval (-a, a), a = sqrt(a_squared).

    Assumes all roots are real, which holds for Hermitian matrices.
    """
    if cp.degree == 0:
        return True
    q = squared_roots_poly(cp)
    inside = _counted(q, 0, a_squared)
    return inside == cp.degree and q.eval(a_squared) != 0


def is_symmetric_about_zero(cp: CharPoly) -> bool:
    """p(t) == (-1)^n p(-t): every c_k with n - k odd vanishes."""
    n = cp.degree
    return all(c == 0 for k, c in enumerate(cp.coeffs) if (n - k) % 2)


def is_squarefree(cp: CharPoly) -> bool:
    return bool(_poly(cp.coeffs).is_sqf)


def is_irreducible(cp: CharPoly) -> bool:
    if cp.degree == 0:
        return False
    return bool(_poly(cp.coeffs).is_irreducible)


def has_root(cp: CharPoly, value: int) -> bool:
    return cp.evaluate_int(value) == 0


def root_multiplicity(cp: CharPoly, value: int) -> int:
    p = _poly(cp.coeffs)
    factor = sympy.Poly(T - value, T)
    m = 0
    while not p.is_zero and p.degree() > 0 and p.eval(value) == 0:
        p = p.exquo(factor)
        m += 1
    return m


def from_roots(*groups: Tuple[int, int]) -> CharPoly:
    """Product of (t - r)^m over (r, m) pairs."""
    expr = sympy.Integer(1)
    for r, m in groups:
        expr *= (T - r) ** m
    return CharPoly.from_expr(sympy.expand(expr))
