"""Exact eigenvalue formulas for the named families.

Cycles are handled through their gain: if the product of H entries along
0 -> 1 -> ... -> n-1 -> 0 is i^q, the eigenvalues are 2 cos((qπ/2 + 2πk)/n).
Transitive tournaments go through the skew circulant i·scirc(0, 1, ..., 1).
"""

import math
from typing import Callable, Dict, List, Sequence, Union

import numpy as np

from .config import DEFAULT_TOLERANCE
from .families import FamilyId, family, family_id
from .hermitian import spectrum
from .models.spectral import CharPoly
from .models.structures import ClosedFormSpectrum


def skew_circulant_eigenvalues(a: Sequence[float]) -> List[float]:
    """Eigenvalues of the Hermitian matrix i·scirc(a), descending.

    scirc(a) has first row a and entries below the diagonal negated; it is
    skew-symmetric, and i·scirc(a) Hermitian, when a_0 = 0 and a_k = a_(n-k).
    """
    n = len(a)
    if n == 0:
        return []
    if a[0] != 0 or any(a[k] != a[n - k] for k in range(1, n)):
        raise ValueError("first row must satisfy a_0 = 0 and a_k = a_(n-k)")
    sigma = np.exp(1j * np.pi / n)
    k = np.arange(n)
    mu = [np.sum(np.asarray(a) * sigma ** ((2 * j + 1) * k)) for j in range(n)]
    return sorted((float((1j * m).real) for m in mu), reverse=True)


def transitive_tournament_char_poly(n: int) -> CharPoly:
    """Σ_j (-1)^j C(n, 2j) t^(n-2j), i.e. ((t+i)^n + (t-i)^n) / 2."""
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * math.comb(n, 2 * j)
    return CharPoly(tuple(coeffs))


def _cycle_gain(n: int, q: int) -> List[float]:
    return [2 * math.cos((q * math.pi / 2 + 2 * math.pi * k) / n) for k in range(n)]


def _x_ab(a: int, b: int) -> List[float]:
    root = math.sqrt(1 + 8 * a * b)
    return [(-1 + root) / 2] + [1.0] * a + [0.0] * (b - 1) + [-1.0] * (a - 1) + [(-1 - root) / 2]


def _complete(n: int) -> List[float]:
    return [float(n - 1)] + [-1.0] * (n - 1)


def _star(k: int) -> List[float]:
    if k == 0:
        return [0.0]
    return [math.sqrt(k)] + [0.0] * (k - 1) + [-math.sqrt(k)]


_FORMULAS: Dict[FamilyId, Callable[..., List[float]]] = {
    FamilyId.D: lambda n: [2 * math.sin(2 * math.pi * k / n) for k in range(n)],
    FamilyId.CTILDE: lambda n: [2 * math.sin((2 * j + 1) * math.pi / n) for j in range(n)],
    FamilyId.CTILDE_PRIME: lambda n: _cycle_gain(n, n - 1),
    FamilyId.CTILDE_DPRIME: lambda n: _cycle_gain(n, n - 3),
    FamilyId.NECKLACE: lambda n: [2.0] * n + [0.0] * n + [-2.0] * n,
    FamilyId.X_AB: _x_ab,
    FamilyId.Y: lambda a, b: _complete(a + b),
    FamilyId.K3PRIME: lambda: _x_ab(1, 1),
    FamilyId.K4PRIME: lambda: [1.0, 1.0, 1.0, -3.0],
    FamilyId.T: lambda n: skew_circulant_eigenvalues([0] + [1] * (n - 1)),
    FamilyId.K: _complete,
    FamilyId.C: lambda n: _cycle_gain(n, 0),
    FamilyId.P: lambda n: [2 * math.cos(math.pi * k / (n + 1)) for k in range(1, n + 1)],
    FamilyId.STAR: _star,
    FamilyId.EMPTY: lambda n: [0.0] * n,
    FamilyId.SYM_NOT_BIP: lambda: [math.sqrt(5), 1.0, -1.0, -math.sqrt(5)],
}


def closed_form_spectrum(name: Union[str, FamilyId], *params: int) -> ClosedFormSpectrum:
    fid = family_id(name)
    family(fid, *params)  # validates the parameters
    values = sorted(_FORMULAS[fid](*params), reverse=True)
    return ClosedFormSpectrum(family=fid.value, params=tuple(params), values=tuple(values))


def closed_form_matches(cf: ClosedFormSpectrum, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Compare the formula against the numeric spectrum of the constructed digraph."""
    X = family(cf.family, *cf.params)
    numeric = spectrum(X, tol).values()
    if len(numeric) != len(cf.values):
        return False
    return all(abs(x - y) < tol for x, y in zip(numeric, cf.values))
