"""Hermitian adjacency matrix, exact characteristic polynomial and spectra.

H(X) has entry 1 for a digon, i for a single arc u -> v, -i for a single arc
v -> u and 0 otherwise. The characteristic polynomial is computed exactly by
the Faddeev-LeVerrier recurrence on integer arrays holding the real and
imaginary parts; eigenvalues come from LAPACK through numpy.
"""

import logging
from typing import List, Optional

import numpy as np

from .config import DEFAULT_TOLERANCE
from .digraphs import asymmetric_part, symmetric_part, underlying_graph
from .errors import ConvergenceError, InvalidVertexSetError, InvariantViolation
from .models.digraph import Digraph, PairState
from .models.spectral import CharPoly, GaussianInt, HermitianMatrix, SpectralStats, Spectrum
from .models.structures import AllOnesCheck
from .polynomials import eta_counts, is_symmetric_about_zero

logger = logging.getLogger(__name__)

# int64 is exact for Faddeev-LeVerrier intermediates up to this order;
# beyond it the arrays switch to Python integers.
_INT64_MAX_ORDER = 12


def _exact(arr: np.ndarray) -> np.ndarray:
    """Keep int64 for small orders, switch to Python integers above."""
    n = arr.shape[0]
    if n <= _INT64_MAX_ORDER:
        return arr.astype(np.int64)
    return np.array(arr.tolist(), dtype=object).reshape(n, n)


def _zeros(n: int) -> np.ndarray:
    return _exact(np.zeros((n, n), dtype=np.int64))


def _identity(n: int) -> np.ndarray:
    return _exact(np.eye(n, dtype=np.int64))


# ─── Matrices ─────────────────────────────────────────────────────


def hermitian_matrix(X: Digraph) -> HermitianMatrix:
    n = X.n
    s = np.array(X.pairs, dtype=np.int64)
    iu = np.triu_indices(n, 1)
    re = np.zeros((n, n), dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    if n > 1:
        re[iu] = s == PairState.DIGON
        im[iu] = (s == PairState.FWD).astype(np.int64) - (s == PairState.BWD)
    return HermitianMatrix(_exact(re + re.T), _exact(im - im.T))


def adjacency_matrix(X: Digraph) -> HermitianMatrix:
    """A(X): 1 at (u, v) for every arc u -> v."""
    a = np.zeros((X.n, X.n), dtype=np.int64)
    for u, v in X.arcs():
        a[u, v] = 1
    return HermitianMatrix(_exact(a), _zeros(X.n))


def underlying_adjacency_matrix(X: Digraph) -> HermitianMatrix:
    a = np.zeros((X.n, X.n), dtype=np.int64)
    for u, v in X.edges():
        a[u, v] = a[v, u] = 1
    return HermitianMatrix(_exact(a), _zeros(X.n))


# ─── Characteristic polynomials ───────────────────────────────────


def _mul(ar, ai, br, bi):
    return ar @ br - ai @ bi, ar @ bi + ai @ br


def char_poly(M: HermitianMatrix) -> CharPoly:
    """Exact det(tI - M) by Faddeev-LeVerrier.

    M_1 = I, c_{n-1} = -tr(M); M_k = M M_{k-1} + c_{n-k+1} I,
    c_{n-k} = -tr(M M_k) / k. Every division is exact and every coefficient
    is real; anything else is an internal error.
    """
    n = M.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return CharPoly((1,))
    eye = _identity(n)
    mr, mi = _zeros(n), _zeros(n)
    c = 1
    for k in range(1, n + 1):
        pr, pi = _mul(M.real, M.imag, mr, mi)
        mr, mi = pr + c * eye, pi
        ar, ai = _mul(M.real, M.imag, mr, mi)
        tr_re, tr_im = int(np.trace(ar)), int(np.trace(ai))
        c, rem = divmod(-tr_re, k)
        if rem or tr_im:
            raise InvariantViolation(
                f"Faddeev-LeVerrier step {k}: trace {tr_re}+{tr_im}i not divisible to a real integer"
            )
        coeffs[n - k] = c
    return CharPoly(tuple(coeffs))


def hermitian_char_poly(X: Digraph) -> CharPoly:
    return char_poly(hermitian_matrix(X))


def adjacency_char_poly(X: Digraph) -> CharPoly:
    return char_poly(adjacency_matrix(X))


def underlying_char_poly(X: Digraph) -> CharPoly:
    return char_poly(underlying_adjacency_matrix(X))


# ─── Numeric spectrum ─────────────────────────────────────────────


def eigenvalues(M: HermitianMatrix, tol: float = DEFAULT_TOLERANCE, cp: Optional[CharPoly] = None) -> Spectrum:
    """Clustered spectrum of a Hermitian matrix.

    The zero multiplicity is exact: the z values closest to 0 are pinned to
    0.0, z being the power of t dividing the characteristic polynomial.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    cp = cp or char_poly(M)
    if M.n == 0:
        return Spectrum((), (), 0, tol)
    try:
        raw = np.linalg.eigvalsh(M.to_complex())
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver did not converge for n={M.n}: {exc}") from exc
    z = cp.zero_multiplicity
    values: List[float] = [float(x) for x in raw]
    if z:
        nearest = sorted(range(len(values)), key=lambda k: abs(values[k]))[:z]
        for k in nearest:
            values[k] = 0.0
    return Spectrum.from_values(values, tol, zero_mult=z)


def spectrum(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> Spectrum:
    return eigenvalues(hermitian_matrix(X), tol)


def real_spectrum(M: HermitianMatrix, tol: float = DEFAULT_TOLERANCE) -> Spectrum:
    """Spectrum of a real symmetric matrix such as A(Γ(X))."""
    return eigenvalues(M, tol)


def spectral_radius(M: HermitianMatrix) -> float:
    if M.n == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvalsh(M.to_complex()))))


def spectral_stats(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> SpectralStats:
    M = hermitian_matrix(X)
    cp = char_poly(M)
    spec = eigenvalues(M, tol, cp)
    eta_plus, eta_minus = eta_counts(cp)
    return SpectralStats(
        lambda1=spec.lambda1,
        lambda_n=spec.lambda_n,
        rho=spec.rho,
        eta_plus=eta_plus,
        eta_minus=eta_minus,
        symmetric_about_zero=is_symmetric_about_zero(cp),
    )


# ─── Powers and walks ─────────────────────────────────────────────


def _power(M: HermitianMatrix, k: int):
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    # Python integers: powers grow past int64 quickly
    re = np.array(M.real.tolist(), dtype=object).reshape(M.n, M.n)
    im = np.array(M.imag.tolist(), dtype=object).reshape(M.n, M.n)
    rr = np.array([[int(i == j) for j in range(M.n)] for i in range(M.n)], dtype=object).reshape(M.n, M.n)
    ri = np.array([[0] * M.n for _ in range(M.n)], dtype=object).reshape(M.n, M.n)
    while k:
        if k & 1:
            rr, ri = _mul(rr, ri, re, im)
        k >>= 1
        if k:
            re, im = _mul(re, im, re, im)
    return rr, ri


def power_entry(M: HermitianMatrix, k: int, u: int, v: int) -> GaussianInt:
    if not (0 <= u < M.n and 0 <= v < M.n):
        raise InvalidVertexSetError(f"({u}, {v}) outside a {M.n}×{M.n} matrix")
    rr, ri = _power(M, k)
    return GaussianInt(int(rr[u, v]), int(ri[u, v]))


def matrix_power(M: HermitianMatrix, k: int) -> HermitianMatrix:
    rr, ri = _power(M, k)
    return HermitianMatrix(rr, ri)


def trace_power(M: HermitianMatrix, k: int) -> int:
    rr, ri = _power(M, k)
    tr_im = sum(int(ri[j, j]) for j in range(M.n))
    if tr_im:
        raise InvariantViolation(f"tr(H^{k}) has imaginary part {tr_im}")
    return sum(int(rr[j, j]) for j in range(M.n))


def walk_weight_sum(X: Digraph, k: int, u: int, v: int) -> GaussianInt:
    """Sum over walks of length k in Γ(X) from u to v of the product of H entries.

    Dynamic programming over walk end points; equals (H^k)_{uv}.
    """
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    M = hermitian_matrix(X)
    neighbours = [[w for w in range(X.n) if w != a and X.state(a, w)] for a in range(X.n)]
    weights = {u: GaussianInt(1, 0)}
    for _ in range(k):
        step = {}
        for a, wt in weights.items():
            for b in neighbours[a]:
                step[b] = step.get(b, GaussianInt()) + wt * M.entry(a, b)
        weights = step
    return weights.get(v, GaussianInt())


# ─── All-ones eigenvector ─────────────────────────────────────────


def all_ones_eigenvector(X: Digraph) -> AllOnesCheck:
    """Whether the all-ones vector is an eigenvector of H(X).

    Decided from the row sums of H and, independently, from "the digon
    graph is regular and the remaining arcs form an eulerian digraph"; the
    two answers must agree.
    """
    M = hermitian_matrix(X)
    row_re = [int(x) for x in M.real.sum(axis=1)]
    row_im = [int(x) for x in M.imag.sum(axis=1)]
    exact = X.n == 0 or (len(set(row_re)) == 1 and not any(row_im))

    digon_degrees = {d for _, d in symmetric_part(X).degree()}
    prof = asymmetric_part(X).degree_profile()
    eulerian = prof.in_degree == prof.out_degree
    combinatorial = len(digon_degrees) <= 1 and eulerian
    if exact != combinatorial:
        raise InvariantViolation(
            f"all-ones eigenvector test disagrees: row sums say {exact}, structure says {combinatorial}"
        )
    return AllOnesCheck(exact=exact, combinatorial=combinatorial, eigenvalue=row_re[0] if exact and X.n else None)


def underlying_edge_count(X: Digraph) -> int:
    return underlying_graph(X).number_of_edges()
