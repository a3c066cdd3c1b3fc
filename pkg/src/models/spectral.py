"""Exact and numeric spectral value types."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
import sympy

T = sympy.Symbol("t")


class GaussianInt:
    """Exact element of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @staticmethod
    def lift(value: Union["GaussianInt", int]) -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, (int, np.integer)):
            return GaussianInt(int(value), 0)
        return NotImplemented

    def __add__(self, other):
        other = GaussianInt.lift(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianInt.lift(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianInt.lift(other)
        if other is NotImplemented:
            return other
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other) -> bool:
        other = GaussianInt.lift(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return imag
        return f"{self.re}{'+' if self.im > 0 else ''}{imag}"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
NEG_I = GaussianInt(0, -1)


class HermitianMatrix:
    """Dense n×n matrix over Z[i], held as exact integer real and imaginary parts.

    Also used for the real 0/1 variants A(X) and A(Γ(X)); those are not
    Hermitian in general (A(X) is not symmetric) and have `imag` all zero.
    """

    __slots__ = ("n", "real", "imag")

    def __init__(self, real: np.ndarray, imag: np.ndarray):
        if real.shape != imag.shape or real.ndim != 2 or real.shape[0] != real.shape[1]:
            raise ValueError(f"real/imag parts must be equal square arrays, got {real.shape}, {imag.shape}")
        self.n = real.shape[0]
        self.real = real
        self.imag = imag

    def entry(self, u: int, v: int) -> GaussianInt:
        return GaussianInt(int(self.real[u, v]), int(self.imag[u, v]))

    @property
    def entries(self) -> List[List[GaussianInt]]:
        return [[self.entry(u, v) for v in range(self.n)] for u in range(self.n)]

    def is_hermitian(self) -> bool:
        return bool(np.array_equal(self.real, self.real.T) and np.array_equal(self.imag, -self.imag.T))

    def to_complex(self) -> np.ndarray:
        return self.real.astype(float) + 1j * self.imag.astype(float)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and bool(np.array_equal(self.real, other.real))
            and bool(np.array_equal(self.imag, other.imag))
        )

    __hash__ = None

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(self.entry(u, v)) for v in range(self.n)) + "]" for u in range(self.n)]
        return "HermitianMatrix([" + ", ".join(rows) + "])"


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, coefficients stored ascending: c0..cn."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError(f"characteristic polynomial must be monic, got {self.coeffs}")

    @classmethod
    def from_expr(cls, expr) -> "CharPoly":
        """From a sympy expression or string in the variable t."""
        poly = sympy.Poly(sympy.sympify(expr), T)
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_key(cls, key: str) -> "CharPoly":
        return cls(tuple(int(c) for c in key.split(",")))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    @property
    def zero_multiplicity(self) -> int:
        z = 0
        while z < self.degree and self.coeffs[z] == 0:
            z += 1
        return z

    def key(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def sort_key(self) -> Tuple[int, ...]:
        return (self.degree,) + tuple(reversed(self.coeffs))

    def as_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)), T, domain="ZZ")

    def evaluate(self, x: float) -> float:
        return float(np.polyval(list(reversed(self.coeffs)), x))

    def evaluate_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending) with multiplicities."""
    eigenvalues: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    zero_mult: int
    tolerance: float

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    def values(self) -> List[float]:
        out: List[float] = []
        for lam, m in zip(self.eigenvalues, self.multiplicities):
            out.extend([lam] * m)
        return out

    @property
    def lambda1(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0

    @property
    def lambda_n(self) -> float:
        return self.eigenvalues[-1] if self.eigenvalues else 0.0

    @property
    def rho(self) -> float:
        return max(abs(self.lambda1), abs(self.lambda_n))

    @classmethod
    def from_values(cls, values: Sequence[float], tolerance: float, zero_mult: int = 0) -> "Spectrum":
        """Cluster raw values (any order) within `tolerance` into a Spectrum."""
        ordered = sorted((float(v) for v in values), reverse=True)
        groups: List[List[float]] = []
        for v in ordered:
            if groups and groups[-1][-1] - v <= tolerance:
                groups[-1].append(v)
            else:
                groups.append([v])
        eig = tuple(0.0 if all(x == 0.0 for x in g) else sum(g) / len(g) for g in groups)
        return cls(eig, tuple(len(g) for g in groups), zero_mult, tolerance)


@dataclass(frozen=True)
class SpectralStats:
    lambda1: float
    lambda_n: float
    rho: float
    eta_plus: int
    eta_minus: int
    symmetric_about_zero: bool
