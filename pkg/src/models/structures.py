"""Records produced by the sachs, switching and analysis modules."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import sympy

from .digraph import Digraph
from .spectral import CharPoly, GaussianInt


# ─── Sachs ────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Edge:
    u: int
    v: int

    @property
    def order(self) -> int:
        return 2


@dataclass(frozen=True)
class Cycle:
    """Cycle of Γ(X) stored in its traversal order; the closing pair is implicit."""
    vertices: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def steps(self) -> List[Tuple[int, int]]:
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def reversed(self) -> "Cycle":
        return Cycle((self.vertices[0],) + tuple(reversed(self.vertices[1:])))


Component = Union[Edge, Cycle]


@dataclass(frozen=True)
class BasicSubgraph:
    components: Tuple[Component, ...]

    @property
    def order(self) -> int:
        return sum(c.order for c in self.components)

    @property
    def cycle_count(self) -> int:
        return sum(1 for c in self.components if isinstance(c, Cycle))

    @property
    def even_components(self) -> int:
        return sum(1 for c in self.components if c.order % 2 == 0)


@dataclass(frozen=True)
class TriangleCensus:
    """Induced triangles by type.

    x1: one digon, the other two arcs form a directed path through the apex.
    x2: one digon, both arcs point into the apex.
    x3: one digon, both arcs leave the apex.
    x4: three digons.
    """
    x1: int = 0
    x2: int = 0
    x3: int = 0
    x4: int = 0

    @property
    def trace_cube(self) -> int:
        return 6 * (self.x2 + self.x3 + self.x4 - self.x1)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.x4)


@dataclass(frozen=True)
class TraceIdentities:
    tr1: int
    tr2: int
    tr3: int
    edges: int
    census: TriangleCensus

    @property
    def ok(self) -> bool:
        return self.tr1 == 0 and self.tr2 == 2 * self.edges and self.tr3 == self.census.trace_cube


# ─── Switching ────────────────────────────────────────────────────


class Phase(Enum):
    ONE = "1"
    NEG_ONE = "-1"
    I = "i"
    NEG_I = "-i"

    @property
    def gaussian(self) -> GaussianInt:
        return _PHASE_VALUE[self]

    def conjugate(self) -> "Phase":
        return {Phase.I: Phase.NEG_I, Phase.NEG_I: Phase.I}.get(self, self)

    def times(self, other: "Phase") -> "Phase":
        return phase_of(self.gaussian * other.gaussian)


_PHASE_VALUE = {
    Phase.ONE: GaussianInt(1, 0),
    Phase.NEG_ONE: GaussianInt(-1, 0),
    Phase.I: GaussianInt(0, 1),
    Phase.NEG_I: GaussianInt(0, -1),
}


def phase_of(value: GaussianInt) -> Phase:
    for phase, g in _PHASE_VALUE.items():
        if g == value:
            return phase
    raise ValueError(f"{value} is not a fourth root of unity")


@dataclass(frozen=True)
class QuaternaryPartition:
    """Labels every vertex with one of 1, -1, i, -i."""
    labels: Tuple[Phase, ...]

    @classmethod
    def parse(cls, text: Union[str, Sequence[str]]) -> "QuaternaryPartition":
        items = text.split(",") if isinstance(text, str) else list(text)
        try:
            return cls(tuple(Phase(item.strip()) for item in items))
        except ValueError:
            raise ValueError(f"labels must be among 1, -1, i, -i: {text!r}") from None

    @classmethod
    def uniform(cls, n: int, phase: Phase = Phase.ONE) -> "QuaternaryPartition":
        return cls((phase,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    def part(self, phase: Phase) -> List[int]:
        return [v for v, p in enumerate(self.labels) if p == phase]

    def conjugate(self) -> "QuaternaryPartition":
        return QuaternaryPartition(tuple(p.conjugate() for p in self.labels))

    def __str__(self) -> str:
        return ",".join(p.value for p in self.labels)


@dataclass(frozen=True)
class SwitchStep:
    operation: str
    vertices: Tuple[int, ...]


@dataclass
class SwitchReport:
    input_hd6: str
    output_hd6: str
    operation: str
    parameters: Dict[str, Any]
    charpoly_before: CharPoly
    charpoly_after: CharPoly

    @property
    def cospectral(self) -> bool:
        return self.charpoly_before == self.charpoly_after

    def to_dict(self) -> Dict[str, Any]:
        return {
            "operation": self.operation,
            "parameters": self.parameters,
            "input": self.input_hd6,
            "output": self.output_hd6,
            "charpoly_before": list(self.charpoly_before.coeffs),
            "charpoly_after": list(self.charpoly_after.coeffs),
            "cospectral": self.cospectral,
        }


class CycleForm(Enum):
    C = "C"
    TILDE = "C~"
    TILDE_PRIME = "C~'"
    TILDE_DOUBLE_PRIME = "C~''"
    D = "D"


@dataclass
class CycleNormalForm:
    tag: CycleForm
    representative: Digraph
    witness: List[SwitchStep] = field(default_factory=list)


# ─── Analysis ─────────────────────────────────────────────────────


@dataclass(frozen=True)
class EtaBounds:
    max_digon_free: int
    alpha: int
    eta_plus: int
    eta_minus: int

    @property
    def ok(self) -> bool:
        half = (self.max_digon_free + 1) // 2
        return (
            self.eta_plus >= half
            and self.eta_minus >= half
            and self.eta_plus >= self.alpha
            and self.eta_minus >= self.alpha
        )


@dataclass(frozen=True)
class TournamentBound:
    lambda1: float
    bound: float
    tight: bool
    matches_transitive: bool

    @property
    def ok(self) -> bool:
        return self.lambda1 <= self.bound + 1e-9 and self.tight == self.matches_transitive


@dataclass
class PartitionQuotient:
    partition: Tuple[Tuple[int, ...], ...]
    B: sympy.Matrix
    equitable: bool
    eigenvalues: Tuple[float, ...]


class RadiusKind(Enum):
    POSITIVE_EQUALITY = "positive"
    NEGATIVE_EQUALITY = "negative"
    NO_EQUALITY = "none"


@dataclass(frozen=True)
class RadiusCertificate:
    kind: RadiusKind
    delta: int
    rho: float
    partition: Optional[QuaternaryPartition] = None


@dataclass(frozen=True)
class RadiusInequalities:
    rho: float
    lambda1: float
    rho_underlying: float
    delta: int
    ok: bool


@dataclass(frozen=True)
class SymmetricConditions:
    bipartite: bool
    oriented: bool
    odd_cycle_digon_parity: bool
    spectrum_symmetric: bool


class SmallRadiusTag(Enum):
    PM1 = "PM1"
    LT_SQRT2 = "LT_SQRT2"
    LT_SQRT3 = "LT_SQRT3"
    NONE = "NONE"


@dataclass(frozen=True)
class ClosedFormSpectrum:
    family: str
    params: Tuple[int, ...]
    values: Tuple[float, ...]


@dataclass(frozen=True)
class AllOnesCheck:
    exact: bool
    combinatorial: bool
    eigenvalue: Optional[int]
