"""Spectral inequalities, certificates and characterizations.

Each check computes the combinatorial side and the spectral side
independently. Where a statement is an equivalence or an implication that
always holds, a disagreement raises InvariantViolation; where the result is
a record, callers inspect its `ok` flag.
"""

import itertools
import logging
import math
from collections import deque
from functools import lru_cache
from typing import Dict, Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import sympy

from .closed_forms import transitive_tournament_char_poly
from .codec import canonical_code
from .config import DEFAULT_TOLERANCE
from .digraphs import induced_subdigraph, is_weakly_connected, symmetric_part, underlying_graph
from .errors import (
    DimensionMismatchError,
    EmptyDigraphError,
    HasDigonError,
    InadmissiblePartitionError,
    InvalidPartitionError,
    InvariantViolation,
    NotWeaklyConnectedError,
)
from .families import cycle_reversed_arc
from .hermitian import (
    eigenvalues,
    hermitian_char_poly,
    hermitian_matrix,
    spectral_radius,
    spectrum,
    underlying_adjacency_matrix,
)
from .models.digraph import Digraph, PairState
from .models.spectral import I, NEG_I, ONE, GaussianInt, Spectrum
from .models.structures import (
    EtaBounds,
    PartitionQuotient,
    Phase,
    QuaternaryPartition,
    RadiusCertificate,
    RadiusInequalities,
    RadiusKind,
    SmallRadiusTag,
    SymmetricConditions,
    TournamentBound,
    phase_of,
)
from .polynomials import eta_counts, has_root, is_symmetric_about_zero, roots_within, root_multiplicity
from .sachs import underlying_cycles

logger = logging.getLogger(__name__)


# ─── Interlacing ──────────────────────────────────────────────────


def check_interlacing(parent: Spectrum, child: Spectrum, tol: Optional[float] = None) -> bool:
    """λ_s >= κ_s >= λ_(s+t) for s = 1..n-t, with t = n - m."""
    lam, kap = parent.values(), child.values()
    n, m = len(lam), len(kap)
    if m > n:
        raise DimensionMismatchError(f"child has {m} eigenvalues, parent only {n}")
    slack = tol if tol is not None else 2 * max(parent.tolerance, child.tolerance)
    t = n - m
    return all(lam[s] >= kap[s] - slack and kap[s] >= lam[s + t] - slack for s in range(m))


def eta_bounds_check(X: Digraph) -> EtaBounds:
    """Largest digon-free vertex set and independence number against η⁺, η⁻."""
    if X.n == 0:
        return EtaBounds(0, 0, 0, 0)
    # both are maximum independent sets, found as maximum cliques of complements
    digon_free, _ = nx.max_weight_clique(nx.complement(symmetric_part(X)), weight=None)
    independent, _ = nx.max_weight_clique(nx.complement(underlying_graph(X)), weight=None)
    eta_plus, eta_minus = eta_counts(hermitian_char_poly(X))
    return EtaBounds(
        max_digon_free=len(digon_free),
        alpha=len(independent),
        eta_plus=eta_plus,
        eta_minus=eta_minus,
    )


def tournament_bound_check(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> TournamentBound:
    if not X.is_oriented:
        raise HasDigonError(f"{X!r} has digons {X.digons()}")
    if X.n == 0:
        return TournamentBound(0.0, 0.0, True, True)
    lambda1 = spectrum(X, tol).lambda1
    bound = 1 / math.tan(math.pi / (2 * X.n))
    return TournamentBound(
        lambda1=lambda1,
        bound=bound,
        tight=abs(lambda1 - bound) < tol,
        matches_transitive=hermitian_char_poly(X) == transitive_tournament_char_poly(X.n),
    )


def transitive_subtournament_bound(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> int:
    """Largest m for which an induced T_m (up to switching) is not excluded.

    An induced subdigraph switching equivalent to T_m forces λ₁ >= cot(π/2m).
    """
    lambda1 = spectrum(X, tol).lambda1 if X.n else 0.0
    m = min(X.n, 1)
    while m < X.n and 1 / math.tan(math.pi / (2 * (m + 1))) <= lambda1 + tol:
        m += 1
    return m


# ─── Quotient matrices ────────────────────────────────────────────


def _blocks(X: Digraph, partition: Iterable[Iterable[int]]) -> Tuple[Tuple[int, ...], ...]:
    blocks = tuple(tuple(sorted(set(b))) for b in partition)
    seen = [v for b in blocks for v in b]
    if any(not b for b in blocks):
        raise InvalidPartitionError("empty block")
    if len(seen) != len(set(seen)):
        raise InvalidPartitionError("blocks overlap")
    if sorted(seen) != list(range(X.n)):
        raise InvalidPartitionError(f"blocks do not cover exactly the vertices 0..{X.n - 1}")
    return blocks


def _sympy_entry(g: GaussianInt):
    return sympy.Integer(g.re) + sympy.I * g.im


def quotient(X: Digraph, partition: Iterable[Iterable[int]], tol: float = DEFAULT_TOLERANCE) -> PartitionQuotient:
    """Quotient matrix of average block row sums of H.

    The eigenvalues of B interlace those of H; for an equitable partition
    they are eigenvalues of H with at least the same multiplicity. Both are
    asserted.
    """
    blocks = _blocks(X, partition)
    M = hermitian_matrix(X)
    m = len(blocks)
    sums = [[[sum((M.entry(u, v) for v in blocks[k]), GaussianInt()) for u in blocks[j]] for k in range(m)]
            for j in range(m)]
    B = sympy.Matrix(m, m, lambda j, k: sum((_sympy_entry(s) for s in sums[j][k]), sympy.Integer(0))
                     / len(blocks[j]))
    equitable = all(len(set(sums[j][k])) == 1 for j in range(m) for k in range(m))

    # D^(1/2) B D^(-1/2) is Hermitian, so B has real eigenvalues
    totals = np.array([[complex(sum(sums[j][k], GaussianInt())) for k in range(m)] for j in range(m)])
    scale = np.sqrt(np.array([len(b) for b in blocks], dtype=float))
    quotient_eigs = sorted(np.linalg.eigvalsh(totals / np.outer(scale, scale)).tolist(), reverse=True)

    parent = eigenvalues(M, tol)
    child = Spectrum.from_values(quotient_eigs, tol)
    if not check_interlacing(parent, child, tol=1e-7):
        raise InvariantViolation(f"quotient eigenvalues {quotient_eigs} do not interlace H for {X!r}")
    if equitable:
        values = parent.values()
        for lam, mult in zip(child.eigenvalues, child.multiplicities):
            if sum(1 for x in values if abs(x - lam) < 1e-7) < mult:
                raise InvariantViolation(f"equitable quotient eigenvalue {lam} missing from H for {X!r}")
    return PartitionQuotient(partition=blocks, B=B, equitable=equitable, eigenvalues=tuple(quotient_eigs))


# ─── Spectral radius ──────────────────────────────────────────────


def _forced(kind: RadiusKind, state: PairState, label: Phase) -> Phase:
    """Label of v given the label of u and the state of {u, v} seen from u."""
    g = label.gaussian
    if kind == RadiusKind.POSITIVE_EQUALITY:
        step = {PairState.DIGON: ONE, PairState.FWD: NEG_I, PairState.BWD: I}
    else:
        step = {PairState.DIGON: -ONE, PairState.FWD: I, PairState.BWD: NEG_I}
    return phase_of(g * step[state])


def _propagate(X: Digraph, kind: RadiusKind) -> Optional[QuaternaryPartition]:
    labels: Dict[int, Phase] = {}
    for seed in range(X.n):
        if seed in labels:
            continue
        labels[seed] = Phase.ONE
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for v in X.neighbors(u):
                want = _forced(kind, X.state(u, v), labels[u])
                if v not in labels:
                    labels[v] = want
                    queue.append(v)
                elif labels[v] != want:
                    return None
    return QuaternaryPartition(tuple(labels[v] for v in range(X.n)))


def radius_certificate(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> RadiusCertificate:
    """Decide ρ(X) = Δ(Γ(X)) and certify equality by a quaternary partition.

    Equality with eigenvalue +Δ (resp. -Δ) holds iff Γ(X) is Δ-regular and
    labels forced along the edges are consistent. The exact test is whether
    ±Δ is a root of the characteristic polynomial; both must agree.
    """
    if not is_weakly_connected(X) or X.n == 0:
        raise NotWeaklyConnectedError(f"{X!r} is not weakly connected")
    degrees = X.degree_profile().degree
    delta = max(degrees)
    regular = min(degrees) == delta
    cp = hermitian_char_poly(X)
    rho = spectrum(X, tol).rho
    found = None
    for kind, value in ((RadiusKind.POSITIVE_EQUALITY, delta), (RadiusKind.NEGATIVE_EQUALITY, -delta)):
        partition = _propagate(X, kind) if regular else None
        exact = has_root(cp, value)
        if (partition is not None) != exact:
            raise InvariantViolation(
                f"{kind.value} equality: partition {'found' if partition else 'absent'} but "
                f"{value} {'is' if exact else 'is not'} a root for {X!r}"
            )
        if partition is not None and found is None:
            found = RadiusCertificate(kind=kind, delta=delta, rho=rho, partition=partition)
    if found is None:
        return RadiusCertificate(kind=RadiusKind.NO_EQUALITY, delta=delta, rho=rho)
    if abs(rho - delta) > 1e-7:
        raise InvariantViolation(f"certified ρ = Δ = {delta} but numeric ρ = {rho} for {X!r}")
    return found


def digraph_from_partition(G: nx.Graph, partition: QuaternaryPartition, kind: RadiusKind) -> Digraph:
    """The digraph on G whose edges are the ones forced by the labels.

    Over a Δ-regular G the result has ρ = Δ attained by +Δ or -Δ.
    """
    if kind == RadiusKind.NO_EQUALITY:
        raise ValueError("kind must be an equality kind")
    if sorted(G.nodes()) != list(range(partition.n)):
        raise InvalidPartitionError(f"graph nodes must be 0..{partition.n - 1}")
    sign = 1 if kind == RadiusKind.POSITIVE_EQUALITY else -1
    states = {}
    for u, v in G.edges():
        # H(u, v) x_v = ±x_u
        h = GaussianInt(sign, 0) * partition.labels[u].gaussian * partition.labels[v].gaussian.conjugate()
        if h == GaussianInt(1, 0):
            states[(u, v)] = PairState.DIGON
        elif h == GaussianInt(0, 1):
            states[(u, v)] = PairState.FWD
        elif h == GaussianInt(0, -1):
            states[(u, v)] = PairState.BWD
        else:
            raise InadmissiblePartitionError((u, v), f"labels {partition.labels[u].value}, "
                                                     f"{partition.labels[v].value} force a negative entry")
    return Digraph.from_states(partition.n, states)


def radius_inequalities(X: Digraph, tol: float = DEFAULT_TOLERANCE) -> RadiusInequalities:
    """λ₁ <= ρ <= 3λ₁, ρ(X) <= ρ(Γ(X)) and ρ <= Δ."""
    if X.edge_count == 0:
        raise EmptyDigraphError("digraph has no arcs")
    spec = spectrum(X, tol)
    rho_g = spectral_radius(underlying_adjacency_matrix(X))
    delta = X.degree_profile().max_degree
    slack = 1e-7
    ok = (
        spec.lambda1 <= spec.rho + slack
        and spec.rho <= 3 * spec.lambda1 + slack
        and spec.rho <= rho_g + slack
        and spec.rho <= delta + slack
    )
    return RadiusInequalities(rho=spec.rho, lambda1=spec.lambda1, rho_underlying=rho_g, delta=delta, ok=ok)


# ─── Symmetric spectra ────────────────────────────────────────────


def _digons_on(X: Digraph, cycle: Sequence[int]) -> int:
    return sum(1 for k in range(len(cycle)) if X.is_digon(cycle[k], cycle[(k + 1) % len(cycle)]))


def odd_cycle_digon_parity(X: Digraph) -> bool:
    """Every odd cycle of Γ(X) carries an even number of digons.

    Digon parity is additive over the cycle space, and in a non-bipartite
    block the odd cycles span it, so a cycle basis of each such block
    decides the question.
    """
    g = underlying_graph(X)
    for block in nx.biconnected_components(g):
        sub = g.subgraph(block)
        if len(block) < 3 or nx.is_bipartite(sub):
            continue
        if any(_digons_on(X, cycle) % 2 for cycle in nx.cycle_basis(sub)):
            return False
    return True


def odd_cycle_digon_parity_brute(X: Digraph) -> bool:
    """Same predicate by listing every cycle; for small orders."""
    return all(
        _digons_on(X, c.vertices) % 2 == 0 for c in underlying_cycles(X) if len(c.vertices) % 2
    )


def symmetric_sufficient_conditions(X: Digraph) -> SymmetricConditions:
    result = SymmetricConditions(
        bipartite=nx.is_bipartite(underlying_graph(X)),
        oriented=X.is_oriented,
        odd_cycle_digon_parity=odd_cycle_digon_parity(X),
        spectrum_symmetric=is_symmetric_about_zero(hermitian_char_poly(X)),
    )
    if (result.bipartite or result.oriented or result.odd_cycle_digon_parity) and not result.spectrum_symmetric:
        raise InvariantViolation(f"sufficient condition holds but spectrum is not symmetric for {X!r}")
    return result


# ─── Small spectral radius ────────────────────────────────────────


@lru_cache(maxsize=1)
def c4_tilde_class() -> Tuple[str, ...]:
    """Canonical hd6 codes of the digraphs on Γ = C_4 cospectral with C̃_4.

    Found by running over every state assignment of the four cycle edges.
    """
    target = hermitian_char_poly(cycle_reversed_arc(4))
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    codes = set()
    for states in itertools.product((PairState.FWD, PairState.BWD, PairState.DIGON), repeat=4):
        Y = Digraph.from_states(4, dict(zip(edges, states)))
        if hermitian_char_poly(Y) == target:
            codes.add(canonical_code(Y))
    return tuple(sorted(codes))


def _spectral_tag(X: Digraph) -> SmallRadiusTag:
    cp = hermitian_char_poly(X)
    if root_multiplicity(cp, 1) + root_multiplicity(cp, -1) == X.n:
        return SmallRadiusTag.PM1
    if roots_within(cp, 2):
        return SmallRadiusTag.LT_SQRT2
    if roots_within(cp, 3):
        return SmallRadiusTag.LT_SQRT3
    return SmallRadiusTag.NONE


def _component_below_sqrt3(X: Digraph, g: nx.Graph, nodes) -> bool:
    sub = g.subgraph(nodes)
    k = sub.number_of_nodes()
    degrees = [d for _, d in sub.degree()]
    if sub.number_of_edges() == k - 1 and max(degrees, default=0) <= 2:
        return k <= 4
    if k == 4 and sub.number_of_edges() == 4 and all(d == 2 for d in degrees):
        return canonical_code(induced_subdigraph(X, sorted(nodes))) in c4_tilde_class()
    return False


def _structural_tag(X: Digraph) -> SmallRadiusTag:
    g = underlying_graph(X)
    degrees = [d for _, d in g.degree()]
    if all(d == 1 for d in degrees):
        return SmallRadiusTag.PM1
    if max(degrees, default=0) <= 1:
        return SmallRadiusTag.LT_SQRT2
    if all(_component_below_sqrt3(X, g, c) for c in nx.connected_components(g)):
        return SmallRadiusTag.LT_SQRT3
    return SmallRadiusTag.NONE


def classify_small_radius(X: Digraph) -> SmallRadiusTag:
    """PM1: every eigenvalue is ±1. LT_SQRT2 / LT_SQRT3: all eigenvalues lie
    strictly inside (-√2, √2) / (-√3, √3). The first matching tag wins.
    """
    spectral = _spectral_tag(X)
    structural = _structural_tag(X)
    if spectral != structural:
        raise InvariantViolation(
            f"small-radius classification disagrees: spectrum says {spectral.value}, "
            f"structure says {structural.value} for {X!r}"
        )
    return spectral
