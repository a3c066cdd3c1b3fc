"""Spectrum-preserving transformations and cospectral-class constructions."""

import logging
from typing import Iterable, List, Sequence

import networkx as nx

from .digraphs import check_vertex_set, converse, underlying_graph
from .errors import (
    DigonInCutError,
    InadmissiblePartitionError,
    InvalidPartitionError,
    InvalidVertexSetError,
    InvariantViolation,
    NonDigonInCutError,
    UnderlyingNotCycleError,
)
from .families import (
    cycle_one_digon,
    cycle_reversed_arc,
    cycle_reversed_then_digon,
    directed_cycle,
    family,
    y_ab,
)
from .hermitian import hermitian_char_poly, hermitian_matrix
from .models.digraph import FLIP, Digraph, PairState, iter_pairs
from .models.spectral import GaussianInt
from .models.structures import CycleForm, CycleNormalForm, QuaternaryPartition, SwitchStep

logger = logging.getLogger(__name__)

LOCAL_REVERSAL = "local-reversal"
DIGON_CUT = "digon-cut"
FOUR_WAY = "four-way"
CONVERSE = "converse"


def _cut(X: Digraph, S: Iterable[int]):
    inside = set(check_vertex_set(X, S))
    return [
        (i, j, s)
        for (i, j), s in zip(iter_pairs(X.n), X.pairs)
        if s and ((i in inside) != (j in inside))
    ], inside


def local_reversal(X: Digraph, S: Iterable[int]) -> Digraph:
    """Reverse every arc with exactly one end in S. The cut must carry no digons."""
    cut, _ = _cut(X, S)
    digons = [(i, j) for i, j, s in cut if s == PairState.DIGON]
    if digons:
        raise DigonInCutError(digons)
    table = list(X.pairs)
    pos = {p: k for k, p in enumerate(iter_pairs(X.n))}
    for i, j, s in cut:
        table[pos[(i, j)]] = FLIP[s]
    return Digraph(X.n, tuple(table))


def digon_cut_replace(X: Digraph, S: Iterable[int]) -> Digraph:
    """Replace every cut digon {x, y}, x outside S, by the arc x -> y.

    Every pair of the cut must be a digon.
    """
    cut, inside = _cut(X, S)
    bad = [(i, j) for i, j, s in cut if s != PairState.DIGON]
    if bad:
        raise NonDigonInCutError(bad)
    updates = {}
    for i, j, _ in cut:
        x, y = (j, i) if i in inside else (i, j)
        updates[(x, y)] = PairState.FWD
    return X.with_states(updates)


def bridge_digon_replace(X: Digraph, u: int, v: int) -> Digraph:
    """Turn the digon {u, v}, a bridge of Γ(X), into the single arc u -> v."""
    if not X.is_digon(u, v):
        raise NonDigonInCutError([(min(u, v), max(u, v))])
    g = underlying_graph(X)
    g.remove_edge(u, v)
    if nx.has_path(g, u, v):
        raise InvalidVertexSetError(f"{u}-{v} is not a bridge of the underlying graph")
    return digon_cut_replace(X, nx.node_connected_component(g, v))


# ─── Four-way switching ───────────────────────────────────────────

_FROM_ENTRY = {
    (1, 0): PairState.DIGON,
    (0, 1): PairState.FWD,
    (0, -1): PairState.BWD,
}


def _check_partition(X: Digraph, P: QuaternaryPartition) -> None:
    if P.n != X.n:
        raise InvalidPartitionError(f"partition labels {P.n} vertices, digraph has {X.n}")


def four_way_switch(X: Digraph, P: QuaternaryPartition) -> Digraph:
    """Decode H' = S^-1 H S, S = diag(labels), back into a digraph.

    An entry -1 in H' means the partition is not admissible.
    """
    _check_partition(X, P)
    M = hermitian_matrix(X)
    table = []
    for (u, v), s in zip(iter_pairs(X.n), X.pairs):
        if not s:
            table.append(0)
            continue
        su, sv = P.labels[u].gaussian, P.labels[v].gaussian
        h = M.entry(u, v) * sv * su.conjugate()
        if h == GaussianInt(-1, 0):
            kind = "digon" if s == PairState.DIGON else "single arc"
            types = f"({P.labels[u].value},{P.labels[v].value})"
            if s == PairState.BWD:
                types = f"({P.labels[v].value},{P.labels[u].value})"
            raise InadmissiblePartitionError((u, v), f"{kind} of type {types}")
        table.append(_FROM_ENTRY[(h.re, h.im)])
    return Digraph(X.n, tuple(table))


_REVERSED_TYPES = {("1", "-1"), ("-1", "1"), ("i", "-i"), ("-i", "i")}
_FORBIDDEN_ARC_TYPES = {("1", "i"), ("i", "-1"), ("-1", "-i"), ("-i", "1")}
_DIGON_TYPES = {("1", "-i"), ("-1", "i"), ("i", "1"), ("-i", "-1")}
# digon {x, y} -> arc tail -> head, by part labels
_DIGON_TO_ARC = {
    frozenset({"1", "i"}): ("1", "i"),
    frozenset({"-1", "-i"}): ("-1", "-i"),
    frozenset({"1", "-i"}): ("-i", "1"),
    frozenset({"-1", "i"}): ("i", "-1"),
}


def four_way_by_rules(X: Digraph, P: QuaternaryPartition) -> Digraph:
    """Four-way switching applied through the explicit rule list.

    Used as an oracle for four_way_switch.
    """
    _check_partition(X, P)
    lab = [p.value for p in P.labels]
    updates = {}
    for (u, v), s in zip(iter_pairs(X.n), X.pairs):
        if not s or lab[u] == lab[v]:
            continue
        if s == PairState.DIGON:
            kinds = frozenset({lab[u], lab[v]})
            if kinds in ({"1", "-1"}, {"i", "-i"}):
                raise InadmissiblePartitionError((u, v), f"digon of type ({lab[u]},{lab[v]})")
            tail, _ = _DIGON_TO_ARC[kinds]
            updates[(u, v)] = PairState.FWD if lab[u] == tail else PairState.BWD
            continue
        x, y = (u, v) if s == PairState.FWD else (v, u)
        kind = (lab[x], lab[y])
        if kind in _FORBIDDEN_ARC_TYPES:
            raise InadmissiblePartitionError((u, v), f"single arc of type ({kind[0]},{kind[1]})")
        if kind in _REVERSED_TYPES:
            updates[(x, y)] = PairState.BWD
        elif kind in _DIGON_TYPES:
            updates[(x, y)] = PairState.DIGON
    return X.with_states(updates)


def is_admissible(X: Digraph, P: QuaternaryPartition) -> bool:
    try:
        four_way_switch(X, P)
    except InadmissiblePartitionError:
        return False
    return True


# ─── Cospectral classes ───────────────────────────────────────────


def kn_cospectral_class(n: int) -> List[Digraph]:
    """D(K_n) followed by Y(1, n-1), ..., Y(n-1, 1)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return [family("K", n)] + [y_ab(a, n - a) for a in range(1, n)]


# ─── Cycle normal form ────────────────────────────────────────────


def _cycle_order(X: Digraph) -> List[int]:
    g = underlying_graph(X)
    if X.n < 3 or any(d != 2 for _, d in g.degree()) or not nx.is_connected(g):
        raise UnderlyingNotCycleError(f"underlying graph of {X!r} is not a cycle")
    order = [0]
    prev, cur = None, 0
    for _ in range(X.n - 1):
        nxt = min(w for w in g.neighbors(cur) if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _apply(Y: Digraph, step: SwitchStep) -> Digraph:
    if step.operation == LOCAL_REVERSAL:
        return local_reversal(Y, step.vertices)
    if step.operation == DIGON_CUT:
        return digon_cut_replace(Y, step.vertices)
    if step.operation == CONVERSE:
        return converse(Y)
    raise ValueError(f"unknown witness step {step.operation!r}")


def replay_witness(X: Digraph, steps: Sequence[SwitchStep]) -> Digraph:
    Y = X
    for step in steps:
        Y = _apply(Y, step)
    return Y


def cycle_form_candidates(n: int):
    """Named representatives in tag preference order.

    The directed cycle is listed last: for n = 2 mod 4 its class is not
    represented by any of the other four.
    """
    return [
        (CycleForm.C, family("C", n)),
        (CycleForm.TILDE, cycle_reversed_arc(n)),
        (CycleForm.TILDE_PRIME, cycle_one_digon(n)),
        (CycleForm.TILDE_DOUBLE_PRIME, cycle_reversed_then_digon(n)),
        (CycleForm.D, directed_cycle(n)),
    ]


def cycle_normal_form(X: Digraph) -> CycleNormalForm:
    """Switch a digraph with Γ(X) = C_n to a normal representative.

    Pairs of digons are removed by digon cuts, then a sweep of local
    reversals along the cycle makes every single arc point forward except
    possibly the last one before the closing pair. The tag names the
    candidate family with the same characteristic polynomial.
    """
    order = _cycle_order(X)
    n = X.n
    steps: List[SwitchStep] = []
    Y = X

    def run(step: SwitchStep) -> None:
        nonlocal Y
        Y = _apply(Y, step)
        steps.append(step)

    def digon_edges() -> List[int]:
        return [k for k in range(n) if Y.is_digon(order[k], order[(k + 1) % n])]

    positions = digon_edges()
    while len(positions) >= 2:
        p, q = positions[0], positions[1]
        run(SwitchStep(DIGON_CUT, tuple(sorted(order[p + 1:q + 1]))))
        positions = digon_edges()

    if positions:
        p = positions[0]
        order = order[p + 1:] + order[:p + 1]  # digon becomes the closing pair
        last = n - 2
    else:
        last = n - 1
    for j in range(1, last + 1):
        if Y.state(order[j], order[j - 1]) == PairState.FWD:
            run(SwitchStep(LOCAL_REVERSAL, (order[j],)))
    if not positions and n % 2 and Y.state(order[0], order[n - 1]) == PairState.FWD:
        # odd orientations: flip every edge but the closing one to get D_n
        run(SwitchStep(LOCAL_REVERSAL, tuple(sorted(order[1:n - 1:2]))))

    target = hermitian_char_poly(X)
    if hermitian_char_poly(Y) != target:
        raise InvariantViolation(f"cycle normalisation changed the spectrum of {X!r}")
    for tag, rep in cycle_form_candidates(n):
        if hermitian_char_poly(rep) == target:
            logger.debug("cycle normal form %s after %d steps", tag.value, len(steps))
            return CycleNormalForm(tag=tag, representative=Y, witness=steps)
    raise InvariantViolation(f"no cycle family is cospectral with {X!r}")


