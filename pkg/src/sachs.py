"""Characteristic polynomial coefficients from basic subgraphs.

A basic subgraph is a vertex-disjoint union of edges and cycles of Γ(X),
where a cycle only qualifies if it carries an even number of single arcs.
Its contribution to c_j (order n - j) is (-1)^(r + p) 2^c with c the number
of cycles, p the number of components and r the sum over cycles of
|f - b| / 2, f and b counting single arcs traversed forwards and backwards.

Exponential by nature: practical up to n = 16, exercised up to n = 8.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .codec import canonical_code
from .digraphs import induced_subdigraph
from .errors import InvariantViolation
from .families import x_ab
from .hermitian import hermitian_matrix, trace_power
from .models.digraph import Digraph, PairState
from .models.structures import BasicSubgraph, Component, Cycle, Edge, TraceIdentities, TriangleCensus

logger = logging.getLogger(__name__)


def underlying_cycles(X: Digraph) -> Iterator[Cycle]:
    """Every cycle of Γ(X) once: starting at its least vertex, second vertex < last."""
    adj = [sorted(X.neighbors(u)) for u in range(X.n)]

    def extend(start: int, path: List[int], on_path: set) -> Iterator[Cycle]:
        for w in adj[path[-1]]:
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    yield Cycle(tuple(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from extend(start, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(X.n):
        yield from extend(s, [s], {s})


def arc_balance(X: Digraph, cycle: Cycle) -> Tuple[int, int]:
    """(f, b): single arcs traversed forwards / backwards along the cycle."""
    f = b = 0
    for u, v in cycle.steps():
        s = X.state(u, v)
        if s == PairState.FWD:
            f += 1
        elif s == PairState.BWD:
            b += 1
    return f, b


def is_admissible_cycle(X: Digraph, cycle: Cycle) -> bool:
    f, b = arc_balance(X, cycle)
    return (f + b) % 2 == 0


def cycle_r(X: Digraph, cycle: Cycle) -> int:
    f, b = arc_balance(X, cycle)
    if (f - b) % 2:
        raise InvariantViolation(f"cycle {cycle.vertices} has an odd number of single arcs")
    return abs(f - b) // 2


def _components(X: Digraph) -> List[Tuple[frozenset, Component]]:
    items: List[Tuple[frozenset, Component]] = [(frozenset((u, v)), Edge(u, v)) for u, v in X.edges()]
    items.extend((frozenset(c.vertices), c) for c in underlying_cycles(X) if is_admissible_cycle(X, c))
    return items


def _unions(items, start: int, remaining: int, used: frozenset, chosen: list) -> Iterator[BasicSubgraph]:
    if remaining == 0:
        yield BasicSubgraph(tuple(chosen))
        return
    for k in range(start, len(items)):
        verts, comp = items[k]
        if len(verts) <= remaining and not (verts & used):
            chosen.append(comp)
            yield from _unions(items, k + 1, remaining - len(verts), used | verts, chosen)
            chosen.pop()


def basic_subgraphs(X: Digraph, order: int) -> Iterator[BasicSubgraph]:
    if not 0 <= order <= X.n:
        raise ValueError(f"order must be in 0..{X.n}, got {order}")
    yield from _unions(_components(X), 0, order, frozenset(), [])


def _contribution(X: Digraph, B: BasicSubgraph) -> int:
    cycles = [c for c in B.components if isinstance(c, Cycle)]
    r = sum(cycle_r(X, c) for c in cycles) % 2
    r_flipped = sum(cycle_r(X, c.reversed()) for c in cycles) % 2
    if r != r_flipped:
        raise InvariantViolation(f"r(B) depends on cycle orientation for {B}")
    sign = -1 if (r + len(B.components)) % 2 else 1
    return sign * 2 ** len(cycles)


def sachs_coefficient(X: Digraph, j: int) -> int:
    if not 0 <= j <= X.n:
        raise ValueError(f"coefficient index must be in 0..{X.n}, got {j}")
    return sum(_contribution(X, B) for B in basic_subgraphs(X, X.n - j))


def sachs_coefficients(X: Digraph) -> Tuple[int, ...]:
    """All of c_0..c_n in one enumeration pass."""
    totals: Dict[int, int] = {0: 1}
    items = _components(X)
    for order in range(1, X.n + 1):
        totals[order] = sum(_contribution(X, B) for B in _unions(items, 0, order, frozenset(), []))
    return tuple(totals[X.n - j] for j in range(X.n + 1))


# ─── Triangles and traces ─────────────────────────────────────────


@lru_cache(maxsize=1)
def _triangle_types() -> Dict[str, int]:
    digon = [(0, 1), (1, 0)]
    refs = {
        1: x_ab(1, 1),
        2: Digraph.from_arcs(3, digon + [(0, 2), (1, 2)]),
        3: Digraph.from_arcs(3, digon + [(2, 0), (2, 1)]),
        4: Digraph.from_arcs(3, digon + [(1, 2), (2, 1), (0, 2), (2, 0)]),
    }
    return {canonical_code(ref): k for k, ref in refs.items()}


def triangle_census(X: Digraph) -> TriangleCensus:
    types = _triangle_types()
    counts = {1: 0, 2: 0, 3: 0, 4: 0}
    for tri in itertools.combinations(range(X.n), 3):
        a, b, c = tri
        if X.state(a, b) and X.state(b, c) and X.state(a, c):
            kind = types.get(canonical_code(induced_subdigraph(X, tri)))
            if kind:
                counts[kind] += 1
    return TriangleCensus(counts[1], counts[2], counts[3], counts[4])


def trace_identities(X: Digraph) -> TraceIdentities:
    M = hermitian_matrix(X)
    return TraceIdentities(
        tr1=trace_power(M, 1),
        tr2=trace_power(M, 2),
        tr3=trace_power(M, 3),
        edges=X.edge_count,
        census=triangle_census(X),
    )
