"""Structural derivations on digraphs: underlying graph, converse, parts, products."""

import random
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import InvalidVertexSetError
from .models.digraph import FLIP, Digraph, PairState, iter_pairs, pair_count, pair_index


def underlying_graph(X: Digraph) -> nx.Graph:
    """Γ(X): edge {i, j} whenever the pair carries any arc."""
    g = nx.Graph()
    g.add_nodes_from(range(X.n))
    g.add_edges_from(X.edges())
    return g


def converse(X: Digraph) -> Digraph:
    return Digraph(X.n, tuple(FLIP[s] for s in X.pairs))


def symmetric_part(X: Digraph) -> nx.Graph:
    """G(X): the graph formed by the digons."""
    g = nx.Graph()
    g.add_nodes_from(range(X.n))
    g.add_edges_from(X.digons())
    return g


def asymmetric_part(X: Digraph) -> Digraph:
    """D(X): the oriented graph of the arcs that are not in digons."""
    return Digraph(X.n, tuple(0 if s == PairState.DIGON else s for s in X.pairs))


def digraph_of(graph: nx.Graph) -> Digraph:
    return Digraph.from_graph(graph)


def cartesian_product(X: Digraph, Y: Digraph) -> Digraph:
    """X □ Y with vertex (x, y) numbered x * Y.n + y."""
    n = X.n * Y.n
    table = [0] * pair_count(n)
    for (x1, x2), s in zip(iter_pairs(X.n), X.pairs):
        if s:
            for y in range(Y.n):
                table[pair_index(x1 * Y.n + y, x2 * Y.n + y, n)] = s
    for (y1, y2), s in zip(iter_pairs(Y.n), Y.pairs):
        if s:
            for x in range(X.n):
                table[pair_index(x * Y.n + y1, x * Y.n + y2, n)] = s
    return Digraph(n, tuple(table))


def check_vertex_set(X: Digraph, S: Iterable[int]) -> list:
    vertices = sorted(set(S))
    bad = [v for v in vertices if not 0 <= v < X.n]
    if bad:
        raise InvalidVertexSetError(f"vertices {bad} are not in 0..{X.n - 1}")
    return vertices


def induced_subdigraph(X: Digraph, S: Iterable[int]) -> Digraph:
    """Restriction to S, relabeled 0..|S|-1 in increasing vertex order."""
    vertices = check_vertex_set(X, S)
    st = X.state_matrix()
    return Digraph(len(vertices), tuple(st[vertices[p]][vertices[q]] for p, q in iter_pairs(len(vertices))))


def delete_vertex(X: Digraph, v: int) -> Digraph:
    return induced_subdigraph(X, [u for u in range(X.n) if u != v])


def disjoint_union(*parts: Digraph) -> Digraph:
    arcs = []
    offset = 0
    for X in parts:
        arcs.extend((u + offset, v + offset) for u, v in X.arcs())
        offset += X.n
    return Digraph.from_arcs(offset, arcs)


def random_digraph(
    n: int,
    rng: Optional[random.Random] = None,
    weights: Sequence[float] = (0.4, 0.2, 0.2, 0.2),
) -> Digraph:
    """Labeled digraph with i.i.d. pair states drawn with `weights` for NONE/FWD/BWD/DIGON."""
    rng = rng or random.Random()
    return Digraph(n, tuple(rng.choices(range(4), weights=weights, k=pair_count(n))))


def is_weakly_connected(X: Digraph) -> bool:
    return X.n <= 1 or nx.is_connected(underlying_graph(X))


def is_strongly_connected(X: Digraph) -> bool:
    return X.n <= 1 or nx.is_strongly_connected(X.to_networkx())
