"""Digraph value types.

A digraph on vertices 0..n-1 is stored as a pair-state table: one entry per
unordered pair {i, j} with i < j, in the order (0,1), (0,2), ..., (0,n-1),
(1,2), ...  Each entry is a PairState.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ..errors import InvalidDigraphError, InvalidVertexSetError


class PairState(IntEnum):
    NONE = 0
    FWD = 1  # arc i -> j for i < j
    BWD = 2  # arc j -> i for i < j
    DIGON = 3

    def flipped(self) -> "PairState":
        return PairState(FLIP[self])


# FWD <-> BWD, NONE and DIGON fixed
FLIP = (0, 2, 1, 3)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int, n: int) -> int:
    """Position of the pair {i, j} (i < j) in the pair-state table."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def iter_pairs(n: int) -> Iterable[Tuple[int, int]]:
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree in the underlying graph, in-degree and out-degree."""
    degree: Tuple[int, ...]
    in_degree: Tuple[int, ...]
    out_degree: Tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    @property
    def max_in_degree(self) -> int:
        return max(self.in_degree, default=0)

    @property
    def max_out_degree(self) -> int:
        return max(self.out_degree, default=0)


@dataclass(frozen=True)
class Digraph:
    """Immutable simple loopless digraph on vertices 0..n-1."""
    n: int
    pairs: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidDigraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.pairs) != pair_count(self.n):
            raise InvalidDigraphError(
                f"expected {pair_count(self.n)} pair states for n={self.n}, got {len(self.pairs)}"
            )
        if any(s not in (0, 1, 2, 3) for s in self.pairs):
            raise InvalidDigraphError("pair states must be in 0..3")
        # normalise to plain ints so equal digraphs hash equally
        object.__setattr__(self, "pairs", tuple(int(s) for s in self.pairs))

    # ─── Constructors ─────────────────────────────────────────────

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * pair_count(n))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Digraph":
        """Build from ordered arcs. Adding both (u, v) and (v, u) makes a digon."""
        table = [0] * pair_count(n)
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise InvalidDigraphError(f"self-loop at vertex {u}")
            if u < v:
                table[pair_index(u, v, n)] |= PairState.FWD
            else:
                table[pair_index(v, u, n)] |= PairState.BWD
        return cls(n, tuple(table))

    @classmethod
    def from_states(cls, n: int, states: Dict[Tuple[int, int], PairState]) -> "Digraph":
        """Build from a map (u, v) -> state as seen from u towards v."""
        table = [0] * pair_count(n)
        for (u, v), s in states.items():
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise InvalidDigraphError(f"self-loop at vertex {u}")
            if u < v:
                table[pair_index(u, v, n)] = int(s)
            else:
                table[pair_index(v, u, n)] = FLIP[s]
        return cls(n, tuple(table))

    @classmethod
    def from_graph(cls, graph: nx.Graph) -> "Digraph":
        """Digraph of a graph: every edge becomes a digon.

        Nodes are relabeled 0..n-1 in sorted order.
        """
        nodes = sorted(graph.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        n = len(nodes)
        table = [0] * pair_count(n)
        for a, b in graph.edges():
            u, v = sorted((index[a], index[b]))
            if u == v:
                raise InvalidDigraphError(f"self-loop at vertex {a}")
            table[pair_index(u, v, n)] = PairState.DIGON
        return cls(n, tuple(table))

    # ─── Queries ──────────────────────────────────────────────────

    def state(self, u: int, v: int) -> PairState:
        """State of the pair {u, v} seen from u: FWD means the single arc u -> v."""
        if u == v:
            return PairState.NONE
        if u < v:
            return PairState(self.pairs[pair_index(u, v, self.n)])
        return PairState(FLIP[self.pairs[pair_index(v, u, self.n)]])

    def has_arc(self, u: int, v: int) -> bool:
        return self.state(u, v) in (PairState.FWD, PairState.DIGON)

    def is_digon(self, u: int, v: int) -> bool:
        return self.state(u, v) == PairState.DIGON

    def arcs(self) -> List[Tuple[int, int]]:
        out = []
        for (i, j), s in zip(iter_pairs(self.n), self.pairs):
            if s & PairState.FWD:
                out.append((i, j))
            if s & PairState.BWD:
                out.append((j, i))
        return sorted(out)

    def edges(self) -> List[Tuple[int, int]]:
        return [p for p, s in zip(iter_pairs(self.n), self.pairs) if s]

    def digons(self) -> List[Tuple[int, int]]:
        return [p for p, s in zip(iter_pairs(self.n), self.pairs) if s == PairState.DIGON]

    def single_arcs(self) -> List[Tuple[int, int]]:
        """Arcs that are not part of a digon, as ordered pairs."""
        out = []
        for (i, j), s in zip(iter_pairs(self.n), self.pairs):
            if s == PairState.FWD:
                out.append((i, j))
            elif s == PairState.BWD:
                out.append((j, i))
        return sorted(out)

    def neighbors(self, u: int) -> List[int]:
        return [v for v in range(self.n) if v != u and self.state(u, v)]

    @property
    def arc_count(self) -> int:
        return sum(2 if s == PairState.DIGON else 1 for s in self.pairs if s)

    @property
    def edge_count(self) -> int:
        return sum(1 for s in self.pairs if s)

    @property
    def is_oriented(self) -> bool:
        return PairState.DIGON not in self.pairs

    @property
    def is_graph(self) -> bool:
        """True when every edge is a digon. The edgeless digraph counts."""
        return all(s in (PairState.NONE, PairState.DIGON) for s in self.pairs)

    def degree_profile(self) -> DegreeProfile:
        deg = [0] * self.n
        ind = [0] * self.n
        outd = [0] * self.n
        for (i, j), s in zip(iter_pairs(self.n), self.pairs):
            if not s:
                continue
            deg[i] += 1
            deg[j] += 1
            if s & PairState.FWD:
                outd[i] += 1
                ind[j] += 1
            if s & PairState.BWD:
                outd[j] += 1
                ind[i] += 1
        return DegreeProfile(tuple(deg), tuple(ind), tuple(outd))

    def state_matrix(self) -> List[List[int]]:
        """Dense n×n table of oriented states; row u, column v is state(u, v)."""
        st = [[0] * self.n for _ in range(self.n)]
        for (i, j), s in zip(iter_pairs(self.n), self.pairs):
            st[i][j] = s
            st[j][i] = FLIP[s]
        return st

    # ─── Derivations ──────────────────────────────────────────────

    def with_states(self, updates: Dict[Tuple[int, int], PairState]) -> "Digraph":
        """Copy with some pair states replaced; keys are (u, v) seen from u."""
        table = list(self.pairs)
        for (u, v), s in updates.items():
            if u == v:
                raise InvalidDigraphError(f"self-loop at vertex {u}")
            if u < v:
                table[pair_index(u, v, self.n)] = int(s)
            else:
                table[pair_index(v, u, self.n)] = FLIP[s]
        return Digraph(self.n, tuple(table))

    def relabel(self, order: Sequence[int]) -> "Digraph":
        """New digraph whose vertex p is the old vertex order[p]."""
        if sorted(order) != list(range(self.n)):
            raise InvalidVertexSetError(f"{list(order)} is not a permutation of 0..{self.n - 1}")
        st = self.state_matrix()
        table = tuple(st[order[p]][order[q]] for p, q in iter_pairs(self.n))
        return Digraph(self.n, table)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs())
        return g

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise InvalidVertexSetError(f"vertex {v} outside 0..{n - 1}")
