"""Constructors for the named digraph families.

Vertex numbering is fixed so encodings are reproducible:

  D(n)          directed cycle i -> i+1 (mod n)
  Ctilde(n)     D(n) with the closing arc n-1 -> 0 reversed to 0 -> n-1
  Ctilde_prime(n)   D(n) with the closing arc n-1 -> 0 made a digon
  Ctilde_dprime(n)  D(n) with n-2 -> n-1 reversed and {n-1, 0} a digon
  Necklace(n)   v_j = j (0 <= j < 2n) on the directed 2n-cycle, w_k = 2n + k
                with arcs v_2k -> w_k and v_(2k+2 mod 2n) -> w_k
  X_ab(a, b)    x_j = j, y_j = a + j (digon x_j y_j), z_l = 2a + l,
                arcs x_j -> z_l and z_l -> y_j
  Y(a, b)       D(K_a) on 0..a-1, D(K_b) on a..a+b-1, every arc from the
                first block to the second
  K3prime       X(1, 1)
  K4prime       digons {0,1}, {2,3}; arcs 0->2, 2->1, 1->3, 3->0
  T(n)          transitive tournament i -> j for i < j
  K, C, P, Star digraphs of K_n, C_n, P_n and K_{1,k} (centre 0)
  Empty(n)      no arcs
  SymNotBip     0->1, 1->2, 0->3, 1->3, 2->0 and the digon {2,3}
"""

from enum import Enum
from typing import Callable, Dict, List, Sequence, Tuple, Union

import networkx as nx

from .errors import FamilyParameterError, UnknownFamilyError
from .models.digraph import Digraph


class FamilyId(Enum):
    D = "D"
    CTILDE = "Ctilde"
    CTILDE_PRIME = "Ctilde_prime"
    CTILDE_DPRIME = "Ctilde_dprime"
    NECKLACE = "Necklace"
    X_AB = "X_ab"
    Y = "Y"
    K3PRIME = "K3prime"
    K4PRIME = "K4prime"
    T = "T"
    K = "K"
    C = "C"
    P = "P"
    STAR = "Star"
    EMPTY = "Empty"
    SYM_NOT_BIP = "SymNotBip"


Arc = Tuple[int, int]


def _digon(u: int, v: int) -> List[Arc]:
    return [(u, v), (v, u)]


def _cycle_arcs(n: int) -> List[Arc]:
    return [(i, (i + 1) % n) for i in range(n)]


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, _cycle_arcs(n))


def cycle_reversed_arc(n: int) -> Digraph:
    arcs = _cycle_arcs(n)[:-1] + [(0, n - 1)]
    return Digraph.from_arcs(n, arcs)


def cycle_one_digon(n: int) -> Digraph:
    return Digraph.from_arcs(n, _cycle_arcs(n)[:-1] + _digon(n - 1, 0))


def cycle_reversed_then_digon(n: int) -> Digraph:
    arcs = _cycle_arcs(n)[:-2] + [(n - 1, n - 2)] + _digon(n - 1, 0)
    return Digraph.from_arcs(n, arcs)


def necklace(n: int) -> Digraph:
    m = 2 * n
    arcs = [(j, (j + 1) % m) for j in range(m)]
    for k in range(n):
        w = m + k
        arcs.append((2 * k, w))
        arcs.append(((2 * k + 2) % m, w))
    return Digraph.from_arcs(3 * n, arcs)


def x_ab(a: int, b: int) -> Digraph:
    arcs: List[Arc] = []
    for j in range(a):
        x, y = j, a + j
        arcs.extend(_digon(x, y))
        for k in range(b):
            z = 2 * a + k
            arcs.append((x, z))
            arcs.append((z, y))
    return Digraph.from_arcs(2 * a + b, arcs)


def y_ab(a: int, b: int) -> Digraph:
    arcs: List[Arc] = []
    for u in range(a + b):
        for v in range(u + 1, a + b):
            if (u < a) == (v < a):
                arcs.extend(_digon(u, v))
            else:
                arcs.append((u, v))
    return Digraph.from_arcs(a + b, arcs)


def k4_prime() -> Digraph:
    return Digraph.from_arcs(4, _digon(0, 1) + _digon(2, 3) + [(0, 2), (2, 1), (1, 3), (3, 0)])


def transitive_tournament(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def sym_not_bip() -> Digraph:
    return Digraph.from_arcs(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 0)] + _digon(2, 3))


def _need(name: str, params: Sequence[int], count: int, minimum: Sequence[int]) -> None:
    if len(params) != count:
        raise FamilyParameterError(f"{name} takes {count} parameter(s), got {len(params)}")
    for p, lo in zip(params, minimum):
        if not isinstance(p, int) or p < lo:
            raise FamilyParameterError(f"{name} parameters must be integers >= {list(minimum)}, got {list(params)}")


# name -> (parameter count, minimum values, builder)
_BUILDERS: Dict[FamilyId, Tuple[int, Tuple[int, ...], Callable[..., Digraph]]] = {
    FamilyId.D: (1, (3,), directed_cycle),
    FamilyId.CTILDE: (1, (3,), cycle_reversed_arc),
    FamilyId.CTILDE_PRIME: (1, (3,), cycle_one_digon),
    FamilyId.CTILDE_DPRIME: (1, (3,), cycle_reversed_then_digon),
    FamilyId.NECKLACE: (1, (3,), necklace),
    FamilyId.X_AB: (2, (1, 1), x_ab),
    FamilyId.Y: (2, (1, 1), y_ab),
    FamilyId.K3PRIME: (0, (), lambda: x_ab(1, 1)),
    FamilyId.K4PRIME: (0, (), k4_prime),
    FamilyId.T: (1, (1,), transitive_tournament),
    FamilyId.K: (1, (1,), lambda n: Digraph.from_graph(nx.complete_graph(n))),
    FamilyId.C: (1, (3,), lambda n: Digraph.from_graph(nx.cycle_graph(n))),
    FamilyId.P: (1, (1,), lambda n: Digraph.from_graph(nx.path_graph(n))),
    FamilyId.STAR: (1, (0,), lambda k: Digraph.from_graph(nx.star_graph(k))),
    FamilyId.EMPTY: (1, (0,), Digraph.empty),
    FamilyId.SYM_NOT_BIP: (0, (), sym_not_bip),
}

_ALIASES = {
    "Ct": FamilyId.CTILDE,
    "K3'": FamilyId.K3PRIME,
    "K4'": FamilyId.K4PRIME,
    "N": FamilyId.NECKLACE,
    "X": FamilyId.X_AB,
}


def family_id(name: Union[str, FamilyId]) -> FamilyId:
    if isinstance(name, FamilyId):
        return name
    if name in _ALIASES:
        return _ALIASES[name]
    for fid in FamilyId:
        if fid.value.lower() == name.lower():
            return fid
    known = ", ".join(f.value for f in FamilyId)
    raise UnknownFamilyError(f"unknown family {name!r}; known: {known}")


def family(name: Union[str, FamilyId], *params: int) -> Digraph:
    fid = family_id(name)
    count, minimum, builder = _BUILDERS[fid]
    _need(fid.value, params, count, minimum)
    return builder(*params)
