"""Isomorph-free generation of all digraphs of small order and the cospectral census.

Generation follows the canonical construction path: a digraph of order k is
extended by one vertex in all 4^k ways and a child is kept only when
deleting its canonically last vertex gives back the parent class. Every
class of order k + 1 is then produced from exactly one parent, so parents
can be handed to independent worker processes.
"""

import dataclasses
import itertools
import logging
from collections import defaultdict
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from .analysis import c4_tilde_class
from .codec import canonical_code, canonical_labeling, decode, encode, vertex_cells
from .digraphs import converse, is_strongly_connected, is_weakly_connected, underlying_graph
from .errors import InvariantViolation, UnsupportedOrderError
from .families import family
from .hermitian import adjacency_char_poly, hermitian_char_poly
from .models.census import Census, CensusRow, ClassificationReport, CospectralClass
from .models.digraph import FLIP, Digraph
from .models.spectral import CharPoly
from .polynomials import from_roots, is_irreducible, is_squarefree
from .storage.census_store import CensusStore, StoredClasses
from .switching import cycle_normal_form, kn_cospectral_class, replay_witness

logger = logging.getLogger(__name__)

MAX_ORDER = 7
LARGE_ORDER = 6
MATRICES = ("H", "A")
STORE_BATCH = 10000

# (order, digraphs found) after each generation level
LevelCallback = Callable[[int, int], None]

Code = Tuple[int, ...]


# ─── Generation ───────────────────────────────────────────────────


def _extend(job: Tuple[int, Code]) -> List[Code]:
    """Accepted children of one canonical parent of order m."""
    m, parent = job
    n = m + 1
    base = Digraph(m, parent).state_matrix()
    seen: Dict[Code, bool] = {}
    accepted = []
    for row in itertools.product(range(4), repeat=m):
        st = [base[i] + [row[i]] for i in range(m)]
        st.append([FLIP[s] for s in row] + [0])
        # the canonically last vertex always lies in the last invariant cell
        if m not in vertex_cells(st, n)[-1]:
            continue
        code, order = canonical_labeling(st, n)
        if code in seen:
            continue
        keep = [v for v in range(n) if v != order[-1]]
        reduced = [[st[a][b] for b in keep] for a in keep]
        ok = canonical_labeling(reduced, m)[0] == parent
        seen[code] = ok
        if ok:
            accepted.append(code)
    return accepted


def _check_order(n: int, large: bool) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise UnsupportedOrderError(f"generation supports 1 <= n <= {MAX_ORDER}, got {n}")
    if n >= LARGE_ORDER and not large:
        raise UnsupportedOrderError(f"n = {n} is a large run; pass large=True (--large)")


def _expand(level: Sequence[Code], m: int, jobs: int, progress: bool) -> Iterator[List[Code]]:
    """Children of each parent of order m, one batch per parent in parent order."""
    work = [(m, parent) for parent in level]
    with tqdm(total=len(work), desc=f"order {m + 1}", disable=not progress) as bar:
        if jobs > 1 and len(work) > 1:
            with Pool(processes=jobs) as pool:
                for batch in pool.imap(_extend, work, chunksize=max(1, len(work) // (jobs * 8))):
                    bar.update()
                    yield batch
        else:
            for job in work:
                bar.update()
                yield _extend(job)


def generate_codes(
    n: int,
    jobs: int = 1,
    progress: bool = False,
    large: bool = False,
    on_level: Optional[LevelCallback] = None,
) -> List[Code]:
    """Canonical pair-state tuples of every digraph of order n, sorted."""
    _check_order(n, large)
    level: List[Code] = [()]
    for m in range(1, n):
        children = [code for batch in _expand(level, m, jobs, progress) for code in batch]
        children.sort()
        if any(a == b for a, b in zip(children, children[1:])):
            raise InvariantViolation(f"order {m + 1}: a class was generated from two parents")
        level = children
        logger.info("order %d: %d digraphs", m + 1, len(level))
        if on_level:
            on_level(m + 1, len(level))
    return level


def iter_codes(
    n: int,
    jobs: int = 1,
    progress: bool = False,
    large: bool = False,
    on_level: Optional[LevelCallback] = None,
) -> Iterator[Code]:
    """Canonical codes of order n streamed parent by parent, not sorted.

    Only the order n - 1 level is held in memory.
    """
    _check_order(n, large)
    if n == 1:
        yield ()
        return
    parents = generate_codes(n - 1, jobs=jobs, progress=progress, large=large, on_level=on_level)
    count = 0
    for batch in _expand(parents, n - 1, jobs, progress):
        count += len(batch)
        yield from batch
    logger.info("order %d: %d digraphs", n, count)
    if on_level:
        on_level(n, count)


def generate_nonisomorphic(n: int, jobs: int = 1, progress: bool = False, large: bool = False,
                           on_level: Optional[LevelCallback] = None) -> Iterator[Digraph]:
    """One canonical representative per isomorphism class, in hd6 order."""
    for code in generate_codes(n, jobs=jobs, progress=progress, large=large, on_level=on_level):
        yield Digraph(n, code)


# ─── Census ───────────────────────────────────────────────────────


def _char_poly_for(matrix: str) -> Callable[[Digraph], CharPoly]:
    if matrix == "H":
        return hermitian_char_poly
    if matrix == "A":
        return adjacency_char_poly
    raise ValueError(f"matrix must be one of {MATRICES}, got {matrix!r}")


def _summarize(n: int, matrix: str, classes: Iterable[CospectralClass]) -> CensusRow:
    """One pass over the classes, so a stored run is never loaded whole."""
    tally = defaultdict(int)
    for c in classes:
        tally["digraph_count"] += c.size
        tally["distinct_charpolys"] += 1
        tally["max_class_size"] = max(tally["max_class_size"], c.size)
        tally["determined_by_spectrum"] += c.size == 1
        tally["classes_no_graphs"] += not c.contains_graph
        tally["classes_only_graphs"] += c.all_graphs
        tally["classes_mixed"] += c.contains_graph and not c.all_graphs
        if is_irreducible(c.key):
            tally["irreducible_classes"] += 1
            tally["irreducible_digraphs"] += c.size
        if is_squarefree(c.key):
            tally["squarefree_classes"] += 1
            tally["squarefree_digraphs"] += c.size
    fields = [f.name for f in dataclasses.fields(CensusRow) if f.name not in ("n", "matrix")]
    return CensusRow(n=n, matrix=matrix, **{name: int(tally[name]) for name in fields})


def census(
    n: int,
    matrix: str = "H",
    jobs: int = 1,
    progress: bool = False,
    large: bool = False,
    store: Optional[CensusStore] = None,
    on_level: Optional[LevelCallback] = None,
) -> Census:
    """Group every digraph of order n by the exact characteristic polynomial of H or A.

    With a store, members are streamed to disk as they are generated and the
    classes of the result are read back from it on each iteration.
    """
    char_poly = _char_poly_for(matrix)
    _check_order(n, large)
    if store is not None:
        run_id = store.begin_run(n, matrix)
        batch = []
        for code in iter_codes(n, jobs=jobs, progress=progress, large=large, on_level=on_level):
            X = Digraph(n, code)
            batch.append((encode(X), char_poly(X), X.is_graph))
            if len(batch) >= STORE_BATCH:
                store.append_members(run_id, batch)
                batch = []
        store.append_members(run_id, batch)
        if store.duplicate_members(run_id):
            raise InvariantViolation(f"order {n}: a class was generated from two parents")
        classes = StoredClasses(store, run_id)
        row = _summarize(n, matrix, classes)
        store.finish_run(run_id, row)
    else:
        grouped: Dict[CharPoly, List[Tuple[str, bool]]] = defaultdict(list)
        for X in generate_nonisomorphic(n, jobs=jobs, progress=progress, large=large, on_level=on_level):
            grouped[char_poly(X)].append((encode(X), X.is_graph))
        classes = []
        for key in sorted(grouped, key=CharPoly.sort_key):
            members = sorted(grouped[key])
            flags = [g for _, g in members]
            classes.append(CospectralClass(
                key=key,
                members=[code for code, _ in members],
                contains_graph=any(flags),
                all_graphs=all(flags),
            ))
        row = _summarize(n, matrix, classes)
    if row.classes_no_graphs + row.classes_only_graphs + row.classes_mixed != row.distinct_charpolys:
        raise InvariantViolation(f"class content split does not cover all classes: {row}")
    logger.info("census n=%d %s: %d digraphs, %d classes", n, matrix, row.digraph_count, row.distinct_charpolys)
    return Census(row=row, classes=classes)


def converse_closed(cls: CospectralClass) -> bool:
    """The converse of every member is again a member."""
    members = set(cls.members)
    return all(canonical_code(converse(decode(code))) in members for code in cls.members)


# ─── Structure of the classes ─────────────────────────────────────


def _h_classes(n: int, large: bool = False) -> Dict[CharPoly, List[Digraph]]:
    grouped: Dict[CharPoly, List[Digraph]] = defaultdict(list)
    for X in generate_nonisomorphic(n, large=large):
        grouped[hermitian_char_poly(X)].append(X)
    return dict(grouped)


def connectivity_demo(n: int) -> List[Tuple[Tuple[Digraph, Digraph, Digraph], CharPoly]]:
    """Classes holding a strongly connected member, a weakly but not strongly
    connected member and a disconnected member, one example of each.
    """
    found = []
    for key, members in sorted(_h_classes(n).items(), key=lambda kv: kv[0].sort_key()):
        strong = [X for X in members if is_strongly_connected(X)]
        weak = [X for X in members if is_weakly_connected(X) and not is_strongly_connected(X)]
        loose = [X for X in members if not is_weakly_connected(X)]
        if strong and weak and loose:
            found.append(((strong[0], weak[0], loose[0]), key))
    return found


def _graph_code(X: Digraph) -> str:
    return canonical_code(Digraph.from_graph(underlying_graph(X)))


def underlying_graph_variety(n: int) -> List[Tuple[CharPoly, Tuple[str, ...]]]:
    """H-classes whose members do not all share one underlying graph."""
    out = []
    for key, members in sorted(_h_classes(n).items(), key=lambda kv: kv[0].sort_key()):
        graphs = tuple(sorted({_graph_code(X) for X in members}))
        if len(graphs) > 1:
            out.append((key, graphs))
    return out


def _arcs(n: int, arcs, digons=()) -> Digraph:
    return Digraph.from_arcs(n, list(arcs) + [a for u, v in digons for a in ((u, v), (v, u))])


def order3_reference_table() -> List[Tuple[CharPoly, List[Tuple[str, Digraph]]]]:
    """Named digraphs of order 3 grouped by their H-characteristic polynomial."""
    rows = [
        ("t**3 - 2*t", [
            ("Z1", _arcs(3, [(1, 0), (1, 2)])),
            ("P3->", _arcs(3, [(0, 1), (1, 2)])),
            ("Z2", _arcs(3, [(1, 2)], [(0, 1)])),
            ("Z3", _arcs(3, [(0, 1), (2, 1)])),
            ("Z4", _arcs(3, [(2, 1)], [(0, 1)])),
            ("P3", _arcs(3, [], [(0, 1), (1, 2)])),
        ]),
        ("t**3 - 3*t + 2", [("K3'", family("K3prime"))]),
        ("t**3", [("E3", family("Empty", 3))]),
        ("t**3 - 3*t - 2", [("K3", family("K", 3)), ("Y21", family("Y", 2, 1)), ("Y12", family("Y", 1, 2))]),
        ("t**3 - t", [("Z5", _arcs(3, [(0, 1)])), ("Z6", _arcs(3, [], [(0, 1)]))]),
        ("t**3 - 3*t", [
            ("Z7", _arcs(3, [(0, 1)], [(1, 2), (0, 2)])),
            ("D3", family("D", 3)),
            ("C~3", family("Ctilde", 3)),
        ]),
    ]
    return [(CharPoly.from_expr(expr), named) for expr, named in rows]


_CYCLE_TABLES = {
    4: ("t**4 - 4*t**2", "t**4 - 4*t**2 + 4", "t**4 - 4*t**2 + 2"),
    5: ("t**5 - 5*t**3 + 5*t - 2", "t**5 - 5*t**3 + 5*t", "t**5 - 5*t**3 + 5*t + 2"),
}

# digraphs whose spectrum is {-(n-1), 1^(n-1)}
_MINUS_N_PLUS_ONE = {
    1: (("K", 1),),
    2: (("K", 2), ("T", 2)),
    3: (("K3prime",),),
    4: (("K4prime",),),
}


def _is_cycle(X: Digraph) -> bool:
    g = underlying_graph(X)
    return X.n >= 3 and g.number_of_edges() == X.n and all(d == 2 for _, d in g.degree()) and nx.is_connected(g)


def verify_classification(n: int) -> ClassificationReport:
    """Exhaustive checks on all digraphs of order n (1 <= n <= 5)."""
    if not 1 <= n <= 5:
        raise UnsupportedOrderError(f"classification checks run for 1 <= n <= 5, got {n}")
    report = ClassificationReport(n=n)
    classes = _h_classes(n)
    codes = {key: {encode(X) for X in members} for key, members in classes.items()}

    target = from_roots((-(n - 1), 1), (1, n - 1))
    expected = {canonical_code(family(*entry)) for entry in _MINUS_N_PLUS_ONE.get(n, ())}
    report.checks["unique-minus-n-plus-one"] = codes.get(target, set()) == expected
    report.details["unique-minus-n-plus-one"] = sorted(codes.get(target, set()))

    kn = {canonical_code(X) for X in kn_cospectral_class(n)}
    kn_key = hermitian_char_poly(family("K", n))
    report.checks["complete-graph-class"] = codes.get(kn_key) == kn and len(kn) == n
    report.details["complete-graph-class"] = sorted(codes.get(kn_key, set()))

    report.checks["converse-closure"] = all(
        canonical_code(converse(X)) in codes[key] for key, members in classes.items() for X in members
    )

    if n == 3:
        table = order3_reference_table()
        report.checks["order3-table"] = len(table) == len(classes) and all(
            codes.get(key) == {canonical_code(X) for _, X in named} for key, named in table
        )

    if n in _CYCLE_TABLES:
        cycles = [X for members in classes.values() for X in members if _is_cycle(X)]
        polys = {hermitian_char_poly(X) for X in cycles}
        report.checks["cycle-table"] = polys == {CharPoly.from_expr(e) for e in _CYCLE_TABLES[n]}
        report.details["cycle-table"] = sorted(str(p) for p in polys)
        normal_ok = True
        for X in cycles:
            form = cycle_normal_form(X)
            normal_ok &= replay_witness(X, form.witness) == form.representative
        report.checks["cycle-normal-form"] = normal_ok
        if n == 4:
            tilde_key = hermitian_char_poly(family("Ctilde", 4))
            found = tuple(sorted(encode(X) for X in cycles if hermitian_char_poly(X) == tilde_key))
            report.checks["c4-tilde-class"] = found == c4_tilde_class() and len(found) == 3

    logger.info("classification n=%d: %s", n, "PASS" if report.ok else "FAIL")
    return report

