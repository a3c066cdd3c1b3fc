"""hd6 and text encodings, plus the isomorphism canonical form.

hd6: the first character is chr(63 + n). The pair states for (0,1), (0,2),
..., (0,n-1), (1,2), ... follow as 2-bit codes, three codes per character
(first code in the high bits), each character chr(63 + v). The last
character is zero-padded. Because codes are packed high-bit first, string
order on equal-length codes agrees with the order on pair-state tuples.
"""

import itertools
from typing import Iterable, List, Sequence, Tuple

from .errors import DecodeError, InvalidDigraphError, UnsupportedOrderError
from .models.digraph import Digraph, PairState, iter_pairs, pair_count

MAX_ENCODED_ORDER = 62
MAX_CANONICAL_ORDER = 8
_BASE = 63


# ─── hd6 ──────────────────────────────────────────────────────────


def encode(X: Digraph) -> str:
    if X.n > MAX_ENCODED_ORDER:
        raise UnsupportedOrderError(f"hd6 supports n <= {MAX_ENCODED_ORDER}, got {X.n}")
    return encode_pairs(X.n, X.pairs)


def encode_pairs(n: int, pairs: Sequence[int]) -> str:
    chars = [chr(_BASE + n)]
    for k in range(0, len(pairs), 3):
        chunk = list(pairs[k:k + 3]) + [0] * (3 - len(pairs[k:k + 3]))
        chars.append(chr(_BASE + (chunk[0] << 4 | chunk[1] << 2 | chunk[2])))
    return "".join(chars)


def decode(text: str) -> Digraph:
    if not text:
        raise DecodeError("empty hd6 string: missing header", 0)
    n = ord(text[0]) - _BASE
    if not 0 <= n <= MAX_ENCODED_ORDER:
        raise DecodeError(f"malformed header {text[0]!r}", 0)
    m = pair_count(n)
    needed = 1 + (m + 2) // 3
    for pos, ch in enumerate(text[1:], start=1):
        if not 0 <= ord(ch) - _BASE < 64:
            raise DecodeError(f"out-of-range character {ch!r}", pos)
    if len(text) < needed:
        raise DecodeError(f"truncated: n={n} needs {needed} characters, got {len(text)}", len(text))
    if len(text) > needed:
        raise DecodeError("trailing garbage", needed)
    codes: List[int] = []
    for ch in text[1:]:
        v = ord(ch) - _BASE
        codes.extend((v >> 4 & 3, v >> 2 & 3, v & 3))
    if any(codes[m:]):
        raise DecodeError("non-zero padding bits", len(text) - 1)
    return Digraph(n, tuple(codes[:m]))


# ─── Text format ──────────────────────────────────────────────────


def format_text(X: Digraph) -> str:
    lines = [f"n={X.n}"]
    for (i, j), s in zip(iter_pairs(X.n), X.pairs):
        if s == PairState.DIGON:
            lines.append(f"{i}={j}")
        elif s == PairState.FWD:
            lines.append(f"{i}>{j}")
        elif s == PairState.BWD:
            lines.append(f"{j}>{i}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Digraph:
    """Parse the `n=<N>` / `u>v` / `u=v` format. Blank lines and `#` comments are skipped."""
    lines = [(k, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines(), start=1)]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines or not lines[0][1].startswith("n="):
        raise DecodeError("text digraph must start with a line n=<N>", 1)
    lineno, header = lines[0]
    try:
        n = int(header[2:])
    except ValueError:
        raise DecodeError(f"malformed header {header!r}", lineno) from None
    if n < 0:
        raise DecodeError(f"negative order in header {header!r}", lineno)
    arcs: List[Tuple[int, int]] = []
    for lineno, line in lines[1:]:
        sep = ">" if ">" in line else "=" if "=" in line else None
        if sep is None:
            raise DecodeError(f"expected u>v or u=v, got {line!r}", lineno)
        left, right = line.split(sep, 1)
        try:
            u, v = int(left), int(right)
        except ValueError:
            raise DecodeError(f"expected integer vertices, got {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise DecodeError(f"bad pair {line!r} for n={n}", lineno)
        arcs.append((u, v))
        if sep == "=":
            arcs.append((v, u))
    try:
        return Digraph.from_arcs(n, arcs)
    except InvalidDigraphError as exc:
        raise DecodeError(str(exc)) from exc


# ─── Canonical form ───────────────────────────────────────────────


def vertex_cells(st: List[List[int]], n: int) -> List[List[int]]:
    """Vertices grouped by an isomorphism-invariant key, cells in key order."""
    base = []
    for u in range(n):
        row = st[u]
        base.append((
            sum(1 for s in row if s == PairState.DIGON),
            sum(1 for s in row if s == PairState.FWD),
            sum(1 for s in row if s == PairState.BWD),
        ))
    refined = []
    for u in range(n):
        around = sorted((st[u][v], base[v]) for v in range(n) if v != u and st[u][v])
        refined.append((base[u], tuple(around)))
    keys = sorted(set(refined))
    return [[u for u in range(n) if refined[u] == key] for key in keys]


def canonical_labeling(st: List[List[int]], n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Minimal pair-state tuple over invariant-respecting labelings.

    Returns (code, order) where new vertex p is old vertex order[p].
    """
    if n > MAX_CANONICAL_ORDER:
        raise UnsupportedOrderError(f"canonical form is exponential; supported for n <= {MAX_CANONICAL_ORDER}")
    pairs = list(iter_pairs(n))
    best = None
    best_order = None
    cells = vertex_cells(st, n)
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = tuple(st[order[p]][order[q]] for p, q in pairs)
        if best is None or code < best:
            best, best_order = code, order
    return best, tuple(best_order)


def canonical_form(X: Digraph) -> Digraph:
    code, _ = canonical_labeling(X.state_matrix(), X.n)
    return Digraph(X.n, code)


def canonical_code(X: Digraph) -> str:
    return encode(canonical_form(X))


def same_isomorphism_class(X: Digraph, Y: Digraph) -> bool:
    return X.n == Y.n and canonical_form(X) == canonical_form(Y)


def distinct_classes(digraphs: Iterable[Digraph]) -> List[str]:
    return sorted({canonical_code(X) for X in digraphs})
