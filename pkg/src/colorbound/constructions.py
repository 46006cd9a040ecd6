"""Graph builders: standard families, the tightness family F_n, seeded
random graphs, exhaustive small-graph enumeration, and graph6 io."""

from __future__ import annotations

import random
from typing import NamedTuple

from .degrees import exact_fraction
from .errors import InputError
from .graph import Graph


def complete_graph(n):
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def cycle(n):
    if n < 3:
        raise InputError(f"cycle needs >= 3 vertices, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def star(leaves):
    """Star with `leaves` leaf vertices; the centre is vertex 0."""
    if leaves < 0:
        raise InputError(f"leaf count must be >= 0, got {leaves}")
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


class FGraph(NamedTuple):
    graph: Graph
    x: int
    y: int


def f_graph(n) -> FGraph:
    """The family member F_n, with its two special vertices.

    Vertices 0..n-1 induce K_n minus the edge {0, 1}; vertices n..2n-2
    induce K_{n-1}. The floor((n-1)/2) lowest-numbered vertices of the
    second clique are joined to x = 0 and the remaining ones to y = 1.
    Defined for n >= 3 (F_3 is the 5-cycle).
    """
    if n < 3:
        raise InputError(f"f_graph needs n >= 3, got {n}")
    x, y = 0, 1
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) != (x, y):
                edges.append((u, v))
    for u in range(n, 2 * n - 1):
        for v in range(u + 1, 2 * n - 1):
            edges.append((u, v))
    split = n + (n - 1) // 2
    for w in range(n, 2 * n - 1):
        edges.append((x if w < split else y, w))
    return FGraph(Graph(2 * n - 1, edges), x, y)


def n_epsilon(eps):
    """Smallest valid odd family index for a given rational eps in (0, 1].

    Returns 1 + 2b when eps is exactly 1/b, and 3 + 2*floor(1/eps)
    otherwise; either way the result is odd and at least 1 + 2/eps.
    """
    eps = exact_fraction(eps, "eps")
    if not 0 < eps <= 1:
        raise InputError(f"eps must be in (0, 1], got {eps}")
    if eps.numerator == 1:
        return 1 + 2 * eps.denominator
    return 3 + 2 * int(1 / eps)


def gnp_random(n, p, seed):
    """Erdos-Renyi G(n, p) with an exact rational p and reproducible draws.

    Each pair (u, v), u < v, taken in lexicographic order, consumes one
    53-bit draw from random.Random(seed); the edge is present iff
    draw / 2^53 < p, compared in integers so float rounding never
    shifts an outcome. Same (n, p, seed) always yields the same graph.
    """
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")
    p = exact_fraction(p, "p")
    if not 0 <= p <= 1:
        raise InputError(f"p must be in [0, 1], got {p}")
    rng = random.Random(seed)
    threshold = p.numerator << 53
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.getrandbits(53) * p.denominator < threshold:
                edges.append((u, v))
    return Graph(n, edges)


def enumerate_small_graphs(n, connected_only=False, cap=8):
    """Yield every labelled graph on n vertices, one per edge subset.

    Edge subsets are enumerated in lexicographic pair order, so the
    sequence is deterministic. cap bounds n because the count is
    2^C(n,2); pass a larger cap deliberately.
    """
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")
    if n > cap:
        raise InputError(f"n={n} exceeds cap={cap}; raise cap explicitly if intended")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(1 << len(pairs)):
        g = _graph_from_code(n, pairs, code)
        if connected_only and not g.is_connected():
            continue
        yield g


def _graph_from_code(n, pairs, code):
    masks = [0] * n
    for i, (u, v) in enumerate(pairs):
        if code >> i & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return Graph._trusted(n, masks)


def graph_from_edge_code(n, code) -> Graph:
    """The graph at one position of the enumerate_small_graphs sequence.

    Position `code` encodes the edge subset: bit i selects the i-th
    pair in lexicographic order. Random access lets chunked sweeps
    share the exact enumeration order without iterating from zero.
    """
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not 0 <= code < 1 << len(pairs):
        raise InputError(f"edge code {code} out of range for n={n}")
    return _graph_from_code(n, pairs, code)


# -- graph6 ------------------------------------------------------------
# Compact ascii format for small graphs: one printable token per graph,
# upper-triangle adjacency bits packed 6 per character.


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise InputError("graph6 writer here only supports n <= 62")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        k = 0
        for b in bits[i : i + 6]:
            k = k << 1 | b
        out.append(chr(k + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise InputError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise InputError(f"graph6 string contains bytes outside 63..126: {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise InputError("graph6 reader here only supports n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise InputError(
            f"graph6 body for n={n} needs {need} characters, got {len(body)}"
        )
    bits = []
    for c in body:
        k = ord(c) - 63
        bits.extend(k >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[n * (n - 1) // 2 :]):
        raise InputError("graph6 padding bits must be zero")
    masks = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            i += 1
    return Graph._trusted(n, masks)


def read_graph6_file(path):
    """Parse a file with one graph6 token per line; blank lines skipped."""
    graphs = []
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(from_graph6(line))
            except InputError as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    return graphs
