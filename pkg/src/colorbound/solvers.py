"""Exact chromatic and clique computations for small graphs.

The colouring search is saturation-ordered backtracking with a
first-use symmetry break and a forward check; the clique search is
branch and bound on bitmasks. Both are deterministic: ties always go
to the lowest vertex index and colours are tried in ascending order,
so repeated runs return identical certificates.
"""

from __future__ import annotations

from .errors import InputError
from .graph import Graph, _bits


def _max_clique_mask(adj, n):
    """Bitmask of a maximum clique, found by branch and bound.

    Branches on the lowest set bit and seeds the bound with an
    ascending-index greedy clique, so the returned witness is the same
    on every run.
    """
    best_mask = 0
    for v in range(n):
        if not best_mask & ~adj[v]:
            best_mask |= 1 << v
    best = best_mask.bit_count()

    def expand(pool, size, chosen):
        nonlocal best, best_mask
        while pool:
            if size + pool.bit_count() <= best:
                return
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            picked = chosen | 1 << v
            if size + 1 > best:
                best, best_mask = size + 1, picked
            sub = pool & adj[v]
            if sub:
                expand(sub, size + 1, picked)

    expand((1 << n) - 1, 0, 0)
    return best_mask


def _solve_k_coloring(adj, n, k, clique):
    """Backtracking core behind k_colorable; clique is precoloured first."""
    if len(clique) > k:
        return None
    full = (1 << k) - 1
    avail = [full] * n
    colors = [-1] * n
    for c, v in enumerate(clique):
        colors[v] = c
        bit = 1 << c
        for w in _bits(adj[v]):
            if colors[w] < 0 and avail[w] & bit:
                avail[w] ^= bit
                if not avail[w]:
                    return None

    def place(assigned, used):
        if assigned == n:
            return True
        pick, pick_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                sat = k - avail[v].bit_count()
                if sat > pick_sat:
                    pick, pick_sat = v, sat
        cand = avail[pick] & ((1 << min(k, used + 1)) - 1)
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            colors[pick] = c
            bit = 1 << c
            touched = []
            dead_end = False
            for w in _bits(adj[pick]):
                if colors[w] < 0 and avail[w] & bit:
                    avail[w] ^= bit
                    touched.append(w)
                    if not avail[w]:
                        dead_end = True
            if not dead_end and place(assigned + 1, max(used, c + 1)):
                return True
            for w in touched:
                avail[w] |= bit
            colors[pick] = -1
        return False

    return list(colors) if place(len(clique), len(clique)) else None


def k_colorable(g: Graph, k):
    """A proper colouring of g with colours 0..k-1, or None.

    A maximum clique is precoloured 0, 1, 2, ... first (every colouring
    can be permuted to agree with that, so nothing is lost) and
    afterwards a new colour is only ever introduced as the next unused
    index. Together the two symmetry breaks keep the search out of
    colour-permutation orbits, which matters on dense graphs where k
    barely exceeds the clique number.
    """
    if k < 0:
        raise InputError(f"colour count must be >= 0, got {k}")
    n = g.n
    if n == 0:
        return []
    if k == 0:
        return None
    if k >= n:
        return list(range(n))
    adj = [g.adjacency_mask(v) for v in range(n)]
    clique = list(_bits(_max_clique_mask(adj, n)))
    return _solve_k_coloring(adj, n, k, clique)


def greedy_coloring(g: Graph):
    """Saturation-greedy proper colouring; an upper bound, not optimal."""
    n = g.n
    colors = [-1] * n
    forbidden = [0] * n
    for _ in range(n):
        pick, pick_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                sat = forbidden[v].bit_count()
                if sat > pick_sat:
                    pick, pick_sat = v, sat
        c = 0
        while forbidden[pick] >> c & 1:
            c += 1
        colors[pick] = c
        for w in _bits(g.adjacency_mask(pick)):
            forbidden[w] |= 1 << c
    return colors


def clique_number(g: Graph) -> int:
    n = g.n
    if n == 0:
        return 0
    adj = [g.adjacency_mask(v) for v in range(n)]
    return _max_clique_mask(adj, n).bit_count()


def chromatic_number(g: Graph) -> int:
    n = g.n
    if n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    adj = [g.adjacency_mask(v) for v in range(n)]
    clique = list(_bits(_max_clique_mask(adj, n)))
    lb = len(clique)
    ub = max(greedy_coloring(g)) + 1
    if lb == ub:
        return lb
    # n / independence-number also bounds from below; cheap and it
    # closes the bracket on dense near-complete graphs where the
    # clique bound alone would force a long failing search.
    alpha = clique_number(g.complement())
    lb = max(lb, -(-n // alpha))
    k = lb
    while k < ub and _solve_k_coloring(adj, n, k, clique) is None:
        k += 1
    return k


def is_vertex_critical(g: Graph) -> bool:
    """Whether deleting any single vertex lowers the chromatic number.

    Only defined for connected graphs; disconnected input is rejected
    rather than silently classified.
    """
    if not g.is_connected():
        raise InputError("vertex criticality is only defined here for connected graphs")
    chi = chromatic_number(g)
    return all(
        k_colorable(g.remove_vertex(v), chi - 1) is not None for v in range(g.n)
    )


def critical_vertices(g: Graph) -> frozenset:
    """Vertices whose removal lowers the chromatic number."""
    chi = chromatic_number(g)
    return frozenset(
        v
        for v in range(g.n)
        if k_colorable(g.remove_vertex(v), chi - 1) is not None
    )


def list_color_feasible(g: Graph, lists):
    """Proper colouring with each vertex choosing from its own list, or None.

    lists[v] is an iterable of allowed colour ints for vertex v. The
    search assigns the most constrained vertex first and tries colours
    in ascending order.
    """
    if len(lists) != g.n:
        raise InputError(f"expected {g.n} colour lists, got {len(lists)}")
    avail = []
    for v, options in enumerate(lists):
        mask = 0
        for c in options:
            if not isinstance(c, int) or c < 0:
                raise InputError(f"colour list for vertex {v} holds non-colour {c!r}")
            mask |= 1 << c
        avail.append(mask)
    colors = [-1] * g.n
    adj = [g.adjacency_mask(v) for v in range(g.n)]

    def place(assigned):
        if assigned == g.n:
            return True
        pick, pick_width = -1, None
        for v in range(g.n):
            if colors[v] < 0:
                width = avail[v].bit_count()
                if pick_width is None or width < pick_width:
                    pick, pick_width = v, width
        cand = avail[pick]
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            colors[pick] = c
            bit = 1 << c
            touched = []
            dead_end = False
            for w in _bits(adj[pick]):
                if colors[w] < 0 and avail[w] & bit:
                    avail[w] ^= bit
                    touched.append(w)
                    if not avail[w]:
                        dead_end = True
            if not dead_end and place(assigned + 1):
                return True
            for w in touched:
                avail[w] |= bit
            colors[pick] = -1
        return False

    return list(colors) if place(0) else None
