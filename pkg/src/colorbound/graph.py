"""Immutable simple undirected graphs on dense integer vertex ids.

Adjacency is stored as one Python int bitmask per vertex, which keeps
degree counting, neighbourhood intersection and induced-subgraph
extraction cheap enough for exhaustive sweeps over millions of small
graphs. Vertices are always 0..n-1; there are no labels, no attributes
and no mutation.
"""

from __future__ import annotations

from .errors import InputError


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._m = sum(_popcount(a) for a in adj) // 2

    @classmethod
    def from_masks(cls, masks):
        """Build from per-vertex adjacency bitmasks, validating symmetry."""
        n = len(masks)
        g = cls.__new__(cls)
        full = (1 << n) - 1
        for u, a in enumerate(masks):
            if a & ~full:
                raise InputError(f"mask for vertex {u} references vertices >= {n}")
            if a >> u & 1:
                raise InputError(f"self-loop at vertex {u}")
            for v in _bits(a):
                if not masks[v] >> u & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        g.n = n
        g._adj = tuple(masks)
        g._m = sum(_popcount(a) for a in masks) // 2
        return g

    @classmethod
    def _trusted(cls, n, masks, m=None):
        # Skips validation; internal use on masks we constructed ourselves.
        g = cls.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        g._m = sum(_popcount(a) for a in masks) // 2 if m is None else m
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self._m})"

    # -- basic queries ------------------------------------------------

    def degree(self, v) -> int:
        return _popcount(self._adj[v])

    def adjacency_mask(self, v) -> int:
        return self._adj[v]

    def neighbors(self, v):
        """Neighbours of v as an ascending tuple."""
        return tuple(_bits(self._adj[v]))

    def has_edge(self, u, v) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        """All edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return self._m

    def edges_within(self, mask) -> int:
        """Number of edges with both ends inside the vertex set given as a bitmask."""
        total = 0
        for v in _bits(mask):
            total += _popcount(self._adj[v] & mask)
        return total // 2

    # -- derived graphs -----------------------------------------------

    def induced_subgraph(self, vertices):
        """Subgraph induced on `vertices`, relabelled to 0..k-1 ascending.

        Returns (graph, mapping) where mapping[i] is the original id of
        new vertex i.
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        masks = []
        for v in order:
            m = 0
            for w in _bits(self._adj[v]):
                if w in index:
                    m |= 1 << index[w]
            masks.append(m)
        return Graph._trusted(len(order), masks), tuple(order)

    def remove_vertex(self, v):
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range")
        keep = [u for u in range(self.n) if u != v]
        g, _ = self.induced_subgraph(keep)
        return g

    def complement(self):
        full = (1 << self.n) - 1
        masks = [full & ~self._adj[v] & ~(1 << v) for v in range(self.n)]
        return Graph._trusted(self.n, masks)

    # -- connectivity and shape tests ----------------------------------

    def _reach_mask(self, start_mask, within=None):
        # BFS over bitmasks; `within` restricts to an induced vertex set.
        allowed = (1 << self.n) - 1 if within is None else within
        seen = start_mask & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self._adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def component_of(self, v, within=None):
        """Vertices of the component containing v, as a frozenset.

        `within`, if given, is a bitmask restricting to an induced subgraph;
        v must be inside it.
        """
        if within is not None and not within >> v & 1:
            raise InputError(f"vertex {v} not in the given vertex set")
        return frozenset(_bits(self._reach_mask(1 << v, within)))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self._reach_mask(1) == (1 << self.n) - 1

    def is_complete(self) -> bool:
        # Each vertex must see all others.
        full = (1 << self.n) - 1
        return all(self._adj[v] == full ^ (1 << v) for v in range(self.n))

    def is_odd_cycle(self) -> bool:
        if self.n < 3 or self.n % 2 == 0 or self._m != self.n:
            return False
        if any(_popcount(a) != 2 for a in self._adj):
            return False
        return self.is_connected()
