"""Named chromatic-bound laws checked against exact oracles.

Each law is a conditional statement about one graph. Unmet
preconditions yield "skipped" verdicts rather than failures: a graph
outside a law's hypothesis is not evidence either way. Violations
carry the full edge list so a verdict can be re-verified from the
witness alone. All comparisons are integer arithmetic; the 5/6 bound
is checked with denominators cleared.
"""

from __future__ import annotations

from functools import cached_property

from .degrees import delta2, max_degree, ore_degree
from .errors import InputError
from .graph import Graph
from .solvers import chromatic_number, clique_number, critical_vertices
from .verdict import LawVerdict

LAW_NAMES = ("brooks", "stacho", "ore", "main", "observation", "corollary-k1")


class GraphFacts:
    """Exact parameters of one graph, computed lazily and shared.

    Checking several laws against the same graph should price the
    chromatic number once; hand one instance to each check_law call.
    """

    def __init__(self, g: Graph):
        self.graph = g

    @cached_property
    def m(self) -> int:
        return self.graph.edge_count()

    @cached_property
    def delta(self) -> int:
        return max_degree(self.graph)

    @cached_property
    def d2(self):
        return delta2(self.graph)

    @cached_property
    def theta(self):
        return ore_degree(self.graph)

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.graph)

    @cached_property
    def omega(self) -> int:
        return clique_number(self.graph)

    @cached_property
    def h_edge(self):
        """Some edge of H(g) in original vertex ids, or None if H is edgeless."""
        g = self.graph
        chi = self.chi
        for u, v in g.edges():
            if g.degree(u) >= chi and g.degree(v) >= chi:
                return (u, v)
        return None

    @cached_property
    def vertex_critical(self) -> bool:
        g = self.graph
        return g.is_connected() and len(critical_vertices(g)) == g.n


def _payload(g: Graph, **extra):
    data = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    data.update(extra)
    return data


def _check_brooks(facts: GraphFacts) -> LawVerdict:
    g = facts.graph
    if facts.delta < 3:
        return LawVerdict("brooks", g, None, skipped=f"max degree {facts.delta} < 3")
    if facts.chi <= max(facts.omega, facts.delta):
        return LawVerdict("brooks", g, True)
    witness = _payload(g, chi=facts.chi, omega=facts.omega, delta=facts.delta)
    return LawVerdict("brooks", g, False, witness=witness)


def _check_stacho(facts: GraphFacts) -> LawVerdict:
    g = facts.graph
    if facts.m == 0:
        return LawVerdict("stacho", g, None, skipped="no edges")
    if facts.chi <= facts.d2 + 1:
        return LawVerdict("stacho", g, True)
    return LawVerdict("stacho", g, False, witness=_payload(g, chi=facts.chi, delta2=facts.d2))


def _check_ore(facts: GraphFacts) -> LawVerdict:
    g = facts.graph
    theta = facts.theta
    if theta is None or theta < 10:
        shown = "no edges" if theta is None else f"ore degree {theta} < 10"
        return LawVerdict("ore", g, None, skipped=shown)
    if facts.chi <= max(facts.omega, theta // 2):
        return LawVerdict("ore", g, True)
    witness = _payload(g, chi=facts.chi, omega=facts.omega, theta=theta)
    return LawVerdict("ore", g, False, witness=witness)


def _check_main(facts: GraphFacts) -> LawVerdict:
    """chi <= max of {omega, delta2, 5(delta+1)/6}, cleared to integers."""
    g = facts.graph
    if facts.delta < 3:
        return LawVerdict("main", g, None, skipped=f"max degree {facts.delta} < 3")
    # delta >= 3 guarantees an edge, so d2 is a number here
    if 6 * facts.chi <= max(6 * facts.omega, 6 * facts.d2, 5 * (facts.delta + 1)):
        return LawVerdict("main", g, True)
    witness = _payload(
        g, chi=facts.chi, omega=facts.omega, delta2=facts.d2, delta=facts.delta
    )
    return LawVerdict("main", g, False, witness=witness)


def _check_observation(facts: GraphFacts) -> LawVerdict:
    """chi exceeds delta2 exactly when no edge survives the chi threshold."""
    g = facts.graph
    if facts.m == 0:
        return LawVerdict("observation", g, None, skipped="no edges")
    exceeds = facts.chi > facts.d2
    edgeless = facts.h_edge is None
    if exceeds == edgeless:
        return LawVerdict("observation", g, True)
    witness = _payload(
        g,
        chi=facts.chi,
        delta2=facts.d2,
        h_edge=None if facts.h_edge is None else list(facts.h_edge),
    )
    return LawVerdict("observation", g, False, witness=witness)


def _check_corollary_k1(facts: GraphFacts) -> LawVerdict:
    """Among vertex-critical graphs with chi >= delta >= 6, an edgeless
    threshold graph forces completeness."""
    g = facts.graph
    if facts.delta < 6:
        return LawVerdict("corollary-k1", g, None, skipped=f"max degree {facts.delta} < 6")
    if facts.chi < facts.delta:
        return LawVerdict(
            "corollary-k1", g, None, skipped=f"chi {facts.chi} < max degree {facts.delta}"
        )
    if not facts.vertex_critical:
        return LawVerdict("corollary-k1", g, None, skipped="not vertex-critical")
    if facts.h_edge is not None or g.is_complete():
        return LawVerdict("corollary-k1", g, True)
    missing = next(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    )
    witness = _payload(
        g, chi=facts.chi, delta=facts.delta, missing_edge=list(missing)
    )
    return LawVerdict("corollary-k1", g, False, witness=witness)


_CHECKERS = {
    "brooks": _check_brooks,
    "stacho": _check_stacho,
    "ore": _check_ore,
    "main": _check_main,
    "observation": _check_observation,
    "corollary-k1": _check_corollary_k1,
}


def check_law(g: Graph, law: str, facts: GraphFacts | None = None) -> LawVerdict:
    """Check one named law against one graph.

    Unknown names raise InputError. Pass a shared GraphFacts when
    checking several laws on the same graph.
    """
    if law not in _CHECKERS:
        raise InputError(f"unknown law {law!r}; known: {', '.join(LAW_NAMES)}")
    if g.n == 0:
        return LawVerdict(law, g, None, skipped="no vertices")
    if facts is None:
        facts = GraphFacts(g)
    return _CHECKERS[law](facts)


def check_laws(g: Graph, laws) -> list[LawVerdict]:
    """Check several laws against one graph with shared oracles."""
    facts = GraphFacts(g)
    return [check_law(g, law, facts) for law in laws]
