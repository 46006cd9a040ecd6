"""Degree-based colouring parameters.

Everything here is exact: the interpolation parameter eps is a
fractions.Fraction, floors are integer floors, and edgeless graphs get
None rather than a fake sentinel value for the edge-indexed maxima.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalCheckError
from .graph import Graph


def exact_fraction(value, name):
    """Coerce to Fraction, rejecting floats so results stay exact."""
    if isinstance(value, float):
        raise InputError(
            f"{name} must be an exact rational (int, Fraction, or string), got float"
        )
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"cannot interpret {name}={value!r} as a rational") from exc


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("max_degree needs at least one vertex")
    return max(g.degree(v) for v in range(g.n))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("min_degree needs at least one vertex")
    return min(g.degree(v) for v in range(g.n))


def ore_degree(g: Graph):
    """Largest endpoint degree sum over edges; None on edgeless graphs."""
    best = None
    for u, v in g.edges():
        s = g.degree(u) + g.degree(v)
        if best is None or s > best:
            best = s
    return best


def delta2(g: Graph):
    """Largest over edges of the smaller endpoint degree; None if edgeless."""
    best = None
    for u, v in g.edges():
        s = min(g.degree(u), g.degree(v))
        if best is None or s > best:
            best = s
    return best


def delta_eps(g: Graph, eps):
    """Floor of the largest eps-blend of endpoint degrees over edges.

    For an edge with endpoint degrees a <= b the blend is
    (1 - eps) * a + eps * b, computed in exact rationals. eps = 0 gives
    delta2, eps = 1/2 gives floor(ore_degree / 2), eps = 1 gives the
    maximum degree (on graphs with at least one edge). Returns None on
    edgeless graphs.
    """
    eps = exact_fraction(eps, "eps")
    if not 0 <= eps <= 1:
        raise InputError(f"eps must be in [0, 1], got {eps}")
    best = None
    for u, v in g.edges():
        a, b = sorted((g.degree(u), g.degree(v)))
        blend = (1 - eps) * a + eps * b
        if best is None or blend > best:
            best = blend
    if best is None:
        return None
    return best.numerator // best.denominator


def threshold_subgraph(g: Graph, r) -> Graph:
    """Induced subgraph on the vertices of degree >= r, measured in g.

    Degrees are taken in g itself, not recomputed as vertices drop out,
    so the vertex set only shrinks as r grows. Threshold 0 returns g.
    """
    if r < 0:
        raise InputError(f"threshold must be >= 0, got {r}")
    heavy = [v for v in range(g.n) if g.degree(v) >= r]
    sub, _ = g.induced_subgraph(heavy)
    return sub


def script_h(g: Graph, chi) -> Graph:
    """Threshold subgraph at the chromatic number, the obstruction witness."""
    return threshold_subgraph(g, chi)


def classify_low_high(g: Graph, chi):
    """Label each vertex "low" (degree chi - 1) or "high" (degree >= chi).

    Only defined when every degree is at least chi - 1, which holds in
    the vertex-critical graphs this is used on.
    """
    labels = []
    for v in range(g.n):
        d = g.degree(v)
        if d == chi - 1:
            labels.append("low")
        elif d >= chi:
            labels.append("high")
        else:
            raise InputError(
                f"vertex {v} has degree {d} < chi - 1 = {chi - 1}; "
                "low/high classification is undefined here"
            )
    return tuple(labels)


@dataclass(frozen=True)
class DegreeReport:
    n: int
    m: int
    min_degree: int | None
    max_degree: int | None
    ore_degree: int | None
    delta2: int | None
    delta_eps: dict


def degree_report(g: Graph, eps_list=()) -> DegreeReport:
    """Compute the degree parameters in one place, sanity-checked.

    eps_list entries are coerced to exact rationals; the result maps
    each Fraction to its parameter value.
    """
    if g.n == 0:
        return DegreeReport(0, 0, None, None, None, None, {})
    dmin, dmax = min_degree(g), max_degree(g)
    theta = ore_degree(g)
    d2 = delta2(g)
    eps_map = {}
    for eps in eps_list:
        f = exact_fraction(eps, "eps")
        eps_map[f] = delta_eps(g, f)
    if dmin > dmax:
        raise InternalCheckError("min degree exceeded max degree")
    if theta is not None:
        # d2 <= floor(theta / 2) <= dmax holds on every graph with an edge.
        if not d2 <= theta // 2 <= dmax:
            raise InternalCheckError(
                f"degree chain violated: delta2={d2}, theta={theta}, max={dmax}"
            )
    return DegreeReport(g.n, g.edge_count(), dmin, dmax, theta, d2, eps_map)
