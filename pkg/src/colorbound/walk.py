"""The singleton walk: hypothesis checks, group-size selection, the
counter-driven step loop, termination detection, and extraction of a
clique certificate from the final neighbourhood.

Group indices are 0-based here and everywhere else in the package. The
walk starts at group 0; the step-4 detour scans groups 2..a-1 and the
fallback alternates between groups 0 and 1 (choosing 0 when the current
group is neither). Every tie breaks to the lowest vertex or group
index, so runs are replayable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import max_degree
from .errors import InputError, InternalCheckError
from .graph import Graph, _bits
from .partitioned import (
    PartitionSpec,
    PartitionedColoring,
    _z_mask,
    minimum_partitioned_coloring,
    objective,
    swap,
)
from .solvers import chromatic_number, k_colorable
from .verdict import LawVerdict, graph_key

HYPOTHESIS_NAMES = ("vertex-critical", "chi-vs-max-degree", "six-k", "h-edgeless")


class WalkHypothesisError(Exception):
    """The walk's reasoning broke mid-run: a guaranteed structure was absent.

    Carries a name for the breached guarantee and a witness dict. run_walk
    converts this into a HypothesisViolation outcome.
    """

    def __init__(self, name, witness):
        super().__init__(name)
        self.name = name
        self.witness = witness


@dataclass(frozen=True)
class WalkState:
    """Snapshot after `iteration` steps.

    q holds one counter per vertex, keyed by vertex identity. p is the
    group the next step will walk into. trajectory[j] is (x_j, p_j);
    visited_mask covers x_1..x_i, deliberately excluding x_0, which is
    how the detour rule counts revisits.
    """

    iteration: int
    pc: PartitionedColoring
    q: tuple
    p: int
    trajectory: tuple
    visited_mask: int
    initial_objective: int

    @property
    def singleton(self) -> int:
        return self.pc.singleton


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple
    transcript: tuple


@dataclass(frozen=True)
class HypothesisViolation:
    failed: tuple
    witness: dict
    transcript: tuple

    @property
    def hypothesis(self) -> str:
        return self.failed[0]


@dataclass(frozen=True)
class IterationCapExceeded:
    cap: int
    state: WalkState
    transcript: tuple


def check_hypotheses(g: Graph, k) -> LawVerdict:
    """Which of the four walk hypotheses hold for (g, k).

    The verdict context carries chi and the maximum degree; on failure
    the witness lists every hypothesis that failed with details, not
    just the first one.
    """
    _check_k(k)
    if g.n == 0:
        raise InputError("hypothesis check needs a non-empty graph")
    chi = chromatic_number(g)
    delta = max_degree(g)
    failed = []
    details = {}
    if not g.is_connected():
        failed.append("vertex-critical")
        details["vertex-critical"] = {"reason": "graph is disconnected"}
    else:
        culprit = next(
            (
                v
                for v in range(g.n)
                if k_colorable(g.remove_vertex(v), chi - 1) is None
            ),
            None,
        )
        if culprit is not None:
            failed.append("vertex-critical")
            details["vertex-critical"] = {
                "vertex": culprit,
                "reason": "removal does not lower the chromatic number",
            }
    if chi < delta + 1 - k:
        failed.append("chi-vs-max-degree")
        details["chi-vs-max-degree"] = {"chi": chi, "delta": delta, "k": k}
    if delta + 1 < 6 * k:
        failed.append("six-k")
        details["six-k"] = {"delta": delta, "k": k, "required": 6 * k}
    for u, v in g.edges():
        # an edge of H(g) is an edge of g whose endpoints both have degree >= chi
        if g.degree(u) >= chi and g.degree(v) >= chi:
            failed.append("h-edgeless")
            details["h-edgeless"] = {"edge": [u, v], "chi": chi}
            break
    context = {"chi": chi, "delta": delta, "k": k}
    if failed:
        return LawVerdict(
            "walk-hypotheses",
            g,
            False,
            witness={"failed": failed, "details": details},
            context=context,
        )
    return LawVerdict("walk-hypotheses", g, True, context=context)


def _check_k(k):
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")


def choose_partition_spec(chi, k) -> PartitionSpec:
    """The k+1 group sizes used by the walk for a given chromatic number.

    r_2 = k+1, r_3..r_{k+1} = 3, and r_1 takes the rest of chi - 1.
    Feasible (r_1 >= k+1) exactly when chi >= 5k, which the walk
    hypotheses guarantee.
    """
    _check_k(k)
    if not isinstance(chi, int) or isinstance(chi, bool):
        raise InputError(f"chi must be an integer, got {chi!r}")
    if chi < 5 * k:
        raise InputError(f"chi={chi} is too small for k={k}; need chi >= {5 * k}")
    r1 = chi - 1 - (k + 1) - 3 * (k - 1)
    return PartitionSpec((r1, k + 1) + (3,) * (k - 1))


def _is_low(g, chi, v):
    return g.degree(v) == chi - 1


def normalize_singleton_to_low(g: Graph, pc: PartitionedColoring, k) -> PartitionedColoring:
    """Swap a high singleton for a low vertex of a tight component.

    Identity when the singleton is already low. Otherwise scans groups
    ascending for one where the singleton has exactly one neighbour per
    class, then swaps with the lowest adjacent low vertex there. The
    walk hypotheses make both the tight group and the low vertex exist;
    absence raises WalkHypothesisError.
    """
    if pc.graph != g:
        raise InputError("coloring does not belong to this graph")
    _check_k(k)
    chi = pc.spec.color_count
    x = pc.singleton
    if _is_low(g, chi, x):
        return pc
    xadj = g.adjacency_mask(x)
    tight = []
    for i, r in enumerate(pc.spec.sizes):
        zm = _z_mask(pc, i)
        if (xadj & zm).bit_count() == r:
            tight.append(i)
    if not tight:
        raise WalkHypothesisError(
            "tight-group-exists",
            {"singleton": x, "degree": g.degree(x), "chi": chi},
        )
    for i in tight:
        zm = _z_mask(pc, i)
        for y in _bits(zm & xadj):
            if _is_low(g, chi, y):
                return swap(pc, i, y)
    raise WalkHypothesisError(
        "low-vertex-available",
        {"singleton": x, "tight_groups": tight, "chi": chi},
    )


def walk_step(state: WalkState) -> WalkState:
    """One pass of the step loop: swap, pick the next group, bump a counter.

    The displaced vertex is the low vertex of the singleton's current
    component with the smallest counter (lowest id on ties). The next
    group is the lowest d in 2..a-1, d != p, whose component around the
    new singleton avoids every previously walked vertex except x_0;
    failing that, the walk falls back to the 0/1 pair opposite p. The
    old singleton's counter becomes the new singleton's counter plus
    one, bound to vertex identity.
    """
    pc = state.pc
    g = pc.graph
    chi = pc.spec.color_count
    x = pc.singleton
    p = state.p
    zmask = _z_mask(pc, p)
    pick = None
    pick_q = None
    for y in _bits(zmask & ~(1 << x)):
        if _is_low(g, chi, y):
            if pick_q is None or state.q[y] < pick_q:
                pick, pick_q = y, state.q[y]
    if pick is None:
        raise WalkHypothesisError(
            "low-vertex-available",
            {
                "group": p,
                "singleton": x,
                "component": list(_bits(zmask)),
                "iteration": state.iteration,
            },
        )
    new_pc = swap(pc, p, pick)
    a = len(pc.spec.sizes)
    p_next = None
    for d in range(2, a):
        if d == p:
            continue
        if not _z_mask(new_pc, d) & state.visited_mask:
            p_next = d
            break
    if p_next is None:
        p_next = 1 - p if p in (0, 1) else 0
    new_q = list(state.q)
    new_q[x] = state.q[pick] + 1
    return WalkState(
        iteration=state.iteration + 1,
        pc=new_pc,
        q=tuple(new_q),
        p=p_next,
        trajectory=state.trajectory + ((pick, p_next),),
        visited_mask=state.visited_mask | (1 << pick),
        initial_objective=state.initial_objective,
    )


def _termination(state: WalkState):
    """(p, window) when the stop condition holds, else None.

    Stops at the first state t >= 1 where, for p in {0, 1} minus the
    previous step's group (p = 0 tested first), the singleton's group-p
    component holds exactly k vertices with counter 1.
    """
    if state.iteration < 1:
        return None
    k = len(state.pc.spec.sizes) - 1
    prev_p = state.trajectory[-2][1]
    x = state.pc.singleton
    for p in (0, 1):
        if p == prev_p:
            continue
        zm = _z_mask(state.pc, p) & ~(1 << x)
        window = [y for y in _bits(zm) if state.q[y] == 1]
        if len(window) == k:
            return p, window
    return None


def _step_event(old: WalkState, new: WalkState) -> dict:
    x_old = old.pc.singleton
    x_new = new.pc.singleton
    return {
        "event": "step",
        "i": old.iteration,
        "swap": [x_old, x_new],
        "group": old.p,
        "p_next": new.p,
        "q_set": {"vertex": x_old, "value": new.q[x_old]},
        "q_source": {"vertex": x_new, "value": old.q[x_new]},
    }


def run_walk(g: Graph, k, max_iter=None):
    """Run the full walk and return one of the three outcomes.

    CliqueCertificate when the hypotheses hold and the walk terminates
    with a complete final neighbourhood (the guaranteed case);
    HypothesisViolation when a hypothesis fails up front or the walk's
    guaranteed structure is missing mid-run; IterationCapExceeded when
    max_iter (default 4 * n * chi) passes without termination. Internal
    consistency failures raise InternalCheckError instead of returning,
    since they mean a bug rather than an answer.
    """
    _check_k(k)
    verdict = check_hypotheses(g, k)
    if not verdict.holds:
        failed = tuple(verdict.witness["failed"])
        events = (
            {"event": "hypothesis-violation", "failed": list(failed)},
        )
        return HypothesisViolation(
            failed=failed, witness=verdict.witness, transcript=events
        )
    chi = verdict.context["chi"]
    if max_iter is None:
        max_iter = 4 * g.n * chi
    if max_iter < 1:
        raise InputError(f"max_iter must be >= 1, got {max_iter}")
    spec = choose_partition_spec(chi, k)
    pc = minimum_partitioned_coloring(g, spec)
    if pc is None:
        raise InternalCheckError(
            "no partitioned coloring exists despite valid hypotheses"
        )
    base = objective(pc)
    events = [
        {
            "event": "init",
            "graph": graph_key(g),
            "n": g.n,
            "chi": chi,
            "k": k,
            "spec": list(spec.sizes),
            "singleton": pc.singleton,
            "objective": base,
        }
    ]
    try:
        start = normalize_singleton_to_low(g, pc, k)
        if start is not pc:
            if objective(start) != base:
                raise InternalCheckError("normalization changed the objective")
            events.append(
                {
                    "event": "normalize",
                    "from": pc.singleton,
                    "to": start.singleton,
                }
            )
        state = WalkState(
            iteration=0,
            pc=start,
            q=(0,) * g.n,
            p=0,
            trajectory=((start.singleton, 0),),
            visited_mask=0,
            initial_objective=base,
        )
        term = None
        while True:
            term = _termination(state)
            if term is not None:
                break
            if state.iteration >= max_iter:
                events.append({"event": "cap", "cap": max_iter})
                return IterationCapExceeded(
                    cap=max_iter, state=state, transcript=tuple(events)
                )
            prev = state
            state = walk_step(state)
            if objective(state.pc) != base:
                raise InternalCheckError(
                    "walk step changed the objective, swap bookkeeping is broken"
                )
            events.append(_step_event(prev, state))
    except WalkHypothesisError as exc:
        events.append({"event": "hypothesis-violation", "failed": [exc.name]})
        return HypothesisViolation(
            failed=(exc.name,), witness=exc.witness, transcript=tuple(events)
        )
    p, window = term
    x_t = state.pc.singleton
    last_index = {}
    for j, (v, _pj) in enumerate(state.trajectory):
        last_index[v] = j
    for v in window:
        if v not in last_index:
            raise InternalCheckError(
                f"termination window vertex {v} never appeared on the trajectory"
            )
    ordered = sorted(window, key=lambda v: last_index[v])
    anchor = ordered[0]
    final_pc = swap(state.pc, p, anchor)
    if objective(final_pc) != base:
        raise InternalCheckError("final swap changed the objective")
    fmask = g.adjacency_mask(anchor) | (1 << anchor)
    fverts = list(_bits(fmask))
    events.append(
        {
            "event": "termination",
            "t": state.iteration,
            "p": p,
            "window": sorted(window),
            "exit_order": ordered,
            "final_swap": [x_t, anchor],
        }
    )
    if len(fverts) != chi:
        raise InternalCheckError(
            f"closed neighbourhood has {len(fverts)} vertices, expected chi={chi}"
        )
    for v in fverts:
        if _is_low(g, chi, v) and fmask & ~(g.adjacency_mask(v) | (1 << v)):
            raise InternalCheckError(f"low vertex {v} is not universal in F")
    highs = [v for v in fverts if g.degree(v) >= chi]
    if len(highs) > k + 1:
        raise InternalCheckError(
            f"high set has {len(highs)} vertices, more than k+1={k + 1}"
        )
    for idx, u in enumerate(highs):
        for w in highs[idx + 1 :]:
            if not g.has_edge(u, w):
                raise InternalCheckError(f"high vertices {u}, {w} are not adjacent")
    sub, _ = g.induced_subgraph(fverts)
    if not sub.is_complete():
        raise InternalCheckError("F is not complete under valid hypotheses")
    events.append({"event": "certificate", "f": fverts, "size": len(fverts)})
    return CliqueCertificate(vertices=tuple(fverts), transcript=tuple(events))
