"""DIMACS col format: text in, Graph out, and a bit-exact writer."""

from __future__ import annotations

from .errors import InputError
from .graph import Graph


class DimacsError(InputError):
    """Malformed DIMACS input. Carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def parse_dimacs(text):
    """Parse DIMACS col text into a Graph.

    Accepts comment lines ("c ..."), one problem line ("p edge <n> <m>"),
    and edge lines ("e <u> <v>") with 1-based vertex ids.  Duplicate edge
    lines collapse to a single edge; the declared edge count is not
    enforced against the collapsed total.  Self-loops, out-of-range ids,
    non-integer tokens, and unknown line types raise DimacsError with
    the offending line number.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError(f"expected 'p edge <n> <m>', got {raw!r}", lineno)
            n = _int_token(fields[2], lineno)
            _int_token(fields[3], lineno)
            if n < 0:
                raise DimacsError(f"vertex count {n} is negative", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsError("edge line before problem line", lineno)
            if len(fields) != 3:
                raise DimacsError(f"expected 'e <u> <v>', got {raw!r}", lineno)
            u = _int_token(fields[1], lineno)
            v = _int_token(fields[2], lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise DimacsError(f"vertex id {w} outside 1..{n}", lineno)
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line")
    return Graph(n, edges)


def _int_token(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise DimacsError(f"expected an integer, got {token!r}", lineno) from None


def write_dimacs(g):
    """Render a Graph as DIMACS col text, edge lines sorted ascending."""
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
