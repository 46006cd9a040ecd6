"""Verdict record shared by every bound and lemma checker."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .graph import Graph


def graph_key(g: Graph) -> str:
    """Short stable fingerprint of a graph, for logs and dedup."""
    payload = f"{g.n}:" + ";".join(f"{u},{v}" for u, v in g.edges())
    return hashlib.sha1(payload.encode("ascii")).hexdigest()[:12]


@dataclass(frozen=True)
class LawVerdict:
    """Outcome of checking one law on one graph.

    holds is None exactly when the check was skipped because the law's
    precondition failed, in which case `skipped` names the reason.
    A violated verdict carries a witness with enough data (always the
    edge list plus the offending quantities) to re-check independently.
    """

    law: str
    graph: Graph
    holds: bool | None
    witness: dict | None = None
    skipped: str | None = None
    context: dict | None = None

    @property
    def status(self) -> str:
        if self.holds is None:
            return "skipped"
        return "held" if self.holds else "violated"

    def as_dict(self) -> dict:
        out = {
            "law": self.law,
            "graph_key": graph_key(self.graph),
            "n": self.graph.n,
            "m": self.graph.edge_count(),
            "status": self.status,
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        if self.witness is not None:
            out["witness"] = self.witness
        if self.context is not None:
            out["context"] = self.context
        return out
