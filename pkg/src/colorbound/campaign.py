"""Bulk law checking across generated, random, or loaded graphs.

A campaign pairs a graph source with a law set, tallies verdicts, and
re-verifies every violation from its own witness before reporting.
Chunks of the generation index space can run on worker processes; the
report is assembled in generation order, so for fixed parameters and
seed the result is byte-identical at any parallelism.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import _graph_from_code, gnp_random
from .degrees import exact_fraction
from .dimacs import parse_dimacs
from .errors import InputError, InternalCheckError
from .graph import Graph
from .laws import LAW_NAMES, check_law, check_laws

ENUM_CAP_ENV = "COLORBOUND_ENUM_CAP"
GNP_CAP_ENV = "COLORBOUND_GNP_CAP"
DEFAULT_ENUM_CAP = 10
DEFAULT_GNP_CAP = 40

_SEED_MOD = 1 << 64


@dataclass(frozen=True)
class EnumerateSource:
    """Every labelled graph on exactly n vertices, in edge-code order.

    connected_only drops disconnected graphs (the default; the bounds
    under test concern connected graphs, and counts stay canonical).
    """

    n: int
    connected_only: bool = True

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError(f"enumerate needs n >= 1, got {self.n!r}")

    def describe(self):
        return {"kind": "enumerate", "n": self.n, "connected_only": self.connected_only}


@dataclass(frozen=True)
class GnpSource:
    """count samples of G(n, p) with per-index seeds derived from the campaign seed."""

    n: int
    p: Fraction
    count: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError(f"gnp needs n >= 1, got {self.n!r}")
        p = exact_fraction(self.p, "p")
        if not 0 <= p <= 1:
            raise InputError(f"p must be in [0, 1], got {p}")
        object.__setattr__(self, "p", p)
        if not isinstance(self.count, int) or isinstance(self.count, bool) or self.count < 1:
            raise InputError(f"gnp needs count >= 1, got {self.count!r}")

    def describe(self):
        return {"kind": "gnp", "n": self.n, "p": str(self.p), "count": self.count}


@dataclass(frozen=True)
class FileSource:
    """DIMACS files checked in the given order."""

    paths: tuple

    def __post_init__(self):
        paths = tuple(self.paths)
        object.__setattr__(self, "paths", paths)
        if not paths:
            raise InputError("file source needs at least one path")

    def describe(self):
        return {"kind": "files", "paths": [str(p) for p in self.paths]}


@dataclass(frozen=True)
class CampaignReport:
    laws: tuple
    source: dict
    counts: dict
    seed: int
    wall_time_ms: int
    violations: list = field(default_factory=list)

    def as_dict(self):
        """JSON-ready form; wall_time_ms is the only unstable field."""
        return {
            "laws": list(self.laws),
            "source": dict(self.source),
            "counts": dict(self.counts),
            "seed": self.seed,
            "wall_time_ms": self.wall_time_ms,
            "violations": [dict(v) for v in self.violations],
        }


def _tally(g, laws, counts, violations, source):
    counts["graphs"] += 1
    for verdict in check_laws(g, laws):
        if verdict.holds is True:
            counts["held"] += 1
        elif verdict.holds is False:
            counts["violated"] += 1
            entry = verdict.as_dict()
            entry["source"] = source
            violations.append(entry)
        else:
            counts["skipped"] += 1


def _new_counts():
    return {"graphs": 0, "held": 0, "skipped": 0, "violated": 0}


def _enumerate_chunk(args):
    n, start, stop, laws, connected_only = args
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    counts = _new_counts()
    violations = []
    for code in range(start, stop):
        g = _graph_from_code(n, pairs, code)
        if connected_only and not g.is_connected():
            continue
        _tally(g, laws, counts, violations, {"kind": "enumerate", "n": n, "index": code})
    return counts, violations


def _gnp_chunk(args):
    n, p_str, seed, start, stop, laws = args
    p = Fraction(p_str)
    counts = _new_counts()
    violations = []
    for i in range(start, stop):
        seed_i = (seed + i) % _SEED_MOD
        g = gnp_random(n, p, seed_i)
        source = {"kind": "gnp", "n": n, "index": i, "seed": seed_i}
        _tally(g, laws, counts, violations, source)
    return counts, violations


def _file_chunk(args):
    path, laws = args
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    g = parse_dimacs(text)
    counts = _new_counts()
    violations = []
    _tally(g, laws, counts, violations, {"kind": "file", "path": str(path)})
    return counts, violations


def _ranges(total, floor, jobs):
    """Split range(total) into contiguous chunks of at least floor items."""
    if total == 0:
        return []
    size = max(floor, -(-total // (jobs * 4))) if jobs > 1 else total
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _cap_value(env_name, default, override):
    if override is not None:
        value = override
    else:
        raw = os.environ.get(env_name)
        if raw is None:
            return default
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"{env_name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"cap must be >= 1, got {value}")
    return value


def _validate_laws(laws):
    laws = tuple(dict.fromkeys(laws))
    if not laws:
        raise InputError("campaign needs at least one law")
    for law in laws:
        if law not in LAW_NAMES:
            raise InputError(f"unknown law {law!r}; known: {', '.join(LAW_NAMES)}")
    return laws


def _reverify(violations):
    # a violation that cannot be rebuilt and reconfirmed from its own
    # witness must never reach the report
    for entry in violations:
        witness = entry.get("witness")
        if not witness:
            raise InternalCheckError(f"{entry['law']} violation lacks a witness")
        g = Graph(witness["n"], [tuple(e) for e in witness["edges"]])
        again = check_law(g, entry["law"])
        if again.holds is not False:
            raise InternalCheckError(f"{entry['law']} violation did not re-verify")


def run_campaign(source, laws, seed=0, jobs=1, cap=None) -> CampaignReport:
    """Check every graph from source against every law.

    seed only influences gnp sources. jobs > 1 fans chunks out to a
    process pool; reports are independent of the worker count. cap
    overrides the per-kind default size cap, otherwise taken from
    COLORBOUND_ENUM_CAP / COLORBOUND_GNP_CAP.
    """
    laws = _validate_laws(laws)
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise InputError(f"jobs must be an integer >= 1, got {jobs!r}")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise InputError(f"seed must be an integer, got {seed!r}")
    started = time.perf_counter()
    if isinstance(source, EnumerateSource):
        limit = _cap_value(ENUM_CAP_ENV, DEFAULT_ENUM_CAP, cap)
        if source.n > limit:
            raise InputError(f"enumerate n={source.n} exceeds cap {limit}")
        total = 1 << (source.n * (source.n - 1) // 2)
        chunks = [
            (source.n, a, b, laws, source.connected_only)
            for a, b in _ranges(total, 4096, jobs)
        ]
        worker = _enumerate_chunk
    elif isinstance(source, GnpSource):
        limit = _cap_value(GNP_CAP_ENV, DEFAULT_GNP_CAP, cap)
        if source.n > limit:
            raise InputError(f"gnp n={source.n} exceeds cap {limit}")
        chunks = [
            (source.n, str(source.p), seed % _SEED_MOD, a, b, laws)
            for a, b in _ranges(source.count, 16, jobs)
        ]
        worker = _gnp_chunk
    elif isinstance(source, FileSource):
        chunks = [(path, laws) for path in source.paths]
        worker = _file_chunk
    else:
        raise InputError(f"unknown campaign source {source!r}")

    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, chunks))
    else:
        results = [worker(chunk) for chunk in chunks]

    counts = _new_counts()
    violations = []
    for chunk_counts, chunk_violations in results:
        for key, value in chunk_counts.items():
            counts[key] += value
        violations.extend(chunk_violations)
    counts["checked"] = counts["held"] + counts["violated"]
    _reverify(violations)
    wall_ms = int((time.perf_counter() - started) * 1000)
    return CampaignReport(
        laws=laws,
        source=source.describe(),
        counts=counts,
        seed=seed,
        wall_time_ms=wall_ms,
        violations=violations,
    )
