"""Batch driver: run selected checks over a parameter grid.

Checks are registered by name; every check maps one parameter triple to
a list of report records (pass / fail / skip).  Instances are
independent, so a sweep can fan out over worker processes; records are
sorted afterwards so output never depends on scheduling.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .errors import ConfigError, EnumerationTooLarge
from .extremal import (check_mirror_weight_ordering, check_offset_weight_ordering,
                       min_pair_intersection, size_extremal_family)
from .oracle import (DEFAULT_ORACLE_CAP, conflict_graph_mis, max_sum_nonempty,
                     max_sum_nonempty_unreduced, verify_theorem)
from .orbitgraph import (build_chain_decomposition, build_orbit_graph,
                         check_biregularity, validate_decomposition)
from .report import ReportBundle, Verdict, skip_record
from .sets import Params, binom
from .bipartite import WeightedBipartiteGraph, max_weight_independent_set

CHECK_NAMES = ("theorem", "lemma1", "lemma2", "chains", "edges", "biregular",
               "hm")

#: Anchor-pair audit is quadratic in C(n, k); keep it tiny.
DEEP_AUDIT_CAP = 35


@dataclass(frozen=True)
class SweepSpec:
    """A parameter grid (k x s x either l or n) plus selected checks."""

    ks: tuple
    ss: tuple
    ls: tuple | None = None
    ns: tuple | None = None
    checks: tuple = ("theorem",)
    cap: int = DEFAULT_ORACLE_CAP
    exhaustive_n_cap: int = 12
    jobs: int = 1
    deep_audit: bool = False

    def __post_init__(self):
        if not self.ks:
            raise ConfigError("empty k range")
        if not self.ss:
            raise ConfigError("empty s range")
        if (self.ls is None) == (self.ns is None):
            raise ConfigError("specify exactly one of an l range or an n range")
        if not (self.ls or self.ns):
            raise ConfigError("empty l/n range")
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise ConfigError(f"unknown checks {sorted(unknown)}; "
                              f"available: {CHECK_NAMES}")
        if not self.checks:
            raise ConfigError("no checks selected")
        if self.cap <= 0 or self.exhaustive_n_cap <= 0:
            raise ConfigError("caps must be positive")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")

    def instances(self):
        """All valid (n, k, s) triples of the grid, ascending."""
        triples = set()
        for k in self.ks:
            for s in self.ss:
                if not 1 <= s < k:
                    continue
                if self.ls is not None:
                    for l in self.ls:
                        n = 2 * k - s + 1 + l
                        if n >= k:
                            triples.add((n, k, s))
                else:
                    for n in self.ns:
                        if n >= k:
                            triples.add((n, k, s))
        return sorted(triples)

    def to_dict(self) -> dict:
        return {
            "ks": list(self.ks), "ss": list(self.ss),
            "ls": list(self.ls) if self.ls is not None else None,
            "ns": list(self.ns) if self.ns is not None else None,
            "checks": list(self.checks), "cap": self.cap,
            "exhaustive_n_cap": self.exhaustive_n_cap,
            "jobs": self.jobs, "deep_audit": self.deep_audit,
        }


def _timed(record: dict, start: float) -> dict:
    record["millis"] = (time.perf_counter() - start) * 1000.0
    return record


def _check_theorem(params: Params, spec: SweepSpec):
    start = time.perf_counter()
    if binom(params.n, params.k) > spec.cap:
        return [skip_record(params, "theorem",
                            f"skipped: cap (C(n,k) > {spec.cap})")]
    records = [verify_theorem(params, cap=spec.cap).to_record("theorem")]
    if spec.deep_audit and binom(params.n, params.k) <= DEEP_AUDIT_CAP:
        reduced, _ = max_sum_nonempty(params, cap=spec.cap)
        start_audit = time.perf_counter()
        unreduced = max_sum_nonempty_unreduced(params, cap=spec.cap)
        records.append(_timed(Verdict(
            claim="theorem.reduction-audit",
            params=params,
            formula_value=reduced,
            oracle_value=unreduced,
            passed=reduced == unreduced,
            detail="canonical-anchor oracle vs all-anchor-pairs oracle",
        ).to_record("theorem"), start_audit))
    records[0]["millis"] = (time.perf_counter() - start) * 1000.0
    return records


def _check_lemma1(params: Params, spec: SweepSpec):
    if params.s < 2 or params.l < 0:
        return [skip_record(params, "lemma1",
                            "inapplicable: needs s >= 2 and slack l >= 0")]
    records = []
    start = time.perf_counter()
    graph = build_orbit_graph(params)
    side1 = tuple(((1, v.i), v.weight) for v in graph.side1)
    side2 = tuple(((2, v.i), v.weight) for v in graph.side2)
    edges = tuple(((1, i), (2, t)) for i, t in sorted(graph.edges))
    _, weight = max_weight_independent_set(
        WeightedBipartiteGraph(side1, side2, edges))
    want = size_extremal_family(params) - 1
    records.append(_timed(Verdict(
        claim="lemma1.orbit-certificate",
        params=params,
        formula_value=want,
        oracle_value=weight,
        passed=weight == want,
        detail="orbit-graph MWIS vs extremal family size minus one",
    ).to_record("lemma1"), start))

    if binom(params.n, params.k) <= spec.cap:
        start = time.perf_counter()
        mis = conflict_graph_mis(params, cap=spec.cap)
        records.append(_timed(Verdict(
            claim="lemma1.enumerated-mis",
            params=params,
            formula_value=weight,
            oracle_value=mis,
            passed=mis == weight,
            detail="set-level conflict-graph MIS vs orbit-level MWIS",
        ).to_record("lemma1"), start))
    return records


def _check_lemma2(params: Params, spec: SweepSpec):
    if params.l < 0:
        return [skip_record(params, "lemma2", "inapplicable: slack l < 0")]
    start = time.perf_counter()
    part1 = check_mirror_weight_ordering(params).to_record("lemma2")
    part1["millis"] = (time.perf_counter() - start) * 1000.0
    start = time.perf_counter()
    part2 = check_offset_weight_ordering(params).to_record("lemma2")
    part2["millis"] = (time.perf_counter() - start) * 1000.0
    return [part1, part2]


def _check_chains(params: Params, spec: SweepSpec):
    if params.s < 2 or params.l < 0:
        return [skip_record(params, "chains",
                            "inapplicable: needs s >= 2 and slack l >= 0")]
    start = time.perf_counter()
    graph = build_orbit_graph(params)
    dec = build_chain_decomposition(params)
    verdict = validate_decomposition(dec, graph)
    return [_timed(verdict.to_record("chains"), start)]


def _interval_rule(params: Params, i: int, t: int) -> bool:
    return params.k - params.l <= i + t <= params.k + params.s - 1


def _enumerated_min_intersection(params: Params, i: int, t: int) -> int:
    """Exhaustive minimum of |A ∩ B| over the two orbits."""
    from .orbitgraph import _orbit_masks
    best = params.k
    orbit_t = _orbit_masks(params, t)
    for a in _orbit_masks(params, i):
        for b in orbit_t:
            got = (a & b).bit_count()
            if got < best:
                best = got
    return best


def _check_edges(params: Params, spec: SweepSpec):
    if params.l < 0:
        return [skip_record(params, "edges", "inapplicable: slack l < 0")]
    start = time.perf_counter()
    profiles = range(params.s, params.k)
    graph = build_orbit_graph(params) if params.s >= 2 else None
    exhaustive = params.n <= spec.exhaustive_n_cap
    mismatches = []
    for i in profiles:
        for t in profiles:
            interval = _interval_rule(params, i, t)
            closed = min_pair_intersection(i, t, params) < params.s
            routes = {"interval": interval, "closed-form": closed}
            if graph is not None:
                routes["graph"] = graph.has_edge(i, t)
            if exhaustive:
                routes["enumerated"] = \
                    _enumerated_min_intersection(params, i, t) < params.s
            if len(set(routes.values())) != 1:
                mismatches.append({"i": i, "t": t, **routes})
    detail = (f"{len(profiles) ** 2} profile pairs agree on "
              + ("all routes" if exhaustive else "formula routes")
              + ("" if exhaustive else " (enumeration skipped: n > "
                 f"{spec.exhaustive_n_cap})"))
    verdict = Verdict(
        claim="edges.rule-equivalence",
        params=params,
        formula_value=None,
        oracle_value=None,
        passed=not mismatches,
        witness=mismatches or None,
        detail=detail if not mismatches else f"mismatches: {mismatches[:3]}",
    )
    return [_timed(verdict.to_record("edges"), start)]


def _check_biregular(params: Params, spec: SweepSpec):
    if params.s < 2 or params.l < 0:
        return [skip_record(params, "biregular",
                            "inapplicable: needs s >= 2 and slack l >= 0")]
    start = time.perf_counter()
    graph = build_orbit_graph(params)
    failures = []
    degrees = {}
    try:
        for i, t in sorted(graph.edges):
            verdict = check_biregularity(params, i, t)
            degrees[f"({i},{t})"] = verdict.witness["degrees"]
            if not verdict.passed:
                failures.append((i, t, verdict.detail))
    except EnumerationTooLarge as exc:
        return [skip_record(params, "biregular", f"skipped: cap ({exc})")]
    verdict = Verdict(
        claim="edges.biregular-premise",
        params=params,
        formula_value=None,
        oracle_value=None,
        passed=not failures,
        witness={"degrees": degrees},
        detail=(f"{len(graph.edges)} conflicting orbit pairs, all biregular"
                if not failures else f"failures: {failures[:3]}"),
    )
    return [_timed(verdict.to_record("biregular"), start)]


def _check_hm(params: Params, spec: SweepSpec):
    if params.s != 1:
        return [skip_record(params, "hm", "inapplicable: needs s = 1")]
    if params.l < 0:
        return [skip_record(params, "hm", "inapplicable: slack l < 0")]
    start = time.perf_counter()
    n, k = params.n, params.k
    identity = binom(n, k) - binom(n - k, k)
    verdict = Verdict(
        claim="hm.size-identity",
        params=params,
        formula_value=identity,
        oracle_value=size_extremal_family(params),
        passed=size_extremal_family(params) == identity,
        detail="s=1 extremal size vs C(n,k) - C(n-k,k)",
    )
    return [_timed(verdict.to_record("hm"), start)]


CHECKS = {
    "theorem": _check_theorem,
    "lemma1": _check_lemma1,
    "lemma2": _check_lemma2,
    "chains": _check_chains,
    "edges": _check_edges,
    "biregular": _check_biregular,
    "hm": _check_hm,
}


def _run_instance(spec: SweepSpec, triple) -> list:
    n, k, s = triple
    params = Params(n, k, s)
    records = []
    for name in spec.checks:
        records.extend(CHECKS[name](params, spec))
    return records


def run_sweep(spec: SweepSpec) -> ReportBundle:
    """Execute the sweep and return a deterministic report bundle."""
    start = time.perf_counter()
    triples = spec.instances()
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            chunks = pool.map(_run_instance, [spec] * len(triples), triples)
            records = [rec for chunk in chunks for rec in chunk]
    else:
        records = [rec for triple in triples
                   for rec in _run_instance(spec, triple)]
    records.sort(key=lambda r: (r["n"], r["k"], r["s"], r["check"], r["claim"]))
    return ReportBundle(
        tool="crossint",
        version=__version__,
        spec=spec.to_dict(),
        records=records,
        runtime_millis=(time.perf_counter() - start) * 1000.0,
    )
