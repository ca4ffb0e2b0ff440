"""Randomized self-test suites: fast paths against oracles, bounds, coloring.

Each suite runs a trials-scaled batch of instances.  On failure the
offending graph is greedily shrunk (vertices removed while the failure
persists) so the report carries a small DIMACS counterexample.

The suites reach the library through module attributes (mis.small_mis_filtered
and friends), so a test harness can inject faults by monkeypatching those
modules and watch the selftest catch them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import chromatic, graph, mis, oracles
from .graph import Graph, induced_subgraph, to_dimacs


@dataclass
class Failure:
    suite: str
    description: str
    counterexample: Graph


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SelftestReport:
    results: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _shrink(g: Graph, still_failing) -> Graph:
    """Greedy 1-vertex-at-a-time minimization of a failing instance."""
    improved = True
    while improved and g.n > 0:
        improved = False
        for v in range(g.n):
            h = induced_subgraph(g, g.full_mask & ~(1 << v))
            try:
                if still_failing(h):
                    g = h
                    improved = True
                    break
            except Exception:
                g = h  # crashing on a smaller instance still counts as failing
                improved = True
                break
    return g


def _random_graph(rng: random.Random, max_n: int) -> Graph:
    n = rng.randint(1, max_n)
    p = rng.choice([0.2, 0.5, 0.8])
    return graph.gen_gnp(n, p, rng.randrange(1 << 30))


def _suite_mis_oracle(rng: random.Random, trials: int) -> SuiteResult:
    """small_mis_filtered equals the brute-force MIS scan for every k."""
    res = SuiteResult("mis-oracle")

    def fails(g: Graph) -> bool:
        every = oracles.brute_force_all_mis(g, g.full_mask)
        for k in range(g.n + 1):
            want = {m for m in every if m.bit_count() <= k}
            if mis.small_mis_filtered(g, g.full_mask, k) != want:
                return True
        return False

    for _ in range(trials):
        g = _random_graph(rng, 9)
        res.cases += 1
        if fails(g):
            small = _shrink(g, fails)
            res.failures.append(Failure(res.name, "filtered enumeration disagrees with brute force", small))
    return res


def _suite_bound(rng: random.Random, trials: int) -> SuiteResult:
    """Counting bound and cube-compared 3**(n/3) ceiling on random graphs."""
    res = SuiteResult("bound")

    def fails(g: Graph) -> bool:
        for k in range(g.n + 1):
            count = len(mis.small_mis_filtered(g, g.full_mask, k))
            if count > mis.mis_bound(g.n, k):
                return True
        return not oracles.moon_moser_check(g)

    for _ in range(trials):
        g = _random_graph(rng, 12)
        res.cases += 1
        if fails(g):
            small = _shrink(g, fails)
            res.failures.append(Failure(res.name, "a counting bound is violated", small))
    return res


def _suite_tightness(trials: int) -> SuiteResult:
    """Exact 3**a * 4**b counts on the triangle/K4 family."""
    res = SuiteResult("tightness")

    def fails_pair(a: int, b: int) -> bool:
        g = graph.gen_triangles_k4s(a, b)
        count = len(mis.small_mis_filtered(g, g.full_mask, a + b))
        return count != 3**a * 4**b or count != mis.mis_bound(g.n, a + b)

    pairs = [(a, b) for a in range(5) for b in range(5 - a)]
    for a, b in pairs[:trials] if trials < len(pairs) else pairs:
        res.cases += 1
        if fails_pair(a, b):
            res.failures.append(
                Failure(res.name, f"count != 3^{a} * 4^{b} on {a} triangles + {b} K4s",
                        graph.gen_triangles_k4s(a, b)))
    return res


def _suite_coloring(rng: random.Random, trials: int) -> SuiteResult:
    """DP chromatic number equals oracle; extracted coloring is proper and tight."""
    res = SuiteResult("coloring")

    def fails(g: Graph) -> bool:
        chi, table = chromatic.chromatic_number(g)
        if chi != oracles.brute_force_chromatic(g):
            return True
        col = chromatic.extract_coloring(g, table)
        return not graph.is_proper_coloring(g, col) or col.num_colors != chi

    for _ in range(trials):
        g = _random_graph(rng, 8)
        res.cases += 1
        if fails(g):
            small = _shrink(g, fails)
            res.failures.append(Failure(res.name, "chromatic DP or extraction disagrees with oracle", small))
    return res


def run_selftest(seed: int = 0, trials: int = 25) -> SelftestReport:
    """Run all suites; trials scales the number of random instances per suite."""
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    rng = random.Random(seed)
    return SelftestReport(results=[
        _suite_mis_oracle(rng, trials),
        _suite_bound(rng, trials),
        _suite_tightness(trials),
        _suite_coloring(rng, trials),
    ])


def format_report(report: SelftestReport) -> str:
    lines = []
    for r in report.results:
        status = "ok" if r.ok else f"{len(r.failures)} FAILED"
        lines.append(f"suite {r.name}: {r.cases} cases, {status}")
        for f in r.failures:
            lines.append(f"  failure: {f.description}")
            lines.append("  counterexample (DIMACS):")
            for ln in to_dimacs(f.counterexample).rstrip("\n").splitlines():
                lines.append(f"    {ln}")
    return "\n".join(lines)
