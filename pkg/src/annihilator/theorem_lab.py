"""Mechanical checkers for the characterization claims, plus search drivers.

Each ``check_*`` function classifies one graph as Holds / NotApplicable /
Violated for one numbered claim.  ``run_search`` sweeps a graph source
(exhaustive labeled enumeration, a graph6 stream, seeded random samples, or
a generator family) through a set of checks and tallies the verdicts.

The two-case equality condition shared by several claims reads: when
a >= n/2 it demands alpha_crit == a, and when a == (n-1)/2 it demands that
deleting some single vertex raises the critical independence number to a.
Exactly one of the two cases applies to any graph because a >= floor(n/2)
always holds.
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from . import families as families_mod
from .graph_core import (
    Graph,
    encode_graph6,
    find_claw,
    is_bipartite,
    is_connected,
    parse_graph6,
    remove_vertices,
)
from .invariants import (
    SolverLimitError,
    _enumerate_maximum_independent_sets,
    annihilation_number,
    critical_independence_number,
    independence_number_exact,
    is_annihilating_set,
    maximum_matching,
)


class TheoremId(str, enum.Enum):
    LEMMA_IF = "LEMMA_IF"
    THM1_ONLY_IF = "THM1_ONLY_IF"
    THM4_BIPARTITE = "THM4_BIPARTITE"
    LEMMA5_REMOVABLE = "LEMMA5_REMOVABLE"
    THM6_CLAWFREE = "THM6_CLAWFREE"
    COR3_FORWARD = "COR3_FORWARD"
    COR3_BACKWARD = "COR3_BACKWARD"
    CONJ34_ONLY_IF = "CONJ34_ONLY_IF"


#: Claims that are proven, hence never expected to produce a violation.
EXPECTED_TO_HOLD = frozenset(
    {
        TheoremId.LEMMA_IF,
        TheoremId.THM4_BIPARTITE,
        TheoremId.THM6_CLAWFREE,
        TheoremId.LEMMA5_REMOVABLE,
    }
)


class Status(str, enum.Enum):
    HOLDS = "Holds"
    NOT_APPLICABLE = "NotApplicable"
    VIOLATED = "Violated"


@dataclass
class TheoremVerdict:
    theorem_id: TheoremId
    status: Status
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        payload = {"theorem": self.theorem_id.value, "status": self.status.value}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


_UNSET = object()


class GraphFacts:
    """Lazily computed invariants shared by several checkers on one graph."""

    def __init__(self, g: Graph, limit: Optional[int] = None):
        self.graph = g
        self.limit = limit
        self._cache: dict[str, object] = {}

    def _get(self, key: str, compute: Callable):
        value = self._cache.get(key, _UNSET)
        if value is _UNSET:
            value = compute()
            self._cache[key] = value
        return value

    @property
    def alpha(self) -> int:
        return self._get("alpha", lambda: independence_number_exact(self.graph, self.limit)[0])

    @property
    def a(self) -> int:
        return self._get("a", lambda: annihilation_number(self.graph)[0])

    @property
    def alpha_crit(self) -> int:
        return self._get("alpha_crit", lambda: critical_independence_number(self.graph)[0])

    @property
    def mu(self) -> int:
        return self._get("mu", lambda: maximum_matching(self.graph)[0])

    @property
    def coloring(self) -> Optional[list[int]]:
        return self._get("coloring", lambda: is_bipartite(self.graph))

    @property
    def connected(self) -> bool:
        return self._get("connected", lambda: is_connected(self.graph))

    @property
    def claw_free(self) -> bool:
        return self._get("claw_free", lambda: find_claw(self.graph) is None)

    @property
    def maximum_independent_sets(self) -> list[int]:
        return self._get(
            "max_sets", lambda: _enumerate_maximum_independent_sets(self.graph)
        )


def _facts(g: Graph, facts: Optional[GraphFacts]) -> GraphFacts:
    return facts if facts is not None else GraphFacts(g)


def _equality_condition(facts: GraphFacts) -> tuple[bool, dict]:
    """Evaluate the two-case condition; returns (met, explanatory values)."""
    g = facts.graph
    n, a = g.n, facts.a
    if 2 * a >= n:
        met = facts.alpha_crit == a
        return met, {"case": "a>=n/2", "alpha_crit": facts.alpha_crit, "a": a}
    # Here 2a == n - 1 by the floor(n/2) lower bound on a.
    for v in range(n):
        reduced = remove_vertices(g, {v})
        if critical_independence_number(reduced)[0] == a:
            return True, {"case": "a=(n-1)/2", "vertex": v, "a": a}
    return False, {"case": "a=(n-1)/2", "vertex": None, "a": a}


def check_if_direction(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """Proven direction: the two-case condition forces alpha == a."""
    facts = _facts(g, facts)
    met, detail = _equality_condition(facts)
    if not met:
        return TheoremVerdict(TheoremId.LEMMA_IF, Status.NOT_APPLICABLE)
    if facts.alpha == facts.a:
        return TheoremVerdict(TheoremId.LEMMA_IF, Status.HOLDS)
    witness = {"n": g.n, "alpha": facts.alpha, "a": facts.a, **detail}
    return TheoremVerdict(TheoremId.LEMMA_IF, Status.VIOLATED, witness)


def check_only_if(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """Refuted converse: alpha == a should force the two-case condition."""
    facts = _facts(g, facts)
    if facts.alpha != facts.a:
        return TheoremVerdict(TheoremId.THM1_ONLY_IF, Status.NOT_APPLICABLE)
    met, detail = _equality_condition(facts)
    if met:
        return TheoremVerdict(TheoremId.THM1_ONLY_IF, Status.HOLDS)
    witness = {"n": g.n, "alpha": facts.alpha, "a": facts.a, **detail}
    return TheoremVerdict(TheoremId.THM1_ONLY_IF, Status.VIOLATED, witness)


def check_bipartite_theorem(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """For bipartite graphs: alpha == a exactly when alpha_crit == a."""
    facts = _facts(g, facts)
    if facts.coloring is None:
        return TheoremVerdict(TheoremId.THM4_BIPARTITE, Status.NOT_APPLICABLE)
    if (facts.alpha == facts.a) == (facts.alpha_crit == facts.a):
        return TheoremVerdict(TheoremId.THM4_BIPARTITE, Status.HOLDS)
    witness = {"n": g.n, "alpha": facts.alpha, "a": facts.a, "alpha_crit": facts.alpha_crit}
    return TheoremVerdict(TheoremId.THM4_BIPARTITE, Status.VIOLATED, witness)


def _vertex_avoidable(g: Graph, alpha: int, v: int) -> bool:
    """True when some maximum independent set omits ``v``."""
    return independence_number_exact(remove_vertices(g, {v}))[0] == alpha


def check_removable_vertex_lemma(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """Connected claw-free graphs with a == (n-1)/2 own a removable vertex.

    Removable means: avoidable by some maximum independent set while keeping
    the graph connected.  Avoidability is tested via alpha(G - v) == alpha(G).
    """
    facts = _facts(g, facts)
    if not (facts.connected and facts.claw_free and 2 * facts.a == g.n - 1):
        return TheoremVerdict(TheoremId.LEMMA5_REMOVABLE, Status.NOT_APPLICABLE)
    alpha = facts.alpha
    for v in range(g.n):
        reduced = remove_vertices(g, {v})
        if is_connected(reduced) and independence_number_exact(reduced)[0] == alpha:
            return TheoremVerdict(
                TheoremId.LEMMA5_REMOVABLE, Status.HOLDS, {"vertex": v}
            )
    witness = {"n": g.n, "alpha": alpha, "a": facts.a, "candidates_checked": g.n}
    return TheoremVerdict(TheoremId.LEMMA5_REMOVABLE, Status.VIOLATED, witness)


def check_clawfree_theorem(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """Connected claw-free graphs: the full biconditional version of the claim."""
    facts = _facts(g, facts)
    if not (facts.connected and facts.claw_free):
        return TheoremVerdict(TheoremId.THM6_CLAWFREE, Status.NOT_APPLICABLE)
    met, detail = _equality_condition(facts)
    if (facts.alpha == facts.a) == met:
        return TheoremVerdict(TheoremId.THM6_CLAWFREE, Status.HOLDS)
    witness = {"n": g.n, "alpha": facts.alpha, "a": facts.a, **detail}
    return TheoremVerdict(TheoremId.THM6_CLAWFREE, Status.VIOLATED, witness)


def _max_sets_are_annihilating(facts: GraphFacts, maximal: bool) -> tuple[bool, Optional[list[int]]]:
    """Check every maximum independent set against an annihilating criterion.

    With ``maximal`` False the criterion is maximum cardinality (|s| == a);
    with True it is maximality under single-vertex extension.
    """
    g = facts.graph
    a = facts.a
    for mask in facts.maximum_independent_sets:
        members = [v for v in range(g.n) if mask >> v & 1]
        if not is_annihilating_set(g, members):
            return False, members
        if maximal:
            total = sum(g.degree(v) for v in members)
            if any(
                total + g.degree(v) <= g.m
                for v in range(g.n)
                if not mask >> v & 1
            ):
                return False, members
        elif len(members) != a:
            return False, members
    return True, None


def check_corollary3(
    g: Graph, facts: Optional[GraphFacts] = None
) -> tuple[TheoremVerdict, TheoremVerdict]:
    """Both directions of the refuted characterization of alpha == a via
    the combination "König-Egerváry and every maximum independent set is a
    maximum annihilating set", applicable when a >= n/2."""
    facts = _facts(g, facts)
    if 2 * facts.a < g.n:
        return (
            TheoremVerdict(TheoremId.COR3_FORWARD, Status.NOT_APPLICABLE),
            TheoremVerdict(TheoremId.COR3_BACKWARD, Status.NOT_APPLICABLE),
        )
    equality = facts.alpha == facts.a
    koenig = facts.alpha + facts.mu == g.n
    # Enumerating all maximum independent sets is the expensive part; a
    # failed König-Egerváry test already settles the right-hand side.
    bad_set = None
    if koenig:
        all_max_annihilating, bad_set = _max_sets_are_annihilating(facts, maximal=False)
        rhs = all_max_annihilating
    else:
        rhs = False
    witness = {
        "n": g.n,
        "alpha": facts.alpha,
        "a": facts.a,
        "mu": facts.mu,
        "koenig_egervary": koenig,
    }
    if bad_set is not None:
        witness["offending_independent_set"] = bad_set

    if not equality:
        forward = TheoremVerdict(TheoremId.COR3_FORWARD, Status.NOT_APPLICABLE)
    elif rhs:
        forward = TheoremVerdict(TheoremId.COR3_FORWARD, Status.HOLDS)
    else:
        forward = TheoremVerdict(TheoremId.COR3_FORWARD, Status.VIOLATED, dict(witness))

    if not rhs:
        backward = TheoremVerdict(TheoremId.COR3_BACKWARD, Status.NOT_APPLICABLE)
    elif equality:
        backward = TheoremVerdict(TheoremId.COR3_BACKWARD, Status.HOLDS)
    else:
        backward = TheoremVerdict(TheoremId.COR3_BACKWARD, Status.VIOLATED, dict(witness))
    return forward, backward


def check_conjecture34(g: Graph, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    """Only-if direction of the maximal-annihilating variant of the claim."""
    facts = _facts(g, facts)
    if 2 * facts.a < g.n or facts.alpha != facts.a:
        return TheoremVerdict(TheoremId.CONJ34_ONLY_IF, Status.NOT_APPLICABLE)
    koenig = facts.alpha + facts.mu == g.n
    bad_set = None
    if koenig:
        all_maximal, bad_set = _max_sets_are_annihilating(facts, maximal=True)
    else:
        all_maximal = False
    if koenig and all_maximal:
        return TheoremVerdict(TheoremId.CONJ34_ONLY_IF, Status.HOLDS)
    witness = {
        "n": g.n,
        "alpha": facts.alpha,
        "a": facts.a,
        "mu": facts.mu,
        "koenig_egervary": koenig,
    }
    if bad_set is not None:
        witness["offending_independent_set"] = bad_set
    return TheoremVerdict(TheoremId.CONJ34_ONLY_IF, Status.VIOLATED, witness)


def evaluate_checks(
    g: Graph, checks: Sequence[TheoremId], facts: Optional[GraphFacts] = None
) -> dict[TheoremId, TheoremVerdict]:
    """Run the requested checkers on one graph with shared cached facts."""
    facts = _facts(g, facts)
    out: dict[TheoremId, TheoremVerdict] = {}
    simple: dict[TheoremId, Callable] = {
        TheoremId.LEMMA_IF: check_if_direction,
        TheoremId.THM1_ONLY_IF: check_only_if,
        TheoremId.THM4_BIPARTITE: check_bipartite_theorem,
        TheoremId.LEMMA5_REMOVABLE: check_removable_vertex_lemma,
        TheoremId.THM6_CLAWFREE: check_clawfree_theorem,
        TheoremId.CONJ34_ONLY_IF: check_conjecture34,
    }
    wanted = list(checks)
    if TheoremId.COR3_FORWARD in wanted or TheoremId.COR3_BACKWARD in wanted:
        forward, backward = check_corollary3(g, facts)
        if TheoremId.COR3_FORWARD in wanted:
            out[TheoremId.COR3_FORWARD] = forward
        if TheoremId.COR3_BACKWARD in wanted:
            out[TheoremId.COR3_BACKWARD] = backward
    for tid in wanted:
        if tid in simple:
            out[tid] = simple[tid](g, facts)
    return out


# ---------------------------------------------------------------------------
# Graph sources
# ---------------------------------------------------------------------------

_ENUMERATION_MAX_N = 7


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, in edge-mask order."""
    if n > _ENUMERATION_MAX_N:
        raise ValueError(
            f"exhaustive enumeration supports n <= {_ENUMERATION_MAX_N}; "
            "stream a graph6 corpus for larger orders"
        )
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_mask(n, mask, pairs)


def graph_from_edge_mask(
    n: int, mask: int, pairs: Optional[list[tuple[int, int]]] = None
) -> Graph:
    """Labeled graph for one edge subset; ``pairs`` may be precomputed."""
    if pairs is None:
        pairs = list(itertools.combinations(range(n), 2))
    masks = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        mask ^= low
    return Graph.from_masks(n, masks)


def sample_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) sample; a fixed seed fixes the graph exactly."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return Graph.from_masks(n, masks)


@dataclass(frozen=True)
class EnumerationSource:
    """All labeled graphs with min_n <= n <= max_n."""

    max_n: int
    min_n: int = 0

    def describe(self) -> str:
        return f"labeled graphs {self.min_n} <= n <= {self.max_n}"


@dataclass(frozen=True)
class Graph6Source:
    """Graph6 strings, one per line; ``origin`` is echoing only."""

    lines: tuple[str, ...]
    origin: str = "graph6 stream"

    def describe(self) -> str:
        return self.origin


@dataclass(frozen=True)
class RandomSource:
    """``count`` seeded G(n, p) samples with seeds seed, seed+1, ..."""

    n: int
    p: float
    count: int
    seed: int

    def describe(self) -> str:
        return f"random G({self.n},{self.p}) x{self.count} seed={self.seed}"


@dataclass(frozen=True)
class FamilySource:
    """Instances of one generator family over a parameter range."""

    name: str
    parameter_sets: tuple[tuple[tuple[str, int], ...], ...]

    def describe(self) -> str:
        return f"family {self.name} x{len(self.parameter_sets)}"


SearchSource = Union[EnumerationSource, Graph6Source, RandomSource, FamilySource]


def _source_graphs(source: SearchSource) -> Iterator[Graph]:
    if isinstance(source, EnumerationSource):
        for n in range(source.min_n, source.max_n + 1):
            yield from enumerate_labeled_graphs(n)
    elif isinstance(source, Graph6Source):
        for line in source.lines:
            line = line.strip()
            if line:
                yield parse_graph6(line)
    elif isinstance(source, RandomSource):
        for i in range(source.count):
            yield sample_random_graph(source.n, source.p, source.seed + i)
    elif isinstance(source, FamilySource):
        for params in source.parameter_sets:
            yield families_mod.build_family(source.name, **dict(params)).graph
    else:
        raise TypeError(f"unsupported source {source!r}")


# ---------------------------------------------------------------------------
# Search driver
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    source: str
    checks: list[str]
    graphs_examined: int = 0
    tallies: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    errors: int = 0
    wall_time: float = 0.0

    def violated(self, theorem: TheoremId) -> int:
        return self.tallies.get(theorem.value, {}).get(Status.VIOLATED.value, 0)

    def unexpected_violations(self) -> int:
        return sum(
            self.violated(tid) for tid in EXPECTED_TO_HOLD if tid.value in self.tallies
        )

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "checks": list(self.checks),
            "graphs_examined": self.graphs_examined,
            "tallies": self.tallies,
            "violations": [list(item) for item in self.violations],
            "errors": self.errors,
            "wall_time": self.wall_time,
        }


def _new_tally() -> dict:
    return {status.value: 0 for status in Status} | {"Error": 0}


def _check_batch(
    graphs: Iterable[Graph], checks: Sequence[TheoremId], early_exit: bool = False
) -> tuple[int, dict, list, int]:
    examined = 0
    errors = 0
    tallies = {tid.value: _new_tally() for tid in checks}
    violations = []
    for g in graphs:
        examined += 1
        facts = GraphFacts(g)
        try:
            verdicts = evaluate_checks(g, checks, facts)
        except SolverLimitError:
            errors += 1
            for tid in checks:
                tallies[tid.value]["Error"] += 1
            continue
        stop = False
        for tid, verdict in verdicts.items():
            tallies[tid.value][verdict.status.value] += 1
            if verdict.status is Status.VIOLATED:
                violations.append((encode_graph6(g), tid.value))
                if early_exit:
                    stop = True
        if stop:
            break
    return examined, tallies, violations, errors


def _merge_tallies(total: dict, part: dict) -> None:
    for theorem, counts in part.items():
        bucket = total.setdefault(theorem, _new_tally())
        for key, value in counts.items():
            bucket[key] += value


def _search_chunk(payload: tuple) -> tuple[int, dict, list, int]:
    kind, data, check_values = payload
    checks = [TheoremId(value) for value in check_values]
    if kind == "masks":
        n, lo, hi = data
        pairs = list(itertools.combinations(range(n), 2))
        graphs = (graph_from_edge_mask(n, mask, pairs) for mask in range(lo, hi))
    elif kind == "graph6":
        graphs = (parse_graph6(line) for line in data)
    else:  # pragma: no cover - internal dispatch
        raise ValueError(kind)
    return _check_batch(graphs, checks)


def _parallel_payloads(source: SearchSource, checks: Sequence[TheoremId]) -> Iterator[tuple]:
    check_values = tuple(tid.value for tid in checks)
    chunk = 1 << 15
    if isinstance(source, EnumerationSource):
        for n in range(source.min_n, source.max_n + 1):
            total = 1 << (n * (n - 1) // 2)
            for lo in range(0, total, chunk):
                yield ("masks", (n, lo, min(lo + chunk, total)), check_values)
    else:
        batch: list[str] = []
        for g in _source_graphs(source):
            batch.append(encode_graph6(g))
            if len(batch) >= 2048:
                yield ("graph6", tuple(batch), check_values)
                batch = []
        if batch:
            yield ("graph6", tuple(batch), check_values)


def run_search(
    source: SearchSource,
    checks: Sequence[TheoremId],
    jobs: int = 1,
    early_exit: bool = False,
) -> SearchReport:
    """Evaluate ``checks`` on every graph from ``source``.

    Per-graph solver-limit failures land in the error tally instead of
    aborting the run.  Reports are deterministic for deterministic sources:
    the violation list is sorted and only ``wall_time`` varies.
    """
    checks = list(dict.fromkeys(checks))
    started = time.perf_counter()
    report = SearchReport(source=source.describe(), checks=[t.value for t in checks])
    report.tallies = {tid.value: _new_tally() for tid in checks}

    if jobs <= 1 or early_exit:
        examined, tallies, violations, errors = _check_batch(
            _source_graphs(source), checks, early_exit
        )
        report.graphs_examined = examined
        _merge_tallies(report.tallies, tallies)
        report.violations = sorted(violations)
        report.errors = errors
    else:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        violations: list = []
        with ctx.Pool(jobs) as pool:
            for examined, tallies, chunk_violations, errors in pool.imap_unordered(
                _search_chunk, _parallel_payloads(source, checks)
            ):
                report.graphs_examined += examined
                _merge_tallies(report.tallies, tallies)
                violations.extend(chunk_violations)
                report.errors += errors
        report.violations = sorted(violations)
    report.wall_time = time.perf_counter() - started
    return report
