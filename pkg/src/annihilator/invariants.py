"""The five invariants reasoned about everywhere else, each with a witness.

* ``annihilation_number`` -- largest k whose k smallest degrees sum to at most m.
* ``independence_number_exact`` -- branch and bound over vertex bitmasks.
* ``maximum_matching`` -- blossom algorithm, works on any graph.
* ``critical_difference`` / ``critical_independence_number`` -- polynomial
  route through matchings on the bipartite double cover, plus a definitional
  brute-force oracle used to cross-validate it.

All functions are pure; ties are always broken toward the lowest vertex
index so witnesses are deterministic.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph_core import Graph, _iter_bits, is_independent_set, neighborhood

DEFAULT_SOLVER_LIMIT = 64
_SOLVER_LIMIT_ENV = "ANNIHILATOR_SOLVER_LIMIT"

# Below this size the brute-force route is both exact and faster than the
# matching-based one, so `method="auto"` prefers it.
_ORACLE_AUTO_LIMIT = 10
_ORACLE_HARD_LIMIT = 20


class SolverLimitError(RuntimeError):
    """Raised when an exact solver is asked to exceed its vertex cap."""


def solver_limit(override: Optional[int] = None) -> int:
    """Effective exact-solver vertex cap: explicit > environment > default."""
    if override is not None:
        return override
    env = os.environ.get(_SOLVER_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{_SOLVER_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_SOLVER_LIMIT


# ---------------------------------------------------------------------------
# Annihilation number
# ---------------------------------------------------------------------------


def annihilation_number(g: Graph) -> tuple[int, set[int]]:
    """Largest k such that the k smallest degrees sum to at most m.

    The witness collects k vertices of minimal degree, lowest index first
    among equal degrees.
    """
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    total = 0
    k = 0
    for v in order:
        total += g.degree(v)
        if total > g.m:
            break
        k += 1
    return k, set(order[:k])


def is_annihilating_set(g: Graph, s: Iterable[int]) -> bool:
    """True when the degree sum of ``s`` is at most the edge count."""
    members = set(s)
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(g.degree(v) for v in members) <= g.m


class AnnihilatingStatus(enum.Flag):
    """Classification of a vertex set against the annihilation threshold."""

    NOT_ANNIHILATING = 0
    ANNIHILATING = enum.auto()
    MAXIMAL = enum.auto()
    MAXIMUM = enum.auto()


def annihilating_set_status(g: Graph, s: Iterable[int]) -> AnnihilatingStatus:
    """Independent maximal / maximum labels for an annihilating set.

    Maximal means no single extra vertex keeps the degree sum within m;
    maximum means the cardinality equals the annihilation number.  The two
    are decided independently and returned as combined flags.
    """
    members = set(s)
    if not is_annihilating_set(g, members):
        return AnnihilatingStatus.NOT_ANNIHILATING
    status = AnnihilatingStatus.ANNIHILATING
    total = sum(g.degree(v) for v in members)
    extendable = any(
        total + g.degree(v) <= g.m for v in range(g.n) if v not in members
    )
    if not extendable:
        status |= AnnihilatingStatus.MAXIMAL
    if len(members) == annihilation_number(g)[0]:
        status |= AnnihilatingStatus.MAXIMUM
    return status


# ---------------------------------------------------------------------------
# Exact maximum independent set
# ---------------------------------------------------------------------------


def independence_number_exact(g: Graph, limit: Optional[int] = None) -> tuple[int, set[int]]:
    """Maximum independent set by branch and bound on bitmasks.

    Branches on a maximum-degree vertex and prunes with a greedy clique
    cover of the remaining candidates.  Degree <= 1 vertices are taken
    outright and leftover cycles are solved in closed form, which keeps
    sparse instances fast.
    """
    cap = solver_limit(limit)
    if g.n > cap:
        raise SolverLimitError(f"exact solver limited to {cap} vertices, graph has {g.n}")
    size, mask = _max_independent_mask(tuple(g.adjacency_mask(v) for v in range(g.n)), g.n)
    return size, set(_iter_bits(mask))


def _greedy_clique_cover(adj: tuple[int, ...], pool: int) -> int:
    """Number of cliques in a greedy cover of ``pool``; upper-bounds its MIS."""
    count = 0
    while pool:
        v = (pool & -pool).bit_length() - 1
        pool ^= 1 << v
        reach = adj[v] & pool
        while reach:
            u = (reach & -reach).bit_length() - 1
            pool ^= 1 << u
            reach &= adj[u] & pool
        count += 1
    return count


def _take_sparse(adj: tuple[int, ...], pool: int, chosen: int, size: int) -> tuple[int, int, int]:
    """Commit all isolated and degree-1 vertices of ``pool`` (always optimal)."""
    changed = True
    while changed:
        changed = False
        scan = pool
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            if not pool >> v & 1:
                continue
            live = adj[v] & pool
            if live == 0:
                pool ^= 1 << v
                chosen |= 1 << v
                size += 1
                changed = True
            elif live & (live - 1) == 0:
                pool &= ~(live | 1 << v)
                chosen |= 1 << v
                size += 1
                changed = True
    return pool, chosen, size


def _cycles_best(adj: tuple[int, ...], pool: int) -> tuple[int, int]:
    """Closed-form MIS of a union of cycles (every pool degree is exactly 2)."""
    size = 0
    chosen = 0
    while pool:
        start = (pool & -pool).bit_length() - 1
        prev = -1
        v = start
        cycle = [v]
        while True:
            nxt_mask = adj[v] & pool & ~(1 << prev if prev >= 0 else 0)
            nxt = (nxt_mask & -nxt_mask).bit_length() - 1
            if nxt == start:
                break
            prev, v = v, nxt
            cycle.append(v)
        for i in range(0, len(cycle) - 1, 2):
            chosen |= 1 << cycle[i]
            size += 1
        for v in cycle:
            pool ^= 1 << v
    return size, chosen


def _max_independent_mask(adj: tuple[int, ...], n: int) -> tuple[int, int]:
    best_size = 0
    best_mask = 0

    def expand(pool: int, size: int, chosen: int) -> None:
        nonlocal best_size, best_mask
        pool, chosen, size = _take_sparse(adj, pool, chosen, size)
        if pool == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        degrees = [(adj[v] & pool).bit_count() for v in _iter_bits(pool)]
        if max(degrees) <= 2:
            extra, extra_mask = _cycles_best(adj, pool)
            if size + extra > best_size:
                best_size, best_mask = size + extra, chosen | extra_mask
            return
        if size + _greedy_clique_cover(adj, pool) <= best_size:
            return
        branch = -1
        branch_deg = -1
        for v in _iter_bits(pool):
            deg = (adj[v] & pool).bit_count()
            if deg > branch_deg:
                branch, branch_deg = v, deg
        expand(pool & ~(adj[branch] | 1 << branch), size + 1, chosen | 1 << branch)
        expand(pool ^ 1 << branch, size, chosen)

    expand((1 << n) - 1, 0, 0)
    return best_size, best_mask


def _enumerate_maximum_independent_sets(g: Graph, limit_n: int = 14) -> list[int]:
    """All maximum independent sets as bitmasks (ascending numeric order)."""
    if g.n > limit_n:
        raise SolverLimitError(
            f"maximum independent set enumeration limited to {limit_n} vertices, graph has {g.n}"
        )
    adj = tuple(g.adjacency_mask(v) for v in range(g.n))
    alpha, _ = _max_independent_mask(adj, g.n)
    out: list[int] = []

    def expand(pool: int, size: int, chosen: int) -> None:
        if size + pool.bit_count() < alpha:
            return
        if size == alpha:
            out.append(chosen)
            return
        v = (pool & -pool).bit_length() - 1
        expand(pool & ~(adj[v] | 1 << v), size + 1, chosen | 1 << v)
        expand(pool ^ 1 << v, size, chosen)

    expand((1 << g.n) - 1, 0, 0)
    return sorted(out)


# ---------------------------------------------------------------------------
# Maximum matching (blossom algorithm)
# ---------------------------------------------------------------------------


def maximum_matching(g: Graph) -> tuple[int, set[tuple[int, int]]]:
    """Maximum matching on an arbitrary graph via blossom contraction.

    A greedy matching seeds the search; each remaining exposed vertex then
    gets one augmenting-path hunt with blossom shrinking.  Termination with
    no augmenting path certifies maximality.
    """
    n = g.n
    neighbors = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for u in range(n):
        if match[u] < 0:
            for v in neighbors[u]:
                if match[v] < 0:
                    match[u] = v
                    match[v] = u
                    break
    for u in range(n):
        if match[u] < 0:
            _blossom_augment(neighbors, match, u)
    mu = sum(1 for v in match if v >= 0) // 2
    witness = {(u, match[u]) for u in range(n) if match[u] > u}
    return mu, witness


def _blossom_augment(neighbors: list[tuple[int, ...]], match: list[int], root: int) -> bool:
    n = len(neighbors)
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_queue[root] = True
    queue = [root]

    def lowest_common_base(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = parent[match[b]]

    def mark_blossom_path(v: int, stop: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stop:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in neighbors[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                stop = lowest_common_base(v, to)
                in_blossom = [False] * n
                mark_blossom_path(v, stop, to, in_blossom)
                mark_blossom_path(to, stop, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stop
                        if not in_queue[i]:
                            in_queue[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    while to >= 0:
                        prev = parent[to]
                        nxt = match[prev]
                        match[to] = prev
                        match[prev] = to
                        to = nxt
                    return True
                mate = match[to]
                if not in_queue[mate]:
                    in_queue[mate] = True
                    queue.append(mate)
    return False


# ---------------------------------------------------------------------------
# Critical independence via the bipartite double cover
#
# The double cover of G has biadjacency equal to G's adjacency matrix, so a
# maximum matching of that bipartite graph gives, by the König-Egerváry
# equality, d(G) = n - mu(cover).  The committed-vertex loop below relies on
# the decomposition d-feasibility(In + v) <=> (1 - deg_H(v)) + d(H - N[v])
# == d(H), evaluated on the shrinking residual graph H.
# ---------------------------------------------------------------------------


def _hopcroft_karp(adj: tuple[int, ...], alive: int, match_l: list[int], match_r: list[int]) -> int:
    """Maximum matching size of the bipartite graph with biadjacency ``adj``.

    Both sides use vertex set ``alive``; ``match_l``/``match_r`` may carry a
    consistent partial matching to warm-start from and are updated in place.
    """
    n = len(adj)
    INF = n + 1
    dist = [0] * n
    size = sum(1 for u in _iter_bits(alive) if match_l[u] >= 0)
    while True:
        queue = []
        for u in _iter_bits(alive):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        if not queue:
            break
        reachable_free = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in _iter_bits(adj[u] & alive):
                w = match_r[v]
                if w < 0:
                    reachable_free = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            break

        def try_augment(u: int) -> bool:
            for v in _iter_bits(adj[u] & alive):
                w = match_r[v]
                if w < 0 or (dist[w] == dist[u] + 1 and try_augment(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = INF
            return False

        progressed = False
        for u in _iter_bits(alive):
            if match_l[u] < 0 and try_augment(u):
                size += 1
                progressed = True
        if not progressed:
            break
    return size


def _restrict_matching(match_l: list[int], match_r: list[int], alive: int) -> tuple[list[int], list[int]]:
    new_l = list(match_l)
    new_r = list(match_r)
    for u in range(len(new_l)):
        if not alive >> u & 1:
            new_l[u] = -1
            new_r[u] = -1
    for u in range(len(new_l)):
        if new_l[u] >= 0 and not alive >> new_l[u] & 1:
            new_l[u] = -1
        if new_r[u] >= 0 and not alive >> new_r[u] & 1:
            new_r[u] = -1
    return new_l, new_r


def _max_critical_independent_set_cover(g: Graph) -> tuple[int, set[int]]:
    """(critical difference, maximum-cardinality critical independent set)."""
    n = g.n
    if n == 0:
        return 0, set()
    adj = tuple(g.adjacency_mask(v) for v in range(n))
    alive = (1 << n) - 1
    match_l = [-1] * n
    match_r = [-1] * n
    d = n - _hopcroft_karp(adj, alive, match_l, match_r)
    d_residual = d
    chosen: set[int] = set()
    for v in range(n):
        if not alive >> v & 1:
            continue
        live_nbrs = adj[v] & alive
        shrunk = alive & ~(live_nbrs | 1 << v)
        trial_l, trial_r = _restrict_matching(match_l, match_r, shrunk)
        d_shrunk = shrunk.bit_count() - _hopcroft_karp(adj, shrunk, trial_l, trial_r)
        if 1 - live_nbrs.bit_count() + d_shrunk == d_residual:
            chosen.add(v)
            alive = shrunk
            match_l, match_r = trial_l, trial_r
            d_residual = d_shrunk
    assert d_residual == 0, "committed set failed to exhaust the critical difference"
    return d, chosen


def _critical_brute(g: Graph) -> tuple[int, int, set[int]]:
    """(d, alpha_crit, witness) by enumerating every independent set."""
    if g.n > _ORACLE_HARD_LIMIT:
        raise SolverLimitError(
            f"critical independence oracle limited to {_ORACLE_HARD_LIMIT} vertices, graph has {g.n}"
        )
    adj = tuple(g.adjacency_mask(v) for v in range(g.n))
    best_diff = 0
    best_size = 0
    best_mask = 0

    def expand(pool: int, chosen: int, size: int, nbh: int) -> None:
        nonlocal best_diff, best_size, best_mask
        diff = size - (nbh & ~chosen).bit_count()
        if diff > best_diff or (diff == best_diff and size > best_size):
            best_diff, best_size, best_mask = diff, size, chosen
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool ^= 1 << v
            expand(pool & ~adj[v], chosen | 1 << v, size + 1, nbh | adj[v])

    expand((1 << g.n) - 1, 0, 0, 0)
    return best_diff, best_size, set(_iter_bits(best_mask))


def critical_difference(g: Graph, method: str = "auto") -> tuple[int, set[int]]:
    """Maximum of |I| - |N(I)| over independent sets, with an attaining set."""
    d, _, witness = _critical_full(g, method)
    return d, witness


def critical_independence_number(g: Graph, method: str = "auto") -> tuple[int, set[int]]:
    """Maximum cardinality among independent sets attaining the critical difference.

    ``method`` selects the matching-based construction ("cover"), the
    brute-force enumeration ("oracle", n <= 20), or a size-based choice
    between the two ("auto").
    """
    _, size, witness = _critical_full(g, method)
    assert len(witness) == size
    return size, witness


def _critical_full(g: Graph, method: str) -> tuple[int, int, set[int]]:
    if method == "auto":
        method = "oracle" if g.n <= _ORACLE_AUTO_LIMIT else "cover"
    if method == "oracle":
        return _critical_brute(g)
    if method == "cover":
        d, witness = _max_critical_independent_set_cover(g)
        assert is_independent_set(g, witness)
        assert len(witness) - len(neighborhood(g, witness)) == d
        return d, len(witness), witness
    raise ValueError(f"unknown critical independence method {method!r}")


def critical_independence_number_oracle(g: Graph) -> int:
    """Definitional brute force over all independent sets (n <= 20)."""
    _, size, _ = _critical_brute(g)
    return size


# ---------------------------------------------------------------------------
# Predicates and the aggregated report
# ---------------------------------------------------------------------------


def is_koenig_egervary(g: Graph, limit: Optional[int] = None) -> bool:
    """True when the independence and matching numbers sum to the order."""
    alpha, _ = independence_number_exact(g, limit)
    mu, _ = maximum_matching(g)
    return alpha + mu == g.n


@dataclass
class InvariantReport:
    """All computed invariants of one graph, with certifying sets.

    ``alpha`` is None when the exact solver cap was exceeded; the reason is
    then recorded in ``diagnostics``.
    """

    n: int
    m: int
    alpha: Optional[int]
    a: int
    alpha_crit: int
    mu: int
    crit_diff: int
    witnesses: dict = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self, include_witnesses: bool = True) -> dict:
        payload = {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "a": self.a,
            "alpha_crit": self.alpha_crit,
            "mu": self.mu,
            "crit_diff": self.crit_diff,
        }
        if include_witnesses:
            payload["witnesses"] = self.witnesses
        if self.diagnostics:
            payload["diagnostics"] = list(self.diagnostics)
        return payload


def full_report(g: Graph, limit: Optional[int] = None, method: str = "auto") -> InvariantReport:
    """Compute every invariant, marking exact fields absent past the solver cap."""
    diagnostics: list[str] = []
    a, a_witness = annihilation_number(g)
    mu, matching = maximum_matching(g)
    d, alpha_crit, crit_witness = _critical_full(g, method)
    alpha: Optional[int] = None
    alpha_witness: Optional[list[int]] = None
    try:
        alpha, alpha_set = independence_number_exact(g, limit)
        alpha_witness = sorted(alpha_set)
    except SolverLimitError as exc:
        diagnostics.append(str(exc))
    if alpha is not None:
        assert alpha_crit <= alpha <= a, "invariant chain alpha_crit <= alpha <= a violated"
    witnesses = {
        "alpha": alpha_witness,
        "a": sorted(a_witness),
        "alpha_crit": sorted(crit_witness),
        "mu": sorted(matching),
        "crit_diff": sorted(crit_witness),
    }
    return InvariantReport(
        n=g.n,
        m=g.m,
        alpha=alpha,
        a=a,
        alpha_crit=alpha_crit,
        mu=mu,
        crit_diff=d,
        witnesses=witnesses,
        diagnostics=diagnostics,
    )
