"""Exhaustive search for smallest k-geodetic mixed graphs.

The general search (``search_exact``) decides whether an ``n``-vertex
``k``-geodetic mixed graph with undirected degree ``r`` and out-degree ``z``
exists.  It seeds the partial graph with the canonical breadth-first tree of
non-backtracking walks out of a root (whose shape is forced in any candidate
graph, so fixing its labels loses nothing), then fills the remaining degree
slots vertex by vertex in index order, adding edges before arcs with
strictly increasing targets, trying only the first isolated vertex among
interchangeable candidates, and backtracking as soon as an added element
creates a second walk between some pair.

The incremental acceptance check re-verifies only the sources that could
see a new walk: every walk using the new element first reaches one of its
endpoints, so a reverse ball of radius ``k - 1`` around the endpoints
bounds the affected sources.

For parallelism the decision tree is split at a fixed depth into replayable
subtree tasks; results merge in canonical order, so verdicts and witness
lists are identical for any worker count.  Budgets are enforced per subtree
task for the same reason.

The Cayley search scans the group catalog in order and reuses the generic
geodecity checker on each candidate Cayley graph.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, NamedTuple

from concurrent.futures import ProcessPoolExecutor

from .analysis import geodecity_report
from .bounds import moore_mixed
from .core import MixedGraph, build_graph, degree_profile
from .errors import PreconditionFailed, TooLarge
from .groups import ConnectionSet, GroupTable, catalog, cayley_mixed, connection_sets

__all__ = [
    "BUDGET_EXCEEDED",
    "EXHAUSTED_NONE",
    "FOUND",
    "SearchConfig",
    "SearchOutcome",
    "SmallestResult",
    "iso_distinct",
    "search_cayley_group",
    "search_exact",
    "smallest_cayley",
    "smallest_general",
]

FOUND = "FOUND"
EXHAUSTED_NONE = "EXHAUSTED_NONE"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

ISO_MAX_N = 12


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the general search.

    mode: "exact" (undirected degree exactly r, out-degree exactly z) or
    "minimum" (degrees may exceed the targets by up to ``slack``).
    budget: node limit per subtree task, 0 = unlimited.
    witness_limit: stop collecting after this many witnesses, 0 = all.
    iso_filter: deduplicate witnesses up to isomorphism (n <= 12 only).
    threads: worker processes; results are identical for any value.
    audit: optional callback ``(n, edges, arcs, accepted)`` fired after every
    incremental check (forces a single-process, unpartitioned run).
    """

    mode: str = "exact"
    budget: int = 0
    partition_depth: int = 2
    witness_limit: int = 0
    iso_filter: bool = False
    threads: int = 1
    slack: int = 1
    audit: Callable | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "minimum"):
            raise PreconditionFailed("mode must be 'exact' or 'minimum'")
        if min(self.budget, self.partition_depth, self.witness_limit,
               self.slack, self.threads) < 0:
            raise PreconditionFailed("config values must be nonnegative")


@dataclass(frozen=True)
class SearchOutcome:
    """Verdict of one fixed-order search."""

    verdict: str
    witnesses: tuple[MixedGraph, ...]
    nodes: int
    wall_time: float


class SmallestResult(NamedTuple):
    """Result of a smallest-order scan: first order found, its outcome, and
    the per-order verdict trail."""

    order: int | None
    outcome: SearchOutcome | None
    attempts: tuple[tuple[int, str], ...]


# ---------------------------------------------------------------------------
# canonical seed tree


def _moore_tree(r: int, z: int, k: int) -> tuple[int, list, list]:
    """Canonical breadth-first tree of non-backtracking walks from vertex 0.

    Returns (vertex count, edges, arcs).  Children are labelled level by
    level, parent by parent, edge children before arc children; a vertex
    entered along an edge has one undirected slot already spent on its
    parent, so it gets one fewer edge child.
    """
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    level = [(0, "root")]
    next_label = 1
    for _ in range(k):
        nxt = []
        for parent, kind in level:
            n_edge = r - 1 if kind == "edge" else r
            for _ in range(n_edge):
                edges.append((parent, next_label))
                nxt.append((next_label, "edge"))
                next_label += 1
            for _ in range(z):
                arcs.append((parent, next_label))
                nxt.append((next_label, "arc"))
                next_label += 1
        level = nxt
    return next_label, edges, arcs


# ---------------------------------------------------------------------------
# search engine


class _Budget(Exception):
    pass


class _Searcher:
    """Backtracking state for one (r, z, k, n) instance."""

    def __init__(self, r, z, k, n, mode, slack, budget, witness_limit):
        self.r, self.z, self.k, self.n = r, z, k, n
        self.mode = mode
        self.slack = slack if mode == "minimum" else 0
        self.budget = budget
        self.witness_limit = witness_limit
        self.nodes = 0
        self.witnesses: list[tuple] = []
        self.events: list[tuple] = []  # ("wit", ...) / ("task", ...) in DFS order
        self.task_depth: int | None = None
        self.audit = None

        m, edges, arcs = _moore_tree(r, z, k)
        assert n >= m, "caller must reject orders below the level-count bound"
        self.und = [[] for _ in range(n)]
        self.out = [[] for _ in range(n)]
        self.inn = [[] for _ in range(n)]
        self.edge_set: set[tuple[int, int]] = set()
        self.arc_set: set[tuple[int, int]] = set()
        for a, b in edges:
            self._add("e", a, b)
        for a, b in arcs:
            self._add("a", a, b)

    # -- mutation -----------------------------------------------------------

    def _add(self, kind, a, b):
        if kind == "e":
            self.und[a].append(b)
            self.und[b].append(a)
            self.edge_set.add((min(a, b), max(a, b)))
        else:
            self.out[a].append(b)
            self.inn[b].append(a)
            self.arc_set.add((a, b))

    def _remove(self, kind, a, b):
        if kind == "e":
            self.und[a].pop()
            self.und[b].pop()
            self.edge_set.remove((min(a, b), max(a, b)))
        else:
            self.out[a].pop()
            self.inn[b].pop()
            self.arc_set.remove((a, b))

    def _conflicts(self, a, b):
        if (min(a, b), max(a, b)) in self.edge_set:
            return True
        return (a, b) in self.arc_set or (b, a) in self.arc_set

    # -- incremental geodecity ------------------------------------------------

    def _affected_sources(self, kind, a, b):
        """Vertices with a mixed walk of length <= k - 1 to the entry points
        of the new element (both ends of an edge, the tail of an arc)."""
        seen = {a, b} if kind == "e" else {a}
        frontier = list(seen)
        for _ in range(self.k - 1):
            nxt = []
            for x in frontier:
                for y in self.inn[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                for y in self.und[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return seen

    def _source_ok(self, w):
        """At most one non-backtracking walk of length <= k from w to any
        vertex, and none back to w."""
        und, out, k = self.und, self.out, self.k
        seen = {w}
        frontier = [(w, -1)]
        for _ in range(k):
            nxt = []
            for v, entry in frontier:
                for x in out[v]:
                    nxt.append((x, -1))
                for x in und[v]:
                    if x != entry:
                        nxt.append((x, v))
            hit = set()
            for v, _entry in nxt:
                if v in seen or v in hit:
                    return False
                hit.add(v)
            seen |= hit
            frontier = nxt
        return True

    def _check(self, kind, a, b):
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            raise _Budget
        for w in self._affected_sources(kind, a, b):
            if not self._source_ok(w):
                return False
        return True

    # -- candidate generation ---------------------------------------------------

    def _isolated(self, v):
        return not (self.und[v] or self.out[v] or self.inn[v])

    def _try(self, kind, a, b):
        """Add the element if the graph stays k-geodetic; report the outcome."""
        self._add(kind, a, b)
        ok = self._check(kind, a, b)
        if self.audit is not None:
            self.audit(self.n, tuple(sorted(self.edge_set)),
                       tuple(sorted(self.arc_set)), ok)
        if not ok:
            self._remove(kind, a, b)
        return ok

    # -- main recursion -----------------------------------------------------------

    def run(self, path, u, phase, min_t, audit=None):
        """Replay an already-validated decision path, then explore below it."""
        self.audit = audit
        for kind, a, b in path:
            self._add(kind, a, b)
        self._dfs(u, phase, min_t, list(path))

    def _emit_witness(self):
        wit = (tuple(sorted(self.edge_set)), tuple(sorted(self.arc_set)))
        self.events.append(("wit", wit))
        self.witnesses.append(wit)

    def _enough_witnesses(self):
        return self.witness_limit and len(self.witnesses) >= self.witness_limit

    def _dfs(self, u, phase, min_t, path):
        if self._enough_witnesses():
            return
        if (self.task_depth is not None and len(path) >= self.task_depth
                and u < self.n):
            self.events.append(("task", (tuple(path), u, phase, min_t)))
            return
        if u == self.n:
            self._emit_witness()
            return
        r, z = self.r, self.z
        if phase == 0:
            have = len(self.und[u])
            if have >= r:
                self._dfs(u, 1, 0, path)
                if have >= r + self.slack:
                    return
            if have < r + self.slack:
                self._edge_candidates(u, min_t, path)
            return
        have = len(self.out[u])
        if have >= z:
            self._dfs(u + 1, 0, 0, path)
            if have >= z + self.slack:
                return
        if have < z + self.slack:
            self._arc_candidates(u, min_t, path)

    def _edge_candidates(self, u, min_t, path):
        cap = self.r + self.slack
        tried_isolated = False
        for v in range(max(min_t, u + 1), self.n):
            if len(self.und[v]) >= cap:
                continue
            if self._conflicts(u, v):
                continue
            if self._isolated(v):
                if tried_isolated:
                    continue
                tried_isolated = True
            if self._try("e", u, v):
                path.append(("e", u, v))
                self._dfs(u, 0, v + 1, path)
                path.pop()
                self._remove("e", u, v)
                if self._enough_witnesses():
                    return

    def _arc_candidates(self, u, min_t, path):
        tried_isolated = False
        for v in range(min_t, self.n):
            if v == u:
                continue
            if self._conflicts(u, v):
                continue
            if self._isolated(v):
                if tried_isolated:
                    continue
                tried_isolated = True
            if self._try("a", u, v):
                path.append(("a", u, v))
                self._dfs(u, 1, v + 1, path)
                path.pop()
                self._remove("a", u, v)
                if self._enough_witnesses():
                    return


def _run_task(payload):
    """Worker entry point: replay a decision path, explore, report."""
    (r, z, k, n, mode, slack, budget, witness_limit, path, u, phase, min_t) = payload
    s = _Searcher(r, z, k, n, mode, slack, budget, witness_limit)
    try:
        s.run(path, u, phase, min_t)
        budget_hit = False
    except _Budget:
        budget_hit = True
    return budget_hit, s.nodes, tuple(s.witnesses)


def search_exact(r: int, z: int, k: int, n: int, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Decide existence of an n-vertex k-geodetic graph with the given degrees.

    Exact mode requires undirected degree exactly ``r`` and out-degree
    exactly ``z`` at every vertex (in-degree is unconstrained); minimum
    mode allows up to ``cfg.slack`` extra in each.  EXHAUSTED_NONE with an
    unlimited budget is a certificate of non-existence for the chosen mode.
    """
    cfg = cfg or SearchConfig()
    if r < 0 or z < 0 or r + z < 1 or k < 1 or n < 1:
        raise PreconditionFailed("need r, z >= 0, r + z >= 1, k >= 1, n >= 1")
    start = time.perf_counter()

    def done(verdict, wits=(), nodes=0):
        graphs = tuple(build_graph(n, e, a) for e, a in wits)
        if cfg.iso_filter:
            graphs = tuple(iso_distinct(list(graphs)))
        if cfg.witness_limit:
            graphs = graphs[: cfg.witness_limit]
        for g in graphs:
            _verify_witness(g, r, z, k, cfg)
        return SearchOutcome(verdict, graphs, nodes, time.perf_counter() - start)

    if cfg.mode == "exact" and r % 2 and n % 2:
        return done(EXHAUSTED_NONE)  # odd undirected degree sum is impossible
    if n < moore_mixed(r, z, k):
        return done(EXHAUSTED_NONE)  # below the level-count bound

    slack = cfg.slack if cfg.mode == "minimum" else 0

    if cfg.audit is not None:
        # Debug runs stay single-process and unpartitioned so the hook sees
        # every incremental check in plain DFS order.
        s = _Searcher(r, z, k, n, cfg.mode, slack, cfg.budget, cfg.witness_limit)
        try:
            s.run((), 0, 0, 0, audit=cfg.audit)
            budget_hit = False
        except _Budget:
            budget_hit = True
        if s.witnesses:
            verdict = FOUND
        elif budget_hit:
            verdict = BUDGET_EXCEEDED
        else:
            verdict = EXHAUSTED_NONE
        return done(verdict, tuple(s.witnesses), s.nodes)

    prefix = _Searcher(r, z, k, n, cfg.mode, slack, cfg.budget, cfg.witness_limit)
    prefix.task_depth = cfg.partition_depth
    try:
        prefix.run((), 0, 0, 0)
    except _Budget:
        return done(BUDGET_EXCEEDED, tuple(prefix.witnesses), prefix.nodes)

    payloads = [
        (r, z, k, n, cfg.mode, slack, cfg.budget, cfg.witness_limit,
         path, u, phase, min_t)
        for path, u, phase, min_t in
        (ev for e, ev in prefix.events if e == "task")
    ]
    pool = None
    futures = None
    if cfg.threads > 1 and len(payloads) > 1:
        pool = ProcessPoolExecutor(max_workers=cfg.threads)
        futures = [pool.submit(_run_task, p) for p in payloads]

    nodes = prefix.nodes
    budget_hit = False
    witnesses: list[tuple] = []
    task_i = 0
    for ev_kind, ev in prefix.events:
        if cfg.witness_limit and len(witnesses) >= cfg.witness_limit:
            break
        if ev_kind == "wit":
            witnesses.append(ev)
        else:
            if futures is not None:
                task_hit, task_nodes, task_wits = futures[task_i].result()
            else:
                task_hit, task_nodes, task_wits = _run_task(payloads[task_i])
            task_i += 1
            nodes += task_nodes
            budget_hit = budget_hit or task_hit
            witnesses.extend(task_wits)
    if pool is not None:
        pool.shutdown(wait=False, cancel_futures=True)

    if witnesses:
        verdict = FOUND
    elif budget_hit:
        verdict = BUDGET_EXCEEDED
    else:
        verdict = EXHAUSTED_NONE
    return done(verdict, tuple(witnesses), nodes)


def _verify_witness(g: MixedGraph, r: int, z: int, k: int, cfg: SearchConfig) -> None:
    """Independent re-check of a found graph; a failure is an engine bug."""
    if not geodecity_report(g, k).is_k_geodetic:
        raise RuntimeError("witness failed independent geodecity re-check")
    prof = degree_profile(g)
    if cfg.mode == "exact":
        ok = all(d == r for d in prof.d) and all(d == z for d in prof.d_out)
    else:
        ok = all(r <= d <= r + cfg.slack for d in prof.d) and all(
            z <= d <= z + cfg.slack for d in prof.d_out
        )
    if not ok:
        raise RuntimeError("witness failed degree re-check")


def smallest_general(
    r: int,
    z: int,
    k: int,
    cfg: SearchConfig | None = None,
    n_start: int | None = None,
    n_end: int | None = None,
) -> SmallestResult:
    """Scan orders upward for the first FOUND verdict.

    Starts at the level-count bound by default; ``attempts`` records the
    verdict at every order tried (parity-skipped orders appear as
    EXHAUSTED_NONE).  A BUDGET_EXCEEDED attempt means any later FOUND order
    is an upper bound only, not the minimum.
    """
    cfg = cfg or SearchConfig()
    lo = moore_mixed(r, z, k) if n_start is None else n_start
    hi = n_end if n_end is not None else lo + 16
    attempts: list[tuple[int, str]] = []
    for n in range(lo, hi + 1):
        outcome = search_exact(r, z, k, n, cfg)
        attempts.append((n, outcome.verdict))
        if outcome.verdict == FOUND:
            return SmallestResult(n, outcome, tuple(attempts))
    return SmallestResult(None, None, tuple(attempts))


# ---------------------------------------------------------------------------
# Cayley search


def search_cayley_group(gt: GroupTable, r: int, z: int, k: int,
                        witness_limit: int = 0) -> SearchOutcome:
    """Try every (r, z) connection set of one group at geodecity k.

    ``nodes`` counts connection sets tried.  EXHAUSTED_NONE is a certificate
    for the group: conjugate sets give isomorphic graphs, so checking one
    representative per conjugation orbit loses nothing.
    """
    start = time.perf_counter()
    wits = []
    tried = 0
    for cs in connection_sets(gt, r, z):
        tried += 1
        g = cayley_mixed(gt, cs)
        if geodecity_report(g, k).is_k_geodetic:
            wits.append(g)
            if witness_limit and len(wits) >= witness_limit:
                break
    verdict = FOUND if wits else EXHAUSTED_NONE
    return SearchOutcome(verdict, tuple(wits), tried, time.perf_counter() - start)


def smallest_cayley(
    r: int, z: int, k: int, max_order: int = 24
) -> tuple[int, str, ConnectionSet] | None:
    """Smallest Cayley mixed graph with the given degrees and geodecity.

    Scans orders from the level-count bound upward through the group
    catalog; ties break by catalog position, then by lexicographically
    least connection set (one representative per conjugation orbit).
    Orders beyond the catalog raise ``CatalogIncomplete``.
    """
    lo = max(moore_mixed(r, z, k), r + z + 1, 2)
    for order in range(lo, max_order + 1):
        for gt in catalog(order):
            for cs in connection_sets(gt, r, z):
                g = cayley_mixed(gt, cs)
                if geodecity_report(g, k).is_k_geodetic:
                    return order, gt.name, cs
    return None


# ---------------------------------------------------------------------------
# isomorphism filtering


def _canonical_form(g: MixedGraph) -> tuple:
    """Lexicographically least relabelled adjacency code (naive, n <= 12).

    Cell code: 0 none, 1 arc out, 2 edge, 3 arc in.  The code is read one
    L-shape at a time (row then column of the newest position), so candidate
    prefixes are compared against the best code early.  Position ``t`` only
    accepts vertices whose degree triple matches the canonically sorted
    triple sequence, which prunes most of the permutation space.
    """
    n = g.n
    if n > ISO_MAX_N:
        raise TooLarge(f"canonical form supports n <= {ISO_MAX_N}, got {n}")
    code = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        code[a][b] = code[b][a] = 2
    for a, b in g.arcs:
        code[a][b] = 1
        code[b][a] = 3
    prof = degree_profile(g)
    klass = [(prof.d[v], prof.d_out[v], prof.d_in[v]) for v in range(n)]
    order = sorted(range(n), key=lambda v: (klass[v], v))
    target = [klass[v] for v in order]

    perm = list(order)  # perm[i] = original vertex placed at position i
    used = [False] * n

    def lshape(t: int) -> tuple:
        row = tuple(code[perm[t]][perm[j]] for j in range(t + 1))
        col = tuple(code[perm[i]][perm[t]] for i in range(t))
        return row + col

    best = [lshape(i) for i in range(n)]  # seed from the class-sorted labelling
    big = (4,)  # compares greater than any real piece (cell values are 0..3)

    # Invariant: on entering rec(t), best[:t] equals the pieces of the current
    # partial labelling, so comparing against best[t] prunes any branch that
    # cannot beat the smallest completed code seen so far.
    def rec(t: int) -> None:
        if t == n:
            return
        for v in range(n):
            if used[v] or klass[v] != target[t]:
                continue
            perm[t] = v
            piece = lshape(t)
            if piece > best[t]:
                continue
            if piece < best[t]:
                best[t] = piece
                for i in range(t + 1, n):
                    best[i] = big
            used[v] = True
            rec(t + 1)
            used[v] = False

    rec(0)
    return tuple(x for shape in best for x in shape)


def iso_distinct(graphs: list[MixedGraph]) -> list[MixedGraph]:
    """One representative per isomorphism class, keeping first occurrences."""
    seen: set[tuple] = set()
    kept = []
    for g in graphs:
        key = (g.n, _canonical_form(g))
        if key not in seen:
            seen.add(key)
            kept.append(g)
    return kept
