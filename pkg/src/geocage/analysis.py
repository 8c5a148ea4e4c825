"""Non-backtracking-walk engine.

A walk u_0, u_1, ..., u_l in a mixed graph may traverse arcs only forward
and must never retrace the undirected edge it just used (no subsequence
u ~ w ~ u over the same edge); arcs impose no such restriction.  A graph is
k-geodetic when every ordered pair of distinct vertices is joined by at
most one such walk of length <= k and no vertex lies on a nontrivial
non-backtracking closed walk of length <= k.

The dynamic programme works over states (vertex, entry), where entry is
either None (start of walk, or arrived via an arc) or the neighbor w the
walk arrived from via the edge {w, vertex}; from the latter state the move
back over that same edge is excluded.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .bounds import moore_mixed
from .core import DegreeProfile, MixedGraph, degree_profile
from .errors import CountOverflow, PreconditionFailed

Walk = tuple[int, ...]

_INT64_MAX = 2**63 - 1


def _adjacency(g: MixedGraph) -> tuple[list[list[int]], list[list[int]]]:
    und: list[list[int]] = [[] for _ in range(g.n)]
    out: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in sorted(g.edges):
        und[u].append(v)
        und[v].append(u)
    for u, v in sorted(g.arcs):
        out[u].append(v)
    for s in und:
        s.sort()
    for s in out:
        s.sort()
    return und, out


def _source_level_counts(
    und: list[list[int]], out: list[list[int]], u: int, k: int
) -> list[dict[tuple[int, int | None], int]]:
    """Counts of non-backtracking walks from u, one sparse state->count map
    per length 0..k."""
    levels: list[dict[tuple[int, int | None], int]] = [{(u, None): 1}]
    for _ in range(k):
        nxt: dict[tuple[int, int | None], int] = {}
        for (v, entry), c in levels[-1].items():
            for w in out[v]:
                key = (w, None)
                nxt[key] = nxt.get(key, 0) + c
            for w in und[v]:
                if w == entry:
                    continue
                key = (w, v)
                nxt[key] = nxt.get(key, 0) + c
        levels.append(nxt)
    return levels


def nb_walk_counts(g: MixedGraph, k: int) -> list[np.ndarray]:
    """Per-length n x n matrices W_0..W_k of non-backtracking walk counts.

    W_l[u][v] counts walks of length exactly l from u to v.  Counts are
    computed exactly; CountOverflow is raised if any does not fit int64
    (they are never silently wrapped).
    """
    if k < 0:
        raise PreconditionFailed(f"walk length bound must be >= 0, got {k}")
    und, out = _adjacency(g)
    mats = [np.zeros((g.n, g.n), dtype=np.int64) for _ in range(k + 1)]
    for u in range(g.n):
        levels = _source_level_counts(und, out, u, k)
        for ell, states in enumerate(levels):
            row: dict[int, int] = {}
            for (v, _entry), c in states.items():
                row[v] = row.get(v, 0) + c
            for v, c in row.items():
                if c > _INT64_MAX:
                    raise CountOverflow(
                        f"walk count {c} for ({u}, {v}) at length {ell} exceeds int64"
                    )
                mats[ell][u, v] = c
    return mats


def _enumerate_walks(
    und: list[list[int]],
    out: list[list[int]],
    u: int,
    k: int,
    target: int,
    want: int,
    nontrivial: bool,
) -> list[Walk]:
    """Depth-first enumeration, in lexicographic order, of non-backtracking
    walks from u of length <= k ending at target; stops after `want` walks.
    With nontrivial=True the trivial length-0 walk is not reported."""
    found: list[Walk] = []
    path = [u]

    def extend(v: int, entry: int | None) -> bool:
        if v == target and (len(path) > 1 or not nontrivial):
            found.append(tuple(path))
            if len(found) >= want:
                return True
        if len(path) > k:
            return False
        moves = [(w, None) for w in out[v]] + [(w, v) for w in und[v] if w != entry]
        for w, new_entry in sorted(moves, key=lambda m: m[0]):
            path.append(w)
            if extend(w, new_entry):
                return True
            path.pop()
        return False

    extend(u, None)
    return found


@dataclass(frozen=True)
class GeodecityReport:
    """Outcome of the k-geodecity test.

    girth is the largest k' <= k_tested for which the graph is k'-geodetic.
    When is_k_geodetic is False, at least one of violation (u, v, walk, walk)
    and closed_walk_violation (u, walk) is populated with explicit walks.
    """

    k_tested: int
    girth: int
    is_k_geodetic: bool
    violation: tuple[int, int, Walk, Walk] | None
    closed_walk_violation: tuple[int, Walk] | None


def geodecity_report(g: MixedGraph, k: int) -> GeodecityReport:
    """Test k-geodecity and locate the geodetic girth.

    For each source the walk counts are accumulated level by level; the
    earliest level at which either some target collects a second walk or a
    nontrivial closed walk returns to the source determines the girth
    (earliest violating level minus one, capped at k).
    """
    if k < 1:
        raise PreconditionFailed(f"geodecity target must be >= 1, got {k}")
    und, out = _adjacency(g)
    best_level = k + 1  # earliest violating level seen so far
    witness: tuple[int, int] | None = None  # (source, duplicated target)
    closed_witness: int | None = None  # source of a closed walk
    for u in range(g.n):
        cumulative = {u: 1}
        states: dict[tuple[int, int | None], int] = {(u, None): 1}
        for ell in range(1, best_level):
            nxt: dict[tuple[int, int | None], int] = {}
            for (v, entry), c in states.items():
                for w in out[v]:
                    key = (w, None)
                    nxt[key] = nxt.get(key, 0) + c
                for w in und[v]:
                    if w == entry:
                        continue
                    key = (w, v)
                    nxt[key] = nxt.get(key, 0) + c
            reached: dict[int, int] = {}
            for (v, _entry), c in nxt.items():
                reached[v] = reached.get(v, 0) + c
            bad_target: int | None = None
            for v in sorted(reached):
                cumulative[v] = cumulative.get(v, 0) + reached[v]
                if cumulative[v] > 1 and bad_target is None:
                    bad_target = v
            if bad_target is not None:
                best_level = ell
                if bad_target == u:
                    witness, closed_witness = None, u
                else:
                    witness, closed_witness = (u, bad_target), None
                break
            states = nxt
    girth = min(best_level - 1, k)
    is_k_geodetic = best_level > k
    violation = None
    closed_violation = None
    if not is_k_geodetic:
        if witness is not None:
            u, v = witness
            walks = _enumerate_walks(und, out, u, k, v, want=2, nontrivial=False)
            violation = (u, v, walks[0], walks[1])
        else:
            assert closed_witness is not None
            u = closed_witness
            walks = _enumerate_walks(und, out, u, k, u, want=1, nontrivial=True)
            closed_violation = (u, walks[0])
    return GeodecityReport(
        k_tested=k,
        girth=girth,
        is_k_geodetic=is_k_geodetic,
        violation=violation,
        closed_walk_violation=closed_violation,
    )


@dataclass(frozen=True)
class DistanceReport:
    """All-pairs mixed distances (float matrix, math.inf for unreachable)
    and the diameter (int, or math.inf when the graph is not strongly
    connected)."""

    dist: np.ndarray
    diameter: int | float


def distance_report(g: MixedGraph) -> DistanceReport:
    """Breadth-first distances over arcs plus both orientations of each
    edge.  A shortest walk never backtracks (excising the backtrack gives a
    shorter walk), so plain BFS equals shortest non-backtracking walk
    length."""
    und, out = _adjacency(g)
    succ = [sorted(set(und[v]) | set(out[v])) for v in range(g.n)]
    dist = np.full((g.n, g.n), math.inf)
    for u in range(g.n):
        dist[u, u] = 0
        frontier = [u]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in succ[v]:
                    if math.isinf(dist[u, w]):
                        dist[u, w] = d
                        nxt.append(w)
            frontier = nxt
    m = dist.max()
    return DistanceReport(dist=dist, diameter=math.inf if math.isinf(m) else int(m))


@dataclass(frozen=True)
class ExcessDefectReport:
    """Order versus the Moore bound.

    The excess side fills excess and outliers (O(u) = vertices at distance
    > k from u); the defect side fills defect and repeats (R(u) = multiset
    of vertices appearing more than once in the depth-k tree rooted at u,
    with multiplicity one less than their appearance count).
    """

    moore: int
    excess: int | None
    defect: int | None
    outliers: dict[int, frozenset[int]] | None
    repeats: dict[int, Counter] | None


def excess_report(g: MixedGraph, r: int, z: int, k: int) -> ExcessDefectReport:
    geo = geodecity_report(g, k)
    if not geo.is_k_geodetic:
        raise PreconditionFailed(f"graph is not {k}-geodetic (girth {geo.girth})")
    prof = degree_profile(g)
    if min(prof.d) < r:
        raise PreconditionFailed(f"minimum undirected degree {min(prof.d)} < r = {r}")
    if min(prof.d_out) < z:
        raise PreconditionFailed(f"minimum out-degree {min(prof.d_out)} < z = {z}")
    moore = moore_mixed(r, z, k)
    dist = distance_report(g).dist
    outliers = {
        u: frozenset(v for v in range(g.n) if dist[u, v] > k) for u in range(g.n)
    }
    return ExcessDefectReport(
        moore=moore, excess=g.n - moore, defect=None, outliers=outliers, repeats=None
    )


def defect_report(g: MixedGraph, r: int, z: int, k: int) -> ExcessDefectReport:
    rep = distance_report(g)
    if rep.diameter > k:
        raise PreconditionFailed(f"diameter {rep.diameter} > k = {k}")
    prof = degree_profile(g)
    if max(prof.d) > r:
        raise PreconditionFailed(f"maximum undirected degree {max(prof.d)} > r = {r}")
    if max(prof.d_out) > z:
        raise PreconditionFailed(f"maximum out-degree {max(prof.d_out)} > z = {z}")
    moore = moore_mixed(r, z, k)
    mats = nb_walk_counts(g, k)
    repeats: dict[int, Counter] = {}
    for u in range(g.n):
        appearances = sum(m[u] for m in mats)
        repeats[u] = Counter(
            {v: int(appearances[v]) - 1 for v in range(g.n) if appearances[v] > 1}
        )
    return ExcessDefectReport(
        moore=moore, excess=None, defect=moore - g.n, outliers=None, repeats=repeats
    )


def outlier_automorphism_check(
    g: MixedGraph, r: int, z: int, k: int
) -> tuple[bool, tuple[int, ...]]:
    """For an excess-one graph, map each vertex to its unique outlier and
    test whether that map is a graph automorphism."""
    rep = excess_report(g, r, z, k)
    if rep.excess != 1:
        raise PreconditionFailed(f"excess is {rep.excess}, need exactly 1")
    assert rep.outliers is not None
    o = []
    for u in range(g.n):
        outs = rep.outliers[u]
        if len(outs) != 1:
            raise PreconditionFailed(f"|O({u})| = {len(outs)}, need exactly 1")
        o.append(next(iter(outs)))
    perm = tuple(o)
    if set(perm) != set(range(g.n)):
        return False, perm
    edges_ok = all(g.has_edge(perm[u], perm[v]) for u, v in g.edges)
    arcs_ok = all(g.has_arc(perm[u], perm[v]) for u, v in g.arcs)
    return edges_ok and arcs_ok, perm
