"""Constructions and bundled examples of extremal mixed graphs.

Three kinds of objects live here:

* parametric families — ``permutation_digraph`` (vertices are the
  k-permutations of d+k symbols, arcs shift-and-append), ``kautz_mixed``
  (ordered pairs of distinct symbols; reversal gives the edges), and
  ``cycle``;
* bundled fixtures — small record graphs shipped as MGF files with a
  catalogue of their claimed parameters; ``fixture`` re-verifies the claims
  on load so a corrupted file cannot silently feed tests;
* surgery operations — ``reduce_k`` (delete one or two vertices and rewire
  to lower the geodecity level by one), ``truncate_compose`` (blow each
  vertex of a dense digraph up into a copy of an undirected gadget), and
  ``drop_arc_per_vertex`` (thin out-degree by one everywhere).
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

try:
    from importlib.resources import files as _resource_files
except ImportError:  # pragma: no cover - py3.8 fallback, not expected here
    from importlib_resources import files as _resource_files

from .analysis import (
    defect_report,
    distance_report,
    excess_report,
    geodecity_report,
)
from .core import (
    DegreeProfile,
    MixedGraph,
    Pair,
    build_graph,
    degree_profile,
    parse_mgf,
    regularity_report,
)
from .errors import (
    FixtureSelfCheckFailed,
    PreconditionFailed,
    TooLarge,
    UnknownFixture,
)

__all__ = [
    "FIXTURE_CATALOG",
    "FixtureInfo",
    "cycle",
    "drop_arc_per_vertex",
    "fixture",
    "fixture_names",
    "kautz_mixed",
    "permutation_digraph",
    "reduce_k",
    "truncate_compose",
]


# ---------------------------------------------------------------------------
# parametric families


def permutation_digraph(d: int, k: int, cap: int = 1_000_000) -> MixedGraph:
    """Digraph on the k-permutations of ``d + k`` symbols.

    Vertex ``(x_1, .., x_k)`` sends an arc to ``(x_2, .., x_k, c)`` for each
    of the ``d`` symbols ``c`` not already used.  Vertices are numbered in
    lexicographic order of the tuples.  The result is totally regular with
    ``r = 0``, ``z = d`` and has geodetic girth exactly ``k``.

    Raises ``TooLarge`` if the order ``(d+k)! / d!`` exceeds ``cap``.
    """
    if d < 1 or k < 1:
        raise PreconditionFailed("permutation_digraph needs d >= 1 and k >= 1")
    order = 1
    for i in range(d + 1, d + k + 1):
        order *= i
    if order > cap:
        raise TooLarge(f"order {order} exceeds cap {cap}")
    symbols = range(d + k)
    verts = list(itertools.permutations(symbols, k))
    index = {v: i for i, v in enumerate(verts)}
    arcs = []
    for v, i in index.items():
        used = set(v)
        tail = v[1:]
        for c in symbols:
            if c not in used:
                arcs.append((i, index[tail + (c,)]))
    return build_graph(order, [], arcs)


def kautz_mixed(z: int) -> MixedGraph:
    """Mixed Kautz graph on ordered pairs of distinct symbols from ``z + 2``.

    ``ab`` is joined to its reversal ``ba`` by an edge and sends an arc to
    ``bc`` for every symbol ``c`` outside ``{a, b}``.  Totally regular with
    ``r = 1`` and out-degree ``z``; 2-geodetic with diameter 2, and its order
    ``(z + 2)(z + 1)`` meets the level-count bound exactly.
    """
    if z < 1:
        raise PreconditionFailed("kautz_mixed needs z >= 1")
    q = z + 2
    verts = [(a, b) for a in range(q) for b in range(q) if a != b]
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[(a, b)], index[(b, a)]) for a in range(q) for b in range(a + 1, q)]
    arcs = [
        (index[(a, b)], index[(b, c)])
        for (a, b) in verts
        for c in range(q)
        if c != a and c != b
    ]
    return build_graph(len(verts), edges, arcs)


def cycle(n: int, directed: bool = True) -> MixedGraph:
    """Cycle on ``n >= 3`` vertices: one directed cycle, or an undirected one."""
    if n < 3:
        raise PreconditionFailed("cycle needs n >= 3")
    ring = [(i, (i + 1) % n) for i in range(n)]
    if directed:
        return build_graph(n, [], ring)
    return build_graph(n, ring, [])


# ---------------------------------------------------------------------------
# bundled fixtures


@dataclass(frozen=True)
class FixtureInfo:
    """Catalogue entry: claimed parameters of a bundled graph."""

    name: str
    n: int
    r: int
    z: int
    k: int
    kind: str  # "excess" (k-geodetic, n = bound + value) or "defect"
    value: int


_CATALOG_ROWS = [
    ("fig2_almost_moore", 10, 2, 1, 2, "defect", 1),
    ("fig3_excess_one", 12, 2, 1, 2, "excess", 1),
    ("fig_p22", 12, 0, 2, 2, "excess", 5),
    ("fig_d2k2n7_a", 9, 0, 2, 2, "excess", 2),
    ("fig_d2k2n7_b", 9, 0, 2, 2, "excess", 2),
    ("fig_d2k3n20_a", 20, 0, 2, 3, "excess", 5),
    ("fig_d2k3n20_b", 20, 0, 2, 3, "excess", 5),
    ("fig_d3k2n16", 16, 0, 3, 2, "excess", 3),
    ("fig_r1z1k3_a", 16, 1, 1, 3, "excess", 5),
    ("fig_r1z1k3_b", 16, 1, 1, 3, "excess", 5),
    ("fig_r1z1k4", 30, 1, 1, 4, "excess", 11),
    ("fig_r2z2k2", 21, 2, 2, 2, "excess", 2),
]

FIXTURE_CATALOG: dict[str, FixtureInfo] = {
    row[0]: FixtureInfo(*row) for row in _CATALOG_ROWS
}


def fixture_names() -> tuple[str, ...]:
    """Names of all bundled fixtures, in catalogue order."""
    return tuple(FIXTURE_CATALOG)


@lru_cache(maxsize=None)
def _load_and_check(name: str) -> MixedGraph:
    info = FIXTURE_CATALOG[name]
    path = _resource_files("geocage") / "fixtures" / f"{name}.mgf"
    g = parse_mgf(path.read_text())
    problems = []
    if g.n != info.n:
        problems.append(f"order {g.n} != {info.n}")
    if not regularity_report(g, info.r, info.z).totally_regular:
        problems.append(f"not totally regular at ({info.r}, {info.z})")
    if info.kind == "excess":
        rep = geodecity_report(g, info.k)
        if not rep.is_k_geodetic:
            problems.append(f"not {info.k}-geodetic")
        elif geodecity_report(g, info.k + 1).is_k_geodetic:
            problems.append(f"geodetic girth exceeds {info.k}")
        elif excess_report(g, info.r, info.z, info.k).excess != info.value:
            problems.append(f"excess != {info.value}")
    else:
        if distance_report(g).diameter > info.k:
            problems.append(f"diameter exceeds {info.k}")
        elif defect_report(g, info.r, info.z, info.k).defect != info.value:
            problems.append(f"defect != {info.value}")
    if problems:
        raise FixtureSelfCheckFailed(f"{name}: " + "; ".join(problems))
    return g


def fixture(name: str, self_check: bool = True) -> MixedGraph:
    """Load a bundled fixture by name, re-verifying its catalogue claims.

    Raises ``UnknownFixture`` for names outside the catalogue and
    ``FixtureSelfCheckFailed`` if the stored graph no longer exhibits the
    parameters it is catalogued under.
    """
    if name not in FIXTURE_CATALOG:
        raise UnknownFixture(f"no fixture named {name!r}; see fixture_names()")
    if not self_check:
        path = _resource_files("geocage") / "fixtures" / f"{name}.mgf"
        return parse_mgf(path.read_text())
    return _load_and_check(name)


# ---------------------------------------------------------------------------
# surgery operations


def _relabel_without(g_n: int, edges: set[Pair], arcs: set[Pair], removed: set[int]) -> MixedGraph:
    """Drop ``removed`` vertices and compact the rest to 0..n-|removed|-1."""
    keep = [v for v in range(g_n) if v not in removed]
    new_id = {v: i for i, v in enumerate(keep)}
    new_edges = [(new_id[a], new_id[b]) for a, b in edges if a not in removed and b not in removed]
    new_arcs = [(new_id[a], new_id[b]) for a, b in arcs if a not in removed and b not in removed]
    return build_graph(len(keep), new_edges, new_arcs)


def _rewire_vertex(prof: DegreeProfile, u: int, skip: int | None,
                   edges: set[Pair], arcs: set[Pair]) -> None:
    """Splice out vertex ``u``: pair its edge-neighbours, chain in- to out-arcs.

    Mutates ``edges``/``arcs`` in place (the removal of ``u``'s own elements
    happens later, in the relabelling step).  ``skip`` is an edge-neighbour
    to leave out of the pairing (the other endpoint of a deleted edge).
    """
    und = [w for w in prof.undirected[u] if w != skip]
    for i in range(0, len(und) - 1, 2):
        edges.add((min(und[i], und[i + 1]), max(und[i], und[i + 1])))
    heads = prof.out[u]
    if heads:
        for j, w in enumerate(prof.inc[u]):
            arcs.add((w, heads[j % len(heads)]))


def reduce_k(g: MixedGraph, k: int) -> MixedGraph:
    """Shrink a ``(k+1)``-geodetic graph to a ``k``-geodetic one.

    If some vertex has even undirected degree, the lowest-indexed such
    vertex is deleted: its edge-neighbours are paired off into new edges
    (ascending order) and every in-arc is redirected to an out-neighbour,
    round-robin over the ascending out-neighbour list.  Otherwise every
    degree is odd, so an edge exists; the lexicographically smallest edge is
    deleted together with both endpoints, each endpoint being rewired the
    same way.  Requires ``k >= 2``; the result has ``n - 1`` or ``n - 2``
    vertices and is ``k``-geodetic.
    """
    if k < 2:
        raise PreconditionFailed("reduce_k needs k >= 2")
    if not geodecity_report(g, k + 1).is_k_geodetic:
        raise PreconditionFailed(f"input graph is not {k + 1}-geodetic")
    profiles = degree_profile(g)
    edges = set(g.edges)
    arcs = set(g.arcs)
    even = [u for u in range(g.n) if profiles.d[u] % 2 == 0]
    if even:
        u = even[0]
        _rewire_vertex(profiles, u, None, edges, arcs)
        return _relabel_without(g.n, edges, arcs, {u})
    u, v = min(g.edge_list())
    _rewire_vertex(profiles, u, v, edges, arcs)
    _rewire_vertex(profiles, v, u, edges, arcs)
    return _relabel_without(g.n, edges, arcs, {u, v})


def _undirected_girth(g: MixedGraph) -> float:
    """Length of the shortest cycle through the edges of ``g`` (inf if none)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    best = math.inf
    for a, b in g.edges:
        dist = {a: 0}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in adj[x]:
                if (x, y) in ((a, b), (b, a)) or y in dist:
                    continue
                dist[y] = dist[x] + 1
                queue.append(y)
        if b in dist:
            best = min(best, dist[b] + 1)
    return best


def truncate_compose(gadget: MixedGraph, host: MixedGraph, z: int, k: int = 2) -> MixedGraph:
    """Blow each host vertex up into a copy of an undirected gadget.

    ``gadget`` must be purely undirected, regular, and of girth at least
    ``2k + 1``; ``host`` must be purely directed, ``k``-geodetic, and have
    out-degree exactly ``n_gadget * z`` at every vertex.  Host vertex ``u``
    becomes a gadget copy on vertices ``(u, 0) .. (u, n_gadget - 1)``; its
    out-neighbours, sorted ascending, are split into ``n_gadget`` consecutive
    groups of ``z``, and group ``i`` becomes arcs from ``(u, i)`` into the
    lowest-index vertex ``(v, 0)`` of each destination copy.  The result is
    ``k``-geodetic with undirected degree ``r_gadget`` and out-degree ``z``.
    """
    if z < 1 or k < 1:
        raise PreconditionFailed("truncate_compose needs z >= 1 and k >= 1")
    if gadget.arcs:
        raise PreconditionFailed("gadget must have no arcs")
    if len(set(degree_profile(gadget).d)) != 1:
        raise PreconditionFailed("gadget must be regular")
    if _undirected_girth(gadget) < 2 * k + 1:
        raise PreconditionFailed(f"gadget girth must be at least {2 * k + 1}")
    if host.edges:
        raise PreconditionFailed("host must have no edges")
    m = gadget.n
    host_prof = degree_profile(host)
    if any(d_out != m * z for d_out in host_prof.d_out):
        raise PreconditionFailed(f"host out-degree must be {m} * {z} everywhere")
    if not geodecity_report(host, k).is_k_geodetic:
        raise PreconditionFailed(f"host is not {k}-geodetic")

    edges = [
        (u * m + a, u * m + b)
        for u in range(host.n)
        for a, b in gadget.edge_list()
    ]
    arcs = []
    for u in range(host.n):
        heads = host_prof.out[u]
        for i in range(m):
            for v in heads[i * z:(i + 1) * z]:
                arcs.append((u * m + i, v * m))
    return build_graph(host.n * m, edges, arcs)


def drop_arc_per_vertex(g: MixedGraph, choose=None) -> MixedGraph:
    """Delete exactly one outgoing arc at every vertex.

    ``choose(u, heads)`` picks the head to cut from the ascending tuple of
    out-neighbours; the default takes the smallest.  Raises
    ``PreconditionFailed`` on a vertex with no outgoing arc.  Any walk of the
    result is a walk of ``g``, so ``k``-geodecity is preserved.
    """
    profiles = degree_profile(g)
    arcs = set(g.arcs)
    for u in range(g.n):
        heads = profiles.out[u]
        if not heads:
            raise PreconditionFailed(f"vertex {u} has no outgoing arc")
        pick = heads[0] if choose is None else choose(u, heads)
        if (u, pick) not in arcs:
            raise PreconditionFailed(f"choose() returned a non-arc ({u}, {pick})")
        arcs.remove((u, pick))
    return build_graph(g.n, g.edge_list(), sorted(arcs))
