"""Mixed graph model, degree bookkeeping, and serialization.

A mixed graph has n vertices labelled 0..n-1, a set of undirected edges
{u, v} and a set of directed arcs (u, v).  Loops are rejected.  At most one
element may join a pair of vertices: parallel duplicates collapse, a digon
(arcs both ways between u and v) must be declared as the edge {u, v}
instead, and an arc may not shadow an edge.

The text format (MGF) is line oriented::

    mgf 1
    n 5
    e 0 1
    a 1 2

``#`` starts a comment.  Canonical output lists edges first, each as
``e min max`` in lexicographic order, then arcs in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DigonConflict, LoopRejected, MgfSyntaxError, OutOfRange

Pair = tuple[int, int]


@dataclass(frozen=True)
class MixedGraph:
    """An immutable, validated mixed graph.

    Edges are stored as (min, max) pairs; arcs as (tail, head).  Build
    instances through :func:`build_graph`, which enforces the model rules.
    """

    n: int
    edges: frozenset[Pair]
    arcs: frozenset[Pair]

    def edge_list(self) -> list[Pair]:
        return sorted(self.edges)

    def arc_list(self) -> list[Pair]:
        return sorted(self.arcs)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


def build_graph(n: int, edges: object = (), arcs: object = ()) -> MixedGraph:
    """Validate and freeze a mixed graph.

    Duplicate edges/arcs collapse before the digon and overlap rules are
    checked.  Raises LoopRejected, OutOfRange or DigonConflict naming the
    offending pair.
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    edge_set: set[Pair] = set()
    for e in edges:
        u, v = e
        _check_endpoints(n, u, v)
        edge_set.add((min(u, v), max(u, v)))
    arc_set: set[Pair] = set()
    for a in arcs:
        u, v = a
        _check_endpoints(n, u, v)
        arc_set.add((u, v))
    for u, v in arc_set:
        if (v, u) in arc_set:
            raise DigonConflict(f"arcs both ways between {u} and {v}; declare the edge instead")
        if (min(u, v), max(u, v)) in edge_set:
            raise DigonConflict(f"arc ({u}, {v}) shadows edge {{{min(u, v)}, {max(u, v)}}}")
    return MixedGraph(n=n, edges=frozenset(edge_set), arcs=frozenset(arc_set))


def _check_endpoints(n: int, u: int, v: int) -> None:
    for w in (u, v):
        if not isinstance(w, int) or not 0 <= w < n:
            raise OutOfRange(f"endpoint {w} outside 0..{n - 1} in ({u}, {v})")
    if u == v:
        raise LoopRejected(f"loop at vertex {u}")


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex neighborhoods and degrees of a mixed graph.

    ``undirected[u]``, ``out[u]`` and ``inc[u]`` are the sorted undirected,
    out- and in-neighborhoods; d/d_out/d_in are the corresponding degrees.
    """

    undirected: tuple[tuple[int, ...], ...]
    out: tuple[tuple[int, ...], ...]
    inc: tuple[tuple[int, ...], ...]
    d: tuple[int, ...] = field(init=False)
    d_out: tuple[int, ...] = field(init=False)
    d_in: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(len(s) for s in self.undirected))
        object.__setattr__(self, "d_out", tuple(len(s) for s in self.out))
        object.__setattr__(self, "d_in", tuple(len(s) for s in self.inc))

    def min_degrees(self) -> tuple[int, int, int]:
        return (min(self.d), min(self.d_out), min(self.d_in))

    def max_degrees(self) -> tuple[int, int, int]:
        return (max(self.d), max(self.d_out), max(self.d_in))


def degree_profile(g: MixedGraph) -> DegreeProfile:
    """Compute sorted neighborhoods; total over all vertices of d is 2|edges|,
    and the totals of d_out and d_in both equal |arcs|."""
    und: list[list[int]] = [[] for _ in range(g.n)]
    out: list[list[int]] = [[] for _ in range(g.n)]
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        und[u].append(v)
        und[v].append(u)
    for u, v in g.arcs:
        out[u].append(v)
        inc[v].append(u)
    return DegreeProfile(
        undirected=tuple(tuple(sorted(s)) for s in und),
        out=tuple(tuple(sorted(s)) for s in out),
        inc=tuple(tuple(sorted(s)) for s in inc),
    )


@dataclass(frozen=True)
class RegularityReport:
    """How close a graph is to total regularity at target degrees (r, z).

    out_regular: every vertex has undirected degree r and out-degree z.
    totally_regular: additionally every in-degree equals z.
    s_deficient: vertices with in-degree < z; s_surplus: in-degree > z.
    sigma: total in-degree deficiency over s_deficient.
    """

    out_regular: bool
    totally_regular: bool
    s_deficient: frozenset[int]
    s_surplus: frozenset[int]
    sigma: int


def regularity_report(g: MixedGraph, r: int, z: int) -> RegularityReport:
    if r < 0 or z < 0:
        raise OutOfRange(f"target degrees must be >= 0, got ({r}, {z})")
    prof = degree_profile(g)
    out_regular = all(d == r for d in prof.d) and all(d == z for d in prof.d_out)
    deficient = frozenset(u for u in range(g.n) if prof.d_in[u] < z)
    surplus = frozenset(u for u in range(g.n) if prof.d_in[u] > z)
    sigma = sum(z - prof.d_in[u] for u in deficient)
    return RegularityReport(
        out_regular=out_regular,
        totally_regular=out_regular and not deficient and not surplus,
        s_deficient=deficient,
        s_surplus=surplus,
        sigma=sigma,
    )


def parse_mgf(text: str | bytes) -> MixedGraph:
    """Parse the MGF text format; see the module docstring for the grammar."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: int | None = None
    edges: list[Pair] = []
    arcs: list[Pair] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_header:
            if tokens != ["mgf", "1"]:
                raise MgfSyntaxError(lineno, f"expected 'mgf 1' header, got {line!r}")
            saw_header = True
            continue
        kind = tokens[0]
        if kind == "n":
            if n is not None:
                raise MgfSyntaxError(lineno, "duplicate 'n' line")
            n = _parse_ints(lineno, tokens[1:], 1)[0]
        elif kind in ("e", "a"):
            if n is None:
                raise MgfSyntaxError(lineno, f"'{kind}' line before 'n'")
            u, v = _parse_ints(lineno, tokens[1:], 2)
            (edges if kind == "e" else arcs).append((u, v))
        else:
            raise MgfSyntaxError(lineno, f"unknown line kind {kind!r}")
    if not saw_header:
        raise MgfSyntaxError(1, "missing 'mgf 1' header")
    if n is None:
        raise MgfSyntaxError(1, "missing 'n' line")
    return build_graph(n, edges, arcs)


def _parse_ints(lineno: int, tokens: list[str], count: int) -> list[int]:
    if len(tokens) != count:
        raise MgfSyntaxError(lineno, f"expected {count} integer(s), got {len(tokens)}")
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise MgfSyntaxError(lineno, f"not an integer: {t!r}") from None
    return values


def write_mgf(g: MixedGraph) -> str:
    """Serialize in canonical order: header, n, sorted edges, sorted arcs."""
    lines = ["mgf 1", f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edge_list()]
    lines += [f"a {u} {v}" for u, v in g.arc_list()]
    return "\n".join(lines) + "\n"


def to_dot(g: MixedGraph, name: str = "mixed") -> str:
    """DOT export: edges rendered undirected (dir=none), arcs directed."""
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edge_list():
        lines.append(f"  {u} -> {v} [dir=none];")
    for u, v in g.arc_list():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
