"""Finite groups as multiplication tables, and Cayley mixed graphs.

A group lives here as a dense multiplication table over elements
``0 .. order-1`` (``table[a][b]`` is the product ``a * b``), fully validated
against the group axioms on construction.  Tables come from presets
(cyclic, dihedral, dicyclic, symmetric, alternating, affine, semidirect and
direct products), from closing a set of permutations under composition, or
from a small text format.

``catalog(order)`` returns every group of the given order up to isomorphism
for orders 1..24 — enough to scan for record Cayley graphs by brute force.

A connection set ``S`` (identity-free subset of a group) defines a mixed
Cayley graph on the group: ``s`` with ``s^-1`` also in ``S`` contributes
edges ``{x, x*s}``, the remaining elements contribute arcs ``(x, x*s)``.
``connection_sets`` enumerates the sets realizing a target degree pair,
de-duplicated under conjugation.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .core import MixedGraph, build_graph
from .errors import (
    CapExceeded,
    CatalogIncomplete,
    IdentityInS,
    InvalidParam,
    MgfSyntaxError,
    NotAGroup,
    NotBijection,
)

__all__ = [
    "CATALOG_MAX_ORDER",
    "ConnectionSet",
    "GroupTable",
    "alternating",
    "affine",
    "catalog",
    "cayley_mixed",
    "closure_from_generators",
    "connection_set",
    "connection_sets",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "generates",
    "parse_group_table",
    "preset",
    "semidirect_cyclic",
    "symmetric",
    "write_group_table",
]

CATALOG_MAX_ORDER = 24

_ASSOC_FULL_LIMIT = 64
_ASSOC_SAMPLES = 50_000


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the product of ``a`` and ``b``; construction verifies
    closure, the Latin-square property, a two-sided identity, inverses, and
    associativity (exhaustively up to order 64, sampled above), raising
    ``NotAGroup`` with the violated axiom named.
    """

    table: tuple[tuple[int, ...], ...]
    name: str = field(default="G", compare=False)
    order: int = field(init=False)
    identity: int = field(init=False)
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise NotAGroup("empty table")
        full = frozenset(range(n))
        for a, row in enumerate(table):
            if len(row) != n or frozenset(row) != full:
                raise NotAGroup(f"row {a} is not a permutation of 0..{n - 1}")
        for b in range(n):
            if frozenset(row[b] for row in table) != full:
                raise NotAGroup(f"column {b} is not a permutation of 0..{n - 1}")
        identity = None
        for e in range(n):
            if all(table[e][b] == b for b in range(n)) and all(
                table[a][e] == a for a in range(n)
            ):
                identity = e
                break
        if identity is None:
            raise NotAGroup("no two-sided identity")
        inverse = [0] * n
        for a in range(n):
            inv = table[a].index(identity)
            if table[inv][a] != identity:
                raise NotAGroup(f"element {a} has no two-sided inverse")
            inverse[a] = inv
        if n <= _ASSOC_FULL_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0xA550C)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "inverse", tuple(inverse))

    # -- basic operations ---------------------------------------------------

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def is_involution(self, a: int) -> bool:
        return a != self.identity and self.table[a][a] == self.identity

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self) -> tuple[int, ...]:
        """Sorted multiset of the orders of all elements."""
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def center_elements(self) -> tuple[int, ...]:
        return tuple(
            a
            for a in range(self.order)
            if all(self.table[a][b] == self.table[b][a] for b in range(self.order))
        )

    def conjugacy_class_sizes(self) -> tuple[int, ...]:
        seen = [False] * self.order
        sizes = []
        for a in range(self.order):
            if seen[a]:
                continue
            cls = {
                self.table[self.table[g][a]][self.inverse[g]]
                for g in range(self.order)
            }
            for x in cls:
                seen[x] = True
            sizes.append(len(cls))
        return tuple(sorted(sizes))

    def derived_subgroup_elements(self) -> tuple[int, ...]:
        commutators = {
            self.table[self.table[a][b]][
                self.table[self.inverse[a]][self.inverse[b]]
            ]
            for a in range(self.order)
            for b in range(self.order)
        }
        return tuple(sorted(_close_subset(self, commutators)))


def _close_subset(gt: GroupTable, seed: set[int]) -> set[int]:
    """Close a subset containing images of products under the group product."""
    closed = set(seed) | {gt.identity}
    frontier = list(closed)
    while frontier:
        a = frontier.pop()
        for b in list(closed):
            for c in (gt.table[a][b], gt.table[b][a]):
                if c not in closed:
                    closed.add(c)
                    frontier.append(c)
    return closed


# ---------------------------------------------------------------------------
# serialization


def parse_group_table(text: str | bytes) -> GroupTable:
    """Parse the plain-text table format: ``grp 1``, ``n N``, then N rows.

    ``#`` starts a comment; blank lines are ignored.  Raises
    ``MgfSyntaxError`` with the offending line number on malformed input and
    ``NotAGroup`` if the numbers do not form a group.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows: list[tuple[int, ...]] = []
    n: int | None = None
    saw_magic = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not saw_magic:
            if parts != ["grp", "1"]:
                raise MgfSyntaxError(lineno, "expected header 'grp 1'")
            saw_magic = True
            continue
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise MgfSyntaxError(lineno, "expected 'n <order>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise MgfSyntaxError(lineno, "order is not an integer") from None
            if n < 1:
                raise MgfSyntaxError(lineno, "order must be at least 1")
            continue
        if len(rows) >= n:
            raise MgfSyntaxError(lineno, f"more than {n} table rows")
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise MgfSyntaxError(lineno, "non-integer table entry") from None
        if len(row) != n:
            raise MgfSyntaxError(lineno, f"expected {n} entries, got {len(row)}")
        if any(x < 0 or x >= n for x in row):
            raise MgfSyntaxError(lineno, "table entry out of range")
        rows.append(row)
    if not saw_magic:
        raise MgfSyntaxError(1, "missing header 'grp 1'")
    if n is None:
        raise MgfSyntaxError(1, "missing 'n <order>' line")
    if len(rows) != n:
        raise MgfSyntaxError(1, f"expected {n} table rows, got {len(rows)}")
    return GroupTable(tuple(rows), name="parsed")


def write_group_table(gt: GroupTable) -> str:
    lines = ["grp 1", f"n {gt.order}"]
    lines += [" ".join(str(x) for x in row) for row in gt.table]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# building tables


def _table_from_mul(elements: list, mul, name: str) -> GroupTable:
    index = {g: i for i, g in enumerate(elements)}
    table = tuple(
        tuple(index[mul(a, b)] for b in elements) for a in elements
    )
    return GroupTable(table, name=name)


def _closure_elements(gens: list, mul, identity, cap: int) -> list:
    elements = [identity]
    index = {identity}
    queue = [identity]
    while queue:
        g = queue.pop(0)
        for s in gens:
            h = mul(g, s)
            if h not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"closure grew past cap {cap}")
                index.add(h)
                elements.append(h)
                queue.append(h)
    return elements


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``q`` first, then ``p``."""
    return tuple(p[x] for x in q)


def closure_from_generators(
    perms: list[tuple[int, ...]], name: str = "closure", cap: int = 2000
) -> GroupTable:
    """Group generated by permutations of ``0..m-1`` under composition.

    Elements are numbered in breadth-first discovery order starting from the
    identity.  Raises ``NotBijection`` for a malformed generator and
    ``CapExceeded`` if the closure grows past ``cap`` elements.
    """
    if not perms:
        raise InvalidParam("need at least one generator")
    m = len(perms[0])
    gens = []
    for p in perms:
        p = tuple(p)
        if len(p) != m or sorted(p) != list(range(m)):
            raise NotBijection(f"generator {p!r} is not a permutation of 0..{m - 1}")
        gens.append(p)
    identity = tuple(range(m))
    elements = _closure_elements(gens, _compose, identity, cap)
    return _table_from_mul(elements, _compose, name)


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InvalidParam("cyclic needs order >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupTable(table, name=f"C{n}")


def dihedral(order: int) -> GroupTable:
    """Symmetries of a regular polygon; ``order`` must be even and >= 6."""
    if order < 6 or order % 2:
        raise InvalidParam("dihedral needs an even order >= 6")
    q = order // 2
    rot = tuple((i + 1) % q for i in range(q))
    ref = tuple((q - i) % q for i in range(q))
    gt = closure_from_generators([rot, ref], name=f"D{order}", cap=order + 1)
    if gt.order != order:
        raise NotAGroup(f"dihedral construction produced order {gt.order}")
    return gt


def dicyclic(order: int) -> GroupTable:
    """Dicyclic group of order ``4m`` (quaternion for order 8), ``m >= 2``."""
    if order % 4 or order < 8:
        raise InvalidParam("dicyclic needs order divisible by 4 and >= 8")
    m = order // 4
    n2 = 2 * m

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        i2, j2 = y
        if j == 0:
            return ((i + i2) % n2, j2)
        if j2 == 0:
            return ((i - i2) % n2, 1)
        return ((i - i2 + m) % n2, 0)

    elements = [(i, j) for j in (0, 1) for i in range(n2)]
    name = "Q8" if order == 8 else f"Dic{order}"
    return _table_from_mul(elements, mul, name)


def symmetric(m: int) -> GroupTable:
    if m < 1:
        raise InvalidParam("symmetric needs m >= 1")
    if m == 1:
        return GroupTable(((0,),), name="S1")
    cycle_gen = tuple(list(range(1, m)) + [0])
    swap = tuple([1, 0] + list(range(2, m)))
    return closure_from_generators(
        [swap, cycle_gen], name=f"S{m}", cap=math.factorial(m) + 1
    )


def alternating(m: int) -> GroupTable:
    if m < 3:
        raise InvalidParam("alternating needs m >= 3")
    gens = []
    for j in range(2, m):
        p = list(range(m))
        p[0], p[1], p[j] = 1, j, 0
        gens.append(tuple(p))
    return closure_from_generators(
        gens, name=f"A{m}", cap=math.factorial(m) // 2 + 1
    )


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    elements = [(x, y) for x in range(a.order) for y in range(b.order)]

    def mul(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
        return (a.table[p[0]][q[0]], b.table[p[1]][q[1]])

    return _table_from_mul(elements, mul, f"{a.name}x{b.name}")


def affine(p: int) -> GroupTable:
    """Maps ``x -> a*x + b`` over the integers mod a prime ``p``."""
    if p < 2 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
        raise InvalidParam("affine needs a prime modulus")
    elements = [(a, b) for a in range(1, p) for b in range(p)]

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        a, b = x
        c, d = y
        return ((a * c) % p, (a * d + b) % p)

    return _table_from_mul(elements, mul, f"Aff{p}")


def semidirect_cyclic(m: int, q: int, t: int) -> GroupTable:
    """Cyclic-by-cyclic semidirect product: ``C_m`` twisted by ``x -> t*x``.

    Elements are pairs ``(i, j)`` with ``(i, j)(i', j') = (i + t^j i', j + j')``;
    requires ``gcd(t, m) = 1`` and ``t^q = 1 (mod m)``.
    """
    if m < 1 or q < 1:
        raise InvalidParam("semidirect_cyclic needs m, q >= 1")
    if math.gcd(t, m) != 1 or pow(t, q, m) != 1 % m:
        raise InvalidParam(f"t={t} does not define an order-{q} twist mod {m}")
    elements = [(i, j) for j in range(q) for i in range(m)]

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        i2, j2 = y
        return ((i + pow(t, j, m) * i2) % m, (j + j2) % q)

    return _table_from_mul(elements, mul, f"C{m}:C{q}(t={t})")


def _pauli16() -> GroupTable:
    """Central product of the quaternion frame: order 16, cyclic centre."""
    elements = [(e, x, z) for e in range(4) for x in range(2) for z in range(2)]

    def mul(g: tuple[int, int, int], h: tuple[int, int, int]) -> tuple[int, int, int]:
        e1, x1, z1 = g
        e2, x2, z2 = h
        return ((e1 + e2 + 2 * z1 * x2) % 4, x1 ^ x2, z1 ^ z2)

    return _table_from_mul(elements, mul, "Pauli16")


def _klein_by_c4() -> GroupTable:
    """Klein four-group twisted by a coordinate swap of order 4 on top."""
    elements = [(v, j) for v in range(4) for j in range(4)]

    def swap(v: int) -> int:
        return ((v & 1) << 1) | (v >> 1)

    def mul(g: tuple[int, int], h: tuple[int, int]) -> tuple[int, int]:
        v, j = g
        w, l = h
        return (v ^ (swap(w) if j % 2 else w), (j + l) % 4)

    return _table_from_mul(elements, mul, "(C2xC2):C4")


def _gen_dihedral_9() -> GroupTable:
    """Generalized dihedral group over C3 x C3 (order 18)."""
    elements = [(v0, v1, f) for f in range(2) for v0 in range(3) for v1 in range(3)]

    def mul(g: tuple[int, int, int], h: tuple[int, int, int]) -> tuple[int, int, int]:
        a0, a1, f = g
        b0, b1, e = h
        sign = -1 if f else 1
        return ((a0 + sign * b0) % 3, (a1 + sign * b1) % 3, f ^ e)

    return _table_from_mul(elements, mul, "(C3xC3):C2")


def _sl23() -> GroupTable:
    """2x2 matrices of determinant 1 over the field with 3 elements."""
    gens = [(1, 1, 0, 1), (0, 2, 1, 0)]

    def mul(x: tuple[int, int, int, int], y: tuple[int, int, int, int]):
        a, b, c, d = x
        e, f, g, h = y
        return (
            (a * e + b * g) % 3,
            (a * f + b * h) % 3,
            (c * e + d * g) % 3,
            (c * f + d * h) % 3,
        )

    elements = _closure_elements(gens, mul, (1, 0, 0, 1), cap=25)
    return _table_from_mul(elements, mul, "SL(2,3)")


def _c6xc2_by_c2() -> GroupTable:
    """The order-24 group generated by (0123)(56), (13), (456)."""
    return closure_from_generators(
        [
            (1, 2, 3, 0, 4, 6, 5),  # (0 1 2 3)(5 6)
            (0, 3, 2, 1, 4, 5, 6),  # (1 3)
            (0, 1, 2, 3, 5, 6, 4),  # (4 5 6)
        ],
        name="(C6xC2):C2",
        cap=25,
    )


def catalog(order: int) -> tuple[GroupTable, ...]:
    """All groups of the given order up to isomorphism, orders 1..24.

    Raises ``CatalogIncomplete`` above order 24.
    """
    if order < 1:
        raise InvalidParam("order must be at least 1")
    if order > CATALOG_MAX_ORDER:
        raise CatalogIncomplete(f"catalog covers orders 1..{CATALOG_MAX_ORDER}")
    c = cyclic
    builders: dict[int, list] = {
        1: [lambda: c(1)],
        2: [lambda: c(2)],
        3: [lambda: c(3)],
        4: [lambda: c(4), lambda: direct_product(c(2), c(2))],
        5: [lambda: c(5)],
        6: [lambda: c(6), lambda: symmetric(3)],
        7: [lambda: c(7)],
        8: [
            lambda: c(8),
            lambda: direct_product(c(4), c(2)),
            lambda: direct_product(direct_product(c(2), c(2)), c(2)),
            lambda: dihedral(8),
            lambda: dicyclic(8),
        ],
        9: [lambda: c(9), lambda: direct_product(c(3), c(3))],
        10: [lambda: c(10), lambda: dihedral(10)],
        11: [lambda: c(11)],
        12: [
            lambda: c(12),
            lambda: direct_product(c(6), c(2)),
            lambda: dihedral(12),
            lambda: dicyclic(12),
            lambda: alternating(4),
        ],
        13: [lambda: c(13)],
        14: [lambda: c(14), lambda: dihedral(14)],
        15: [lambda: c(15)],
        16: [
            lambda: c(16),
            lambda: direct_product(c(8), c(2)),
            lambda: direct_product(c(4), c(4)),
            lambda: direct_product(direct_product(c(4), c(2)), c(2)),
            lambda: direct_product(
                direct_product(c(2), c(2)), direct_product(c(2), c(2))
            ),
            lambda: dihedral(16),
            lambda: dicyclic(16),
            lambda: semidirect_cyclic(8, 2, 3),  # semidihedral
            lambda: semidirect_cyclic(8, 2, 5),  # modular
            lambda: direct_product(dihedral(8), c(2)),
            lambda: direct_product(dicyclic(8), c(2)),
            lambda: semidirect_cyclic(4, 4, 3),
            _pauli16,
            _klein_by_c4,
        ],
        17: [lambda: c(17)],
        18: [
            lambda: c(18),
            lambda: direct_product(c(6), c(3)),
            lambda: dihedral(18),
            lambda: direct_product(symmetric(3), c(3)),
            _gen_dihedral_9,
        ],
        19: [lambda: c(19)],
        20: [
            lambda: c(20),
            lambda: direct_product(c(10), c(2)),
            lambda: dihedral(20),
            lambda: dicyclic(20),
            lambda: affine(5),
        ],
        21: [lambda: c(21), lambda: semidirect_cyclic(7, 3, 2)],
        22: [lambda: c(22), lambda: dihedral(22)],
        23: [lambda: c(23)],
        24: [
            lambda: c(24),
            lambda: direct_product(c(12), c(2)),
            lambda: direct_product(direct_product(c(6), c(2)), c(2)),
            lambda: dihedral(24),
            lambda: dicyclic(24),
            lambda: direct_product(dihedral(12), c(2)),
            lambda: direct_product(dicyclic(12), c(2)),
            lambda: direct_product(dihedral(8), c(3)),
            lambda: direct_product(dicyclic(8), c(3)),
            lambda: direct_product(symmetric(3), c(4)),
            lambda: semidirect_cyclic(3, 8, 2),
            lambda: _sl23(),
            lambda: symmetric(4),
            lambda: direct_product(alternating(4), c(2)),
            _c6xc2_by_c2,
        ],
    }
    return tuple(build() for build in builders[order])


# ---------------------------------------------------------------------------
# preset tokens (CLI surface)


def preset(token: str, cap: int = 2000) -> GroupTable:
    """Build a group from a compact token such as ``cyclic:12`` or
    ``product:cyclic:3,sym:3``.

    Supported heads: cyclic, dihedral, dicyclic, sym, alt, affine,
    semidirect (``semidirect:m:q:t``) and product (two comma-separated
    sub-tokens).
    """
    head, sep, rest = token.partition(":")
    if not sep:
        raise InvalidParam(f"malformed group token {token!r}")
    if head == "product":
        parts = rest.split(",")
        if len(parts) != 2:
            raise InvalidParam("product token needs exactly two factors")
        return direct_product(preset(parts[0], cap), preset(parts[1], cap))
    try:
        args = [int(x) for x in rest.split(":")]
    except ValueError:
        raise InvalidParam(f"non-integer parameter in token {token!r}") from None
    single = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "dicyclic": dicyclic,
        "sym": symmetric,
        "alt": alternating,
        "affine": affine,
    }
    if head in single:
        if len(args) != 1:
            raise InvalidParam(f"{head} token needs exactly one parameter")
        return single[head](args[0])
    if head == "semidirect":
        if len(args) != 3:
            raise InvalidParam("semidirect token needs m:q:t")
        return semidirect_cyclic(*args)
    raise InvalidParam(f"unknown group token head {head!r}")


# ---------------------------------------------------------------------------
# Cayley graphs


@dataclass(frozen=True)
class ConnectionSet:
    """An identity-free subset of a group with its derived degree split.

    ``r`` counts members whose inverse is also in the set (these give
    edges); ``z`` counts the rest (arcs).
    """

    elements: tuple[int, ...]
    r: int
    z: int


def connection_set(gt: GroupTable, elements) -> ConnectionSet:
    """Validate and classify a connection set for ``gt``."""
    given = tuple(elements)
    elems = tuple(sorted(set(given)))
    if len(elems) != len(given):
        raise InvalidParam("connection set has repeated elements")
    if any(s < 0 or s >= gt.order for s in elems):
        raise InvalidParam("connection set element out of range")
    if gt.identity in elems:
        raise IdentityInS("the identity cannot be a connection-set element")
    member = set(elems)
    r = sum(1 for s in elems if gt.inverse[s] in member)
    return ConnectionSet(elems, r, len(elems) - r)


def cayley_mixed(gt: GroupTable, conn) -> MixedGraph:
    """Mixed Cayley graph of ``gt`` with the given connection set.

    Vertices are the group elements; ``s`` with its inverse present gives
    edges ``{x, x*s}``, other members give arcs ``(x, x*s)``.
    """
    cs = conn if isinstance(conn, ConnectionSet) else connection_set(gt, conn)
    member = set(cs.elements)
    edges = set()
    arcs = []
    for s in cs.elements:
        paired = gt.inverse[s] in member
        for x in range(gt.order):
            y = gt.table[x][s]
            if paired:
                edges.add((min(x, y), max(x, y)))
            else:
                arcs.append((x, y))
    return build_graph(gt.order, sorted(edges), arcs)


def generates(gt: GroupTable, elements) -> bool:
    """Whether the elements generate the whole group."""
    seen = {gt.identity}
    queue = [gt.identity]
    while queue:
        g = queue.pop()
        for s in elements:
            h = gt.table[g][s]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return len(seen) == gt.order


def _conjugate_set(gt: GroupTable, elems: tuple[int, ...], g: int) -> tuple[int, ...]:
    ginv = gt.inverse[g]
    return tuple(sorted(gt.table[gt.table[g][s]][ginv] for s in elems))


def connection_sets(
    gt: GroupTable, r: int, z: int, reduce: bool = True
) -> list[ConnectionSet]:
    """All generating connection sets realizing degree split ``(r, z)``.

    The undirected part is assembled from involutions and whole inverse
    pairs (so it is inverse-closed and contributes exactly ``r``); the
    directed part takes ``z`` non-involutions, at most one from each inverse
    pair.  Only sets generating the whole group are kept.  With ``reduce``,
    conjugate sets are collapsed to their lexicographically smallest member.
    """
    if r < 0 or z < 0:
        raise InvalidParam("degrees must be nonnegative")
    e = gt.identity
    involutions = [a for a in range(gt.order) if a != e and gt.inverse[a] == a]
    pairs = [
        (a, gt.inverse[a])
        for a in range(gt.order)
        if a != e and a < gt.inverse[a]
    ]
    results: list[ConnectionSet] = []
    seen_reps: set[tuple[int, ...]] = set()
    for num_pairs in range(r // 2 + 1):
        num_inv = r - 2 * num_pairs
        if num_inv > len(involutions) or num_pairs > len(pairs):
            continue
        for inv_pick in itertools.combinations(involutions, num_inv):
            for pair_pick in itertools.combinations(pairs, num_pairs):
                undirected = set(inv_pick)
                for a, b in pair_pick:
                    undirected.update((a, b))
                free_pairs = [p for p in pairs if p not in pair_pick]
                for directed in _directed_parts(free_pairs, z):
                    elems = tuple(sorted(undirected | set(directed)))
                    if not generates(gt, elems):
                        continue
                    if reduce:
                        rep = min(
                            _conjugate_set(gt, elems, g) for g in range(gt.order)
                        )
                        if rep in seen_reps:
                            continue
                        seen_reps.add(rep)
                    results.append(ConnectionSet(elems, r, z))
    results.sort(key=lambda cs: cs.elements)
    return results


def _directed_parts(free_pairs: list[tuple[int, int]], z: int):
    """Choose z arc-elements: at most one from each unused inverse pair."""
    for pick in itertools.combinations(range(len(free_pairs)), z):
        for orientation in itertools.product((0, 1), repeat=z):
            yield tuple(
                free_pairs[i][o] for i, o in zip(pick, orientation)
            )
