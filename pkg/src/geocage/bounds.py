"""Moore-style bounds for mixed graphs of undirected degree r, directed
out-degree z, and geodecity (or diameter) k, plus excess/defect lower
bounds and the number-theoretic feasibility predicates.

Every bound value is computed in exact integer arithmetic via the tree
census recurrences; the real closed forms are provided as cross-checks
only.  The depth-k tree rooted anywhere in such a graph has, at level t,
U_t vertices entered via an edge and Z_t entered via an arc:

    U_1 = r, Z_1 = z,  U_{t+1} = (r-1) U_t + r Z_t,  Z_{t+1} = z (U_t + Z_t)

and the Moore bound is M(r,z,k) = 1 + sum of all levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateRoot, PreconditionFailed


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class MooreLevels:
    """Per-level census of the depth-k tree: u_levels[t-1] and z_levels[t-1]
    hold U_t and Z_t for t = 1..k; m is the Moore bound."""

    r: int
    z: int
    k: int
    u_levels: tuple[int, ...]
    z_levels: tuple[int, ...]
    m: int


def moore_levels(r: int, z: int, k: int) -> MooreLevels:
    if r < 0 or z < 0 or r + z < 1 or k < 1:
        raise PreconditionFailed(f"need r, z >= 0, r+z >= 1, k >= 1; got ({r}, {z}, {k})")
    u, zz = r, z
    us, zs = [u], [zz]
    for _ in range(k - 1):
        u, zz = (0 if r == 0 else (r - 1) * u + r * zz), z * (u + zz)
        us.append(u)
        zs.append(zz)
    return MooreLevels(r=r, z=z, k=k, u_levels=tuple(us), z_levels=tuple(zs),
                       m=1 + sum(us) + sum(zs))


def moore_mixed(r: int, z: int, k: int) -> int:
    """Exact Moore bound M(r, z, k)."""
    return moore_levels(r, z, k).m


@dataclass(frozen=True)
class BoundSpectrum:
    """Real quantities behind the closed forms.

    lam1/lam2 (equivalently u2/u1) are the roots of x^2 - (r+z-1)x - z,
    phi = sqrt(v) their difference, and a_coef/b_coef the partial-fraction
    weights of the Moore closed form.
    """

    r: int
    z: int
    v: int
    phi: float
    lam1: float
    lam2: float
    u1: float
    u2: float
    a_coef: float
    b_coef: float


def spectrum(r: int, z: int) -> BoundSpectrum:
    if r < 0 or z < 0 or r + z < 1:
        raise PreconditionFailed(f"need r, z >= 0 and r+z >= 1; got ({r}, {z})")
    v = (z + r) ** 2 + 2 * (z - r) + 1
    if v == 0:
        raise DegenerateRoot(f"repeated characteristic root for (r, z) = ({r}, {z})")
    phi = math.sqrt(v)
    u1 = (z + r - 1 - phi) / 2
    u2 = (z + r - 1 + phi) / 2
    a_coef = (phi - (z + r + 1)) / (2 * phi)
    b_coef = (phi + (z + r + 1)) / (2 * phi)
    return BoundSpectrum(r=r, z=z, v=v, phi=phi, lam1=u2, lam2=u1, u1=u1, u2=u2,
                         a_coef=a_coef, b_coef=b_coef)


def _geometric(u: float, k: int) -> float:
    return (u ** (k + 1) - 1) / (u - 1)


def moore_closed_form(r: int, z: int, k: int) -> float:
    """Closed-form Moore bound; raises DegenerateRoot when a characteristic
    root equals 1 (r=2, z=0 and r=0, z=1) or is repeated (r=1, z=0), in
    which case callers fall back to the integer census."""
    if k < 1:
        raise PreconditionFailed(f"need k >= 1, got {k}")
    s = spectrum(r, z)
    root = math.isqrt(s.v)
    if root * root == s.v and (z + r - 1 + root == 2 or z + r - 1 - root == 2):
        raise DegenerateRoot(f"characteristic root 1 for (r, z) = ({r}, {z})")
    return s.a_coef * _geometric(s.u1, k) + s.b_coef * _geometric(s.u2, k)


def arrow_levels(r: int, z: int, k: int) -> tuple[int, ...]:
    """Z_1..Z_{k-1} for the branch-restricted census (an undirected branch
    has no arc-entered vertex at level 1, and r z of them at level 2):
    Z_1 = 0, Z_2 = r z, Z_{t+2} = (r+z-1) Z_{t+1} + z Z_t."""
    if r < 0 or z < 0 or k < 2:
        raise PreconditionFailed(f"need r, z >= 0 and k >= 2; got ({r}, {z}, {k})")
    zs = [0, r * z]
    while len(zs) < k - 1:
        zs.append((r + z - 1) * zs[-1] + z * zs[-2])
    return tuple(zs[: k - 1])


def arrow_count(r: int, z: int, k: int) -> int:
    """A(r, z, k): arc-entered vertices at levels 1..k-1 of one undirected
    branch; exact integer."""
    return sum(arrow_levels(r, z, k))


def arrow_count_closed_form(r: int, z: int, k: int) -> float:
    """Real cross-check for arrow_count; DegenerateRoot when a root is 1."""
    s = spectrum(r, z)
    for lam in (s.lam1, s.lam2):
        if abs(lam - 1) < 1e-12:
            raise DegenerateRoot(f"characteristic root 1 for (r, z) = ({r}, {z})")
    return (r * z / s.phi) * (_geometric(s.lam1, k - 2) - _geometric(s.lam2, k - 2))


def excess_lb_totally_regular(r: int, z: int, k: int) -> int:
    """ceil(A(r,z,k) / z): excess lower bound for totally regular graphs."""
    if z < 1 or k < 3 or r < 0:
        raise PreconditionFailed(f"need r >= 0, z >= 1, k >= 3; got ({r}, {z}, {k})")
    return _ceil_div(arrow_count(r, z, k), z)


def excess_lb_general(r: int, z: int, k: int) -> int:
    """ceil(A(r,z,k) / (2r+3z)): excess lower bound without any regularity
    assumption."""
    if r < 1 or z < 1 or k < 3:
        raise PreconditionFailed(f"need r, z >= 1, k >= 3; got ({r}, {z}, {k})")
    return _ceil_div(arrow_count(r, z, k), 2 * r + 3 * z)


@dataclass(frozen=True)
class Chain:
    """A maximal chain in the unit-degree (r = z = 1) branch tree: node ids
    of its members, the level its first member sits on, and the minimum
    transversal size ceil(len/3)."""

    start_level: int
    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def transversal(self) -> int:
        return _ceil_div(self.length, 3)


@dataclass(frozen=True)
class ChainDecomposition:
    k: int
    chains: tuple[Chain, ...]
    chain_counts_per_level: tuple[int, ...]  # Z'_t for t = 1..k-2

    @property
    def transversal_total(self) -> int:
        return sum(c.transversal for c in self.chains)


def chain_decomposition(k: int) -> ChainDecomposition:
    """Explicitly build the depth-k undirected branch for r = z = 1 and
    decompose it into maximal chains.

    Tree rules: the branch root (level 1) is edge-entered; an edge-entered
    vertex has one arc child; an arc-entered vertex has one edge child and
    one arc child.  The successor of a chain member v is the edge child of
    v's arc child.  Chains start at the branch root and at every arc-entered
    vertex of level <= k-2.
    """
    if k < 3:
        raise PreconditionFailed(f"need k >= 3, got {k}")
    level = [1]
    entry = ["e"]  # "e" edge-entered, "a" arc-entered
    arc_child: list[int | None] = [None]
    edge_child: list[int | None] = [None]
    frontier = [0]
    for lv in range(2, k + 1):
        nxt = []
        for p in frontier:
            node = len(level)
            level.append(lv)
            entry.append("a")
            arc_child.append(None)
            edge_child.append(None)
            arc_child[p] = node
            nxt.append(node)
            if entry[p] == "a":
                node = len(level)
                level.append(lv)
                entry.append("e")
                arc_child.append(None)
                edge_child.append(None)
                edge_child[p] = node
                nxt.append(node)
        frontier = nxt

    starts = [0] + [
        x for x in range(1, len(level)) if entry[x] == "a" and 2 <= level[x] <= k - 2
    ]
    chains = []
    for s in starts:
        nodes = [s]
        cur = s
        while True:
            a = arc_child[cur]
            if a is None or edge_child[a] is None:
                break
            cur = edge_child[a]
            nodes.append(cur)
        chains.append(Chain(start_level=level[s], nodes=tuple(nodes)))

    counts = [0] * max(k - 2, 0)
    for c in chains:
        counts[c.start_level - 1] += 1
    # every arc-entered vertex of level 2..k-1 must sit between two
    # consecutive members of exactly one chain
    covered = 0
    for c in chains:
        covered += c.length - 1
    arrows = sum(1 for x in range(len(level)) if entry[x] == "a" and 2 <= level[x] <= k - 1)
    if covered != arrows:
        raise AssertionError(f"chain cover mismatch: {covered} links vs {arrows} arrow vertices")
    return ChainDecomposition(k=k, chains=tuple(chains), chain_counts_per_level=tuple(counts))


def defect_lb_unit(k: int) -> int:
    """Defect lower bound for totally regular graphs with r = z = 1:
    sum over t = 1..k-2 of Z'_t * ceil((1 + floor((k-t)/2)) / 3), where
    Z'_1 = 1 and Z'_t is the branch census arrow count for t >= 2."""
    if k < 3:
        raise PreconditionFailed(f"need k >= 3, got {k}")
    zs = arrow_levels(1, 1, max(k, 2))
    total = 0
    for t in range(1, k - 1):
        z_prime = 1 if t == 1 else zs[t - 1]
        total += z_prime * _ceil_div(1 + (k - t) // 2, 3)
    return total


def bosak_admissible(r: int, z: int) -> int | None:
    """The odd c with c^2 = 4r - 3 and c | (4z-3)(4z+5), if any.

    Absence rules out a mixed Moore graph of diameter 2 with these degrees
    (outside the trivial cases, which are the caller's business).
    Divisibility is taken on absolute values.
    """
    if r < 1 or z < 0:
        raise PreconditionFailed(f"need r >= 1, z >= 0; got ({r}, {z})")
    s = 4 * r - 3
    c = math.isqrt(s)
    if c * c != s:
        return None
    return c if abs((4 * z - 3) * (4 * z + 5)) % c == 0 else None


def defect_one_admissible(r: int, z: int) -> tuple[bool, str | None]:
    """Spectral feasibility for totally regular defect-one graphs of
    diameter 2: r must be even, and one of three clauses holds.  Returns
    the satisfied clause."""
    if r < 1 or z < 1:
        raise PreconditionFailed(f"need r, z >= 1; got ({r}, {z})")
    if r % 2 == 1:
        return False, None
    if r == 2:
        return True, "r=2"
    c = math.isqrt(4 * r + 1)
    if c * c == 4 * r + 1 and abs((4 * z + 1) * (4 * z - 7)) % c == 0:
        return True, "c^2=4r+1"
    if 4 * r - 7 >= 0:
        c = math.isqrt(4 * r - 7)
        if c * c == 4 * r - 7 and abs(16 * z * z + 40 * z - 23) % c == 0:
            return True, "c^2=4r-7"
    return False, None


def excess_one_admissible(r: int, z: int) -> bool:
    """Spectral feasibility for totally regular excess-one graphs of
    geodecity 2 (three clauses, applied verbatim)."""
    if r < 1 or z < 1:
        raise PreconditionFailed(f"need r, z >= 1; got ({r}, {z})")
    if r == 2:
        return True
    c = math.isqrt(4 * r + 1)
    if c * c == 4 * r + 1 and abs(16 * z * z - 24 * z + 25) % c == 0:
        return True
    if 4 * r - 7 >= 0:
        c = math.isqrt(4 * r - 7)
        if c * c == 4 * r - 7 and abs(16 * z * z + 40 * z + 9) % c == 0:
            return True
    return False


def excess_one_possible(r: int, z: int, k: int) -> bool:
    """No totally regular excess-one graph exists for k >= 3; for k = 2 the
    question reduces to the spectral clauses."""
    if r < 1 or z < 1 or k < 2:
        raise PreconditionFailed(f"need r, z >= 1, k >= 2; got ({r}, {z}, {k})")
    if k >= 3:
        return False
    return excess_one_admissible(r, z)


TABLE2_R_MAX = 15
TABLE2_Z_MAX = 6


def table2_cells() -> list[list[int]]:
    """Excess lower bounds for totally regular graphs at k = 4, r = 1..15
    (rows), z = 1..6 (columns)."""
    return [
        [excess_lb_totally_regular(r, z, 4) for z in range(1, TABLE2_Z_MAX + 1)]
        for r in range(1, TABLE2_R_MAX + 1)
    ]


def table2_text() -> str:
    cells = table2_cells()
    header = ["r\\z"] + [str(z) for z in range(1, TABLE2_Z_MAX + 1)]
    rows = [header] + [
        [str(r + 1)] + [str(v) for v in row] for r, row in enumerate(cells)
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"


def table2_csv() -> str:
    cells = table2_cells()
    lines = ["r," + ",".join(f"z={z}" for z in range(1, TABLE2_Z_MAX + 1))]
    for r, row in enumerate(cells, start=1):
        lines.append(f"{r}," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
