"""Group tables, the order-catalog, and mixed Cayley graphs."""

from __future__ import annotations

import math
import random
from collections import Counter

import pytest

from geocage.analysis import distance_report
from geocage.core import degree_profile
from geocage.errors import (
    CapExceeded,
    CatalogIncomplete,
    IdentityInS,
    InvalidParam,
    MgfSyntaxError,
    NotAGroup,
    NotBijection,
)
from geocage.groups import (
    CATALOG_MAX_ORDER,
    GroupTable,
    affine,
    alternating,
    catalog,
    cayley_mixed,
    closure_from_generators,
    connection_set,
    connection_sets,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    generates,
    parse_group_table,
    preset,
    semidirect_cyclic,
    symmetric,
    write_group_table,
)

# Number of groups of each order 1..24, a classical census.
GROUPS_PER_ORDER = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                    1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15)


def isomorphism_fingerprint(g: GroupTable):
    """Invariants that happen to separate all groups of order <= 24:
    conjugacy classes tagged with representative orders, plus the
    square-root census (how many x solve x*x = a, per order of a)."""
    seen = [False] * g.order
    classes = []
    for a in range(g.order):
        if seen[a]:
            continue
        cls = {g.table[g.table[x][a]][g.inverse[x]] for x in range(g.order)}
        for y in cls:
            seen[y] = True
        classes.append((len(cls), g.element_order(a)))
    squares = Counter(g.table[x][x] for x in range(g.order))
    census = tuple(sorted((g.element_order(a), squares[a]) for a in range(g.order)))
    return (g.is_abelian(), tuple(sorted(classes)), census)


def test_catalog_counts_match_census():
    for order in range(1, CATALOG_MAX_ORDER + 1):
        assert len(catalog(order)) == GROUPS_PER_ORDER[order - 1], order


def test_catalog_groups_are_pairwise_nonisomorphic():
    for order in range(1, CATALOG_MAX_ORDER + 1):
        fps = [isomorphism_fingerprint(g) for g in catalog(order)]
        assert len(set(fps)) == len(fps), order


def test_catalog_bounds():
    with pytest.raises(CatalogIncomplete):
        catalog(CATALOG_MAX_ORDER + 1)
    with pytest.raises(InvalidParam):
        catalog(0)


def test_axiom_checks_reject_bad_tables():
    with pytest.raises(NotAGroup):
        GroupTable(((0, 0), (1, 1)))  # rows are not permutations
    with pytest.raises(NotAGroup):
        # subtraction mod 3: a Latin square with no two-sided identity
        GroupTable(tuple(tuple((a - b) % 3 for b in range(3)) for a in range(3)))
    with pytest.raises(NotAGroup):
        # a loop (identity + two-sided inverses) that is not associative
        GroupTable((
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        ))
    with pytest.raises(NotAGroup):
        GroupTable(())


def test_basic_group_facts():
    s3 = symmetric(3)
    assert s3.order == 6 and not s3.is_abelian()
    assert len(s3.center_elements()) == 1
    assert len(s3.derived_subgroup_elements()) == 3
    assert s3.element_orders() == (1, 2, 2, 2, 3, 3)

    q8 = dicyclic(8)
    assert q8.element_orders() == (1, 2, 4, 4, 4, 4, 4, 4)
    assert q8.conjugacy_class_sizes() == (1, 1, 2, 2, 2)

    c6 = cyclic(6)
    assert c6.is_abelian() and len(c6.center_elements()) == 6
    assert c6.is_involution(3) and not c6.is_involution(0)
    assert c6.element_order(1) == 6 and c6.element_order(2) == 3


def test_constructor_validation():
    with pytest.raises(InvalidParam):
        affine(4)
    with pytest.raises(InvalidParam):
        dihedral(7)
    with pytest.raises(InvalidParam):
        dicyclic(6)
    with pytest.raises(InvalidParam):
        cyclic(0)
    with pytest.raises(InvalidParam):
        alternating(2)


def test_direct_product_and_semidirect_orders():
    assert direct_product(cyclic(3), symmetric(3)).order == 18
    assert semidirect_cyclic(7, 3, 2).order == 21
    assert affine(5).order == 20
    assert alternating(4).order == 12


def test_group_table_round_trip():
    for gt in (symmetric(3), dicyclic(12), affine(5)):
        parsed = parse_group_table(write_group_table(gt))
        assert parsed.table == gt.table


def test_parse_group_table_errors():
    with pytest.raises(MgfSyntaxError) as exc:
        parse_group_table("grp 2\nn 1\n0\n")
    assert exc.value.lineno == 1
    with pytest.raises(MgfSyntaxError):
        parse_group_table("grp 1\nn 2\n0 1\n")  # missing a row
    with pytest.raises(MgfSyntaxError):
        parse_group_table("grp 1\nn 2\n0 1\n1 0\n0 1\n")  # extra row
    with pytest.raises(MgfSyntaxError):
        parse_group_table("grp 1\nn 2\n0 x\n1 0\n")
    with pytest.raises(MgfSyntaxError):
        parse_group_table("grp 1\nn 2\n0 5\n1 0\n")  # entry out of range
    with pytest.raises(NotAGroup):
        parse_group_table("grp 1\nn 2\n1 0\n1 0\n")


def test_closure_from_generators_builds_s3():
    gt = closure_from_generators([(1, 0, 2), (1, 2, 0)])
    assert gt.order == 6
    assert isomorphism_fingerprint(gt) == isomorphism_fingerprint(symmetric(3))


def test_closure_rejects_bad_generators():
    with pytest.raises(NotBijection):
        closure_from_generators([(0, 0, 1)])
    with pytest.raises(CapExceeded):
        closure_from_generators([tuple(range(1, 10)) + (0,)], cap=5)
    with pytest.raises(InvalidParam):
        closure_from_generators([])


def test_preset_tokens():
    expect = {
        "cyclic:12": 12,
        "dihedral:12": 12,
        "dicyclic:12": 12,
        "sym:3": 6,
        "alt:4": 12,
        "affine:5": 20,
        "semidirect:7:3:2": 21,
        "product:cyclic:3,sym:3": 18,
    }
    for token, order in expect.items():
        assert preset(token).order == order, token


def test_preset_rejects_malformed_tokens():
    for token in ("cyclic", "cyclic:x", "sym:3:4", "product:cyclic:3",
                  "semidirect:7:3", "wat:3"):
        with pytest.raises(InvalidParam):
            preset(token)


def test_connection_set_classification():
    s3 = symmetric(3)
    involutions = [a for a in range(6) if s3.is_involution(a)]
    three_cycles = [a for a in range(6) if s3.element_order(a) == 3]
    cs = connection_set(s3, [involutions[0], three_cycles[0]])
    assert (cs.r, cs.z) == (1, 1)
    both = connection_set(s3, three_cycles)  # a pair of mutual inverses
    assert (both.r, both.z) == (2, 0)


def test_connection_set_validation():
    s3 = symmetric(3)
    with pytest.raises(IdentityInS):
        connection_set(s3, [s3.identity, 1])
    with pytest.raises(InvalidParam):
        connection_set(s3, [1, 1])
    with pytest.raises(InvalidParam):
        connection_set(s3, [99])


def test_connection_sets_pinned_counts():
    assert len(connection_sets(symmetric(3), 1, 1, reduce=False)) == 6
    assert len(connection_sets(symmetric(3), 1, 1, reduce=True)) == 1
    two = connection_sets(cyclic(3), 0, 1)
    assert [cs.elements for cs in two] == [(1,), (2,)]


def test_connection_sets_only_generating():
    c4xc2 = direct_product(cyclic(4), cyclic(2))
    for cs in connection_sets(c4xc2, 0, 1, reduce=False):
        assert generates(c4xc2, cs.elements)
    # no single element generates C4 x C2
    assert connection_sets(c4xc2, 0, 1, reduce=False) == []


def minimal_generating_set(gt: GroupTable) -> list[int]:
    gens: list[int] = []
    for a in range(1, gt.order):
        if generates(gt, gens):
            break
        gens.append(a)
        # drop if redundant
        if generates(gt, gens[:-1]):
            gens.pop()
    return gens


def test_cayley_graphs_are_vertex_transitive():
    # left multiplication is an automorphism of every mixed Cayley graph;
    # checked exhaustively for one generating set per catalog group
    for order in range(2, CATALOG_MAX_ORDER + 1):
        for gt in catalog(order):
            gens = minimal_generating_set(gt)
            g = cayley_mixed(gt, connection_set(gt, gens))
            for a in range(gt.order):
                mapped_edges = {
                    tuple(sorted((gt.table[a][u], gt.table[a][v])))
                    for u, v in g.edges
                }
                mapped_arcs = {(gt.table[a][u], gt.table[a][v]) for u, v in g.arcs}
                assert mapped_edges == set(g.edges), (gt.name, a)
                assert mapped_arcs == set(g.arcs), (gt.name, a)


def test_degree_split_matches_connection_set():
    rng = random.Random(424242)
    all_groups = [gt for order in range(2, 25) for gt in catalog(order)]
    done = 0
    while done < 200:
        gt = rng.choice(all_groups)
        size = rng.randint(1, min(4, gt.order - 1))
        elems = rng.sample(range(1, gt.order), size)
        cs = connection_set(gt, elems)
        g = cayley_mixed(gt, cs)
        prof = degree_profile(g)
        assert set(prof.d) == {cs.r}
        assert set(prof.d_out) == {cs.z}
        assert set(prof.d_in) == {cs.z}
        done += 1


def test_connected_iff_generates():
    rng = random.Random(3434)
    all_groups = [gt for order in range(2, 25) for gt in catalog(order)]
    for _ in range(100):
        gt = rng.choice(all_groups)
        size = rng.randint(1, min(3, gt.order - 1))
        elems = rng.sample(range(1, gt.order), size)
        g = cayley_mixed(gt, connection_set(gt, elems))
        connected = not math.isinf(distance_report(g).diameter)
        assert connected == generates(gt, elems), (gt.name, elems)


def test_conjugate_sets_give_isomorphic_graphs():
    from geocage.search import iso_distinct

    s3 = symmetric(3)
    raw = connection_sets(s3, 1, 1, reduce=False)
    graphs = [cayley_mixed(s3, cs) for cs in raw]
    assert len(iso_distinct(graphs)) == 1
