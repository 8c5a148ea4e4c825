"""Parametric families, bundled fixtures, and surgery operations."""

from __future__ import annotations

import math

import pytest

from geocage.analysis import (
    defect_report,
    distance_report,
    excess_report,
    geodecity_report,
)
from geocage.bounds import moore_mixed
from geocage.core import build_graph, degree_profile, regularity_report
from geocage.errors import (
    FixtureSelfCheckFailed,
    PreconditionFailed,
    TooLarge,
    UnknownFixture,
)
from geocage.families import (
    FIXTURE_CATALOG,
    FixtureInfo,
    cycle,
    drop_arc_per_vertex,
    fixture,
    fixture_names,
    kautz_mixed,
    permutation_digraph,
    reduce_k,
    truncate_compose,
)
import geocage.families as families
from geocage.search import iso_distinct


def perm_order(d: int, k: int) -> int:
    return math.factorial(d + k) // math.factorial(d)


def test_permutation_digraph_small_parameters():
    for d, k in [(2, 2), (2, 3), (3, 2)]:
        g = permutation_digraph(d, k)
        assert g.n == perm_order(d, k)
        assert regularity_report(g, 0, d).totally_regular
        rep = geodecity_report(g, k + 1)
        assert rep.girth == k  # k-geodetic but not (k+1)-geodetic
        assert excess_report(g, 0, d, k).excess == g.n - moore_mixed(0, d, k)


def test_permutation_digraph_matches_bundled_p22():
    assert len(iso_distinct([fixture("fig_p22"), permutation_digraph(2, 2)])) == 1


def test_permutation_digraph_cap():
    with pytest.raises(TooLarge):
        permutation_digraph(4, 4, cap=1000)


def test_permutation_digraph_rejects_bad_parameters():
    with pytest.raises(PreconditionFailed):
        permutation_digraph(0, 2)
    with pytest.raises(PreconditionFailed):
        permutation_digraph(2, 0)


def test_kautz_is_mixed_moore_for_diameter_two():
    for z in range(1, 4):
        g = kautz_mixed(z)
        assert g.n == (z + 1) * (z + 2) == moore_mixed(1, z, 2)
        assert regularity_report(g, 1, z).totally_regular
        assert distance_report(g).diameter == 2
        assert geodecity_report(g, 2).is_k_geodetic
        assert excess_report(g, 1, z, 2).excess == 0
        assert defect_report(g, 1, z, 2).defect == 0


def test_kautz_rejects_bad_parameters():
    with pytest.raises(PreconditionFailed):
        kautz_mixed(0)


def test_cycle_variants():
    assert len(cycle(5, directed=True).arcs) == 5
    assert not cycle(5, directed=True).edges
    assert len(cycle(5, directed=False).edges) == 5
    with pytest.raises(PreconditionFailed):
        cycle(2)


def test_fixture_names_cover_catalog():
    names = fixture_names()
    assert set(names) == set(FIXTURE_CATALOG)
    assert len(names) == 12


def test_every_fixture_passes_its_self_check():
    for name in fixture_names():
        g = fixture(name)
        assert g.n == FIXTURE_CATALOG[name].n


def test_fixture_without_self_check_returns_same_graph():
    for name in ("fig_p22", "fig2_almost_moore"):
        assert fixture(name, self_check=False) == fixture(name)


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("no_such_graph")


def test_tampered_catalog_entry_is_detected(monkeypatch):
    info = FIXTURE_CATALOG["fig_p22"]
    lie = FixtureInfo(
        name=info.name, n=info.n, r=info.r, z=info.z, k=info.k,
        kind=info.kind, value=info.value + 1,
    )
    monkeypatch.setitem(FIXTURE_CATALOG, "fig_p22", lie)
    families._load_and_check.cache_clear()
    try:
        with pytest.raises(FixtureSelfCheckFailed):
            fixture("fig_p22")
    finally:
        families._load_and_check.cache_clear()


def test_reduce_k_on_unit_degree_fixture():
    g = fixture("fig_r1z1k4")  # every undirected degree is 1, so odd
    h = reduce_k(g, 3)
    assert h.n == g.n - 2 == 28
    assert geodecity_report(h, 3).is_k_geodetic


def test_reduce_k_on_undirected_cycle():
    h = reduce_k(cycle(9, directed=False), 3)
    assert h.n == 8
    assert geodecity_report(h, 3).is_k_geodetic


def test_reduce_k_even_and_odd_branches():
    g = fixture("fig_d2k3n20_a")  # r = 0: every undirected degree even
    h = reduce_k(g, 2)
    assert h.n == g.n - 1 == 19
    assert geodecity_report(h, 2).is_k_geodetic

    g2 = fixture("fig_r1z1k3_a")  # undirected degrees all 1
    h2 = reduce_k(g2, 2)
    assert h2.n == g2.n - 2 == 14
    assert geodecity_report(h2, 2).is_k_geodetic


def test_reduce_k_preconditions():
    with pytest.raises(PreconditionFailed):
        reduce_k(cycle(9, directed=False), 1)
    with pytest.raises(PreconditionFailed):
        reduce_k(cycle(4, directed=False), 2)  # not 3-geodetic


def test_truncate_compose_pentagon_times_p52():
    host = permutation_digraph(5, 2)
    g = truncate_compose(cycle(5, directed=False), host, z=1)
    assert g.n == 5 * host.n == 210
    prof = degree_profile(g)
    assert set(prof.d) == {2} and set(prof.d_out) == {1}
    assert geodecity_report(g, 2).is_k_geodetic


def test_truncate_compose_preconditions():
    host = permutation_digraph(5, 2)
    pentagon = cycle(5, directed=False)
    with pytest.raises(PreconditionFailed):
        truncate_compose(cycle(5, directed=True), host, z=1)  # gadget has arcs
    with pytest.raises(PreconditionFailed):
        truncate_compose(cycle(4, directed=False), host, z=1)  # girth 4 < 5
    with pytest.raises(PreconditionFailed):
        truncate_compose(pentagon, cycle(5, directed=False), z=1)  # host has edges
    with pytest.raises(PreconditionFailed):
        truncate_compose(pentagon, permutation_digraph(2, 2), z=1)  # out-degree 2 != 5
    # out-degree 5 everywhere but 0 -> 3 and 0 -> 1 -> 3 are both walks
    circulant = build_graph(
        11, [], [(u, (u + s) % 11) for u in range(11) for s in (1, 2, 3, 4, 5)]
    )
    with pytest.raises(PreconditionFailed):
        truncate_compose(pentagon, circulant, z=1)  # host is not 2-geodetic

    irregular = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], [])
    with pytest.raises(PreconditionFailed):
        truncate_compose(irregular, host, z=1)


def test_drop_arc_per_vertex_preserves_geodecity():
    for g, k in [(permutation_digraph(2, 2), 2), (kautz_mixed(2), 2)]:
        h = drop_arc_per_vertex(g)
        assert h.n == g.n
        assert len(h.arcs) == len(g.arcs) - g.n
        prof = degree_profile(h)
        assert max(prof.d_out) == min(prof.d_out)
        assert geodecity_report(h, k).is_k_geodetic


def test_drop_arc_per_vertex_custom_choice():
    g = permutation_digraph(2, 2)
    h = drop_arc_per_vertex(g, choose=lambda u, heads: heads[-1])
    assert len(h.arcs) == len(g.arcs) - g.n
    assert geodecity_report(h, 2).is_k_geodetic


def test_drop_arc_per_vertex_failure_modes():
    with pytest.raises(PreconditionFailed):
        drop_arc_per_vertex(cycle(5, directed=False))  # no out-arcs anywhere
    g = permutation_digraph(2, 2)
    with pytest.raises(PreconditionFailed):
        drop_arc_per_vertex(g, choose=lambda u, heads: u)  # not an arc head
