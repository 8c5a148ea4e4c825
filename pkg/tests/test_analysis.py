"""Walk engine: exact counts vs. brute-force enumeration, geodecity
verdicts, distance/excess/defect reports."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from geocage.analysis import (
    defect_report,
    distance_report,
    excess_report,
    geodecity_report,
    nb_walk_counts,
    outlier_automorphism_check,
)
from geocage.core import MixedGraph, build_graph
from geocage.errors import CountOverflow, PreconditionFailed
from geocage.families import FIXTURE_CATALOG, cycle, fixture, fixture_names

from oracles import enumerate_nb_walk_counts, random_mixed_graph


def relabel(g: MixedGraph, perm: list[int]) -> MixedGraph:
    return build_graph(
        g.n,
        [(perm[u], perm[v]) for u, v in g.edges],
        [(perm[u], perm[v]) for u, v in g.arcs],
    )


def walk_is_valid(g: MixedGraph, walk: tuple[int, ...]) -> bool:
    """A vertex sequence is a non-backtracking walk when every step uses an
    arc forward or an edge, and no edge is retraced immediately."""
    for i in range(len(walk) - 1):
        a, b = walk[i], walk[i + 1]
        if not (g.has_arc(a, b) or g.has_edge(a, b)):
            return False
        if (
            i > 0
            and g.has_edge(a, b)
            and g.has_edge(walk[i - 1], a)
            and walk[i + 1] == walk[i - 1]
        ):
            return False
    return True


def test_counts_match_enumeration_on_random_graphs():
    rng = random.Random(31415)
    for _ in range(200):
        g = random_mixed_graph(rng, n_max=8)
        k = rng.randint(0, 4)
        mats = nb_walk_counts(g, k)
        oracle = enumerate_nb_walk_counts(g, k)
        assert len(mats) == k + 1
        for ell in range(k + 1):
            assert np.array_equal(mats[ell], oracle[ell]), (g, ell)


def test_counts_match_enumeration_on_fixtures():
    for name in fixture_names():
        info = FIXTURE_CATALOG[name]
        g = fixture(name)
        mats = nb_walk_counts(g, info.k)
        oracle = enumerate_nb_walk_counts(g, info.k)
        for ell in range(info.k + 1):
            assert np.array_equal(mats[ell], oracle[ell]), (name, ell)


def test_w0_is_identity_and_w1_counts_degrees():
    rng = random.Random(7)
    for _ in range(50):
        g = random_mixed_graph(rng, n_max=10)
        w0, w1 = nb_walk_counts(g, 1)
        assert np.array_equal(w0, np.eye(g.n, dtype=np.int64))
        for u in range(g.n):
            out_deg = sum(1 for a, _ in g.arcs if a == u)
            und_deg = sum(1 for e in g.edges if u in e)
            assert w1[u].sum() == out_deg + und_deg


def test_count_overflow_is_raised_not_wrapped():
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)], [])
    with pytest.raises(CountOverflow):
        nb_walk_counts(k5, 45)


def test_geodecity_fixtures_have_exact_girth():
    for name in fixture_names():
        info = FIXTURE_CATALOG[name]
        if info.kind != "excess":
            continue
        g = fixture(name)
        rep = geodecity_report(g, info.k + 1)
        assert rep.girth == info.k, name
        assert not rep.is_k_geodetic
        assert geodecity_report(g, info.k).is_k_geodetic


def test_violation_walks_are_explicit_and_valid():
    c4 = cycle(4, directed=False)
    rep = geodecity_report(c4, 2)
    assert not rep.is_k_geodetic and rep.girth == 1
    assert rep.violation is not None
    u, v, w1, w2 = rep.violation
    assert w1 != w2
    for w in (w1, w2):
        assert w[0] == u and w[-1] == v and len(w) - 1 <= 2
        assert walk_is_valid(c4, w)


def test_closed_walk_violation_is_explicit_and_valid():
    c3 = cycle(3, directed=True)
    rep = geodecity_report(c3, 3)
    assert not rep.is_k_geodetic and rep.girth == 2
    assert rep.closed_walk_violation is not None
    u, w = rep.closed_walk_violation
    assert w[0] == u and w[-1] == u and 1 <= len(w) - 1 <= 3
    assert walk_is_valid(c3, w)


def test_geodecity_rejects_nonpositive_k():
    with pytest.raises(PreconditionFailed):
        geodecity_report(cycle(3), 0)


def test_geodecity_survives_element_removal():
    # removing an edge or arc can only remove walks, never create them
    for name in fixture_names():
        info = FIXTURE_CATALOG[name]
        if info.kind != "excess":
            continue
        g = fixture(name)
        for drop in sorted(g.edges):
            sub = build_graph(g.n, set(g.edges) - {drop}, g.arcs)
            assert geodecity_report(sub, info.k).is_k_geodetic, (name, drop)
        for drop in sorted(g.arcs):
            sub = build_graph(g.n, g.edges, set(g.arcs) - {drop})
            assert geodecity_report(sub, info.k).is_k_geodetic, (name, drop)


def test_reports_are_relabeling_invariant():
    rng = random.Random(99)
    names = ["fig3_excess_one", "fig_d2k2n7_a", "fig_r1z1k3_a", "fig_p22"]
    for name in names:
        info = FIXTURE_CATALOG[name]
        g = fixture(name)
        base_girth = geodecity_report(g, info.k + 1).girth
        base_diam = distance_report(g).diameter
        base_excess = excess_report(g, info.r, info.z, info.k).excess
        for _ in range(25):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert geodecity_report(h, info.k + 1).girth == base_girth
            assert distance_report(h).diameter == base_diam
            assert excess_report(h, info.r, info.z, info.k).excess == base_excess


def test_defect_relabeling_invariance():
    rng = random.Random(100)
    g = fixture("fig2_almost_moore")
    base = defect_report(g, 2, 1, 2).defect
    for _ in range(25):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert defect_report(h, 2, 1, 2).defect == base


def test_outlier_sets_have_size_excess():
    for name in fixture_names():
        info = FIXTURE_CATALOG[name]
        if info.kind != "excess":
            continue
        g = fixture(name)
        rep = excess_report(g, info.r, info.z, info.k)
        assert rep.excess == info.value
        assert rep.moore + rep.excess == g.n
        assert rep.outliers is not None and rep.repeats is None
        for u in range(g.n):
            assert len(rep.outliers[u]) == rep.excess, (name, u)


def test_repeat_multisets_have_total_defect():
    g = fixture("fig2_almost_moore")
    rep = defect_report(g, 2, 1, 2)
    assert rep.defect == 1
    assert rep.repeats is not None and rep.outliers is None
    for u in range(g.n):
        assert sum(rep.repeats[u].values()) == rep.defect


def test_excess_report_requires_geodecity():
    g = fixture("fig2_almost_moore")  # has repeated walks within distance 2
    with pytest.raises(PreconditionFailed):
        excess_report(g, 2, 1, 2)


def test_defect_report_requires_small_diameter():
    for name in ("fig3_excess_one", "fig_d2k2n7_a"):
        info = FIXTURE_CATALOG[name]
        g = fixture(name)
        assert distance_report(g).diameter > info.k  # excess > 0 forces this
        with pytest.raises(PreconditionFailed):
            defect_report(g, info.r, info.z, info.k)


def test_degree_preconditions():
    c5 = cycle(5, directed=False)  # r = 2, z = 0
    with pytest.raises(PreconditionFailed):
        excess_report(c5, 3, 0, 2)  # undirected degree too small
    with pytest.raises(PreconditionFailed):
        defect_report(c5, 1, 0, 5)  # undirected degree too large


def test_outlier_automorphism_check_on_excess_one_fixture():
    g = fixture("fig3_excess_one")
    ok, perm = outlier_automorphism_check(g, 2, 1, 2)
    assert ok
    assert sorted(perm) == list(range(g.n))


def test_outlier_automorphism_check_needs_excess_one():
    g = fixture("fig_d2k2n7_a")  # excess 2
    with pytest.raises(PreconditionFailed):
        outlier_automorphism_check(g, 0, 2, 2)


def test_distances_agree_with_walk_counts():
    rng = random.Random(8)
    for _ in range(100):
        g = random_mixed_graph(rng, n_max=8)
        mats = nb_walk_counts(g, g.n)
        dist = distance_report(g).dist
        for u in range(g.n):
            for v in range(g.n):
                lengths = [ell for ell in range(g.n + 1) if mats[ell][u, v] > 0]
                expect = min(lengths) if lengths else math.inf
                assert dist[u, v] == expect, (g, u, v)


def test_directed_cycle_distances():
    c5 = cycle(5, directed=True)
    rep = distance_report(c5)
    assert rep.diameter == 4
    assert rep.dist[0, 4] == 4 and rep.dist[4, 0] == 1


def test_disconnected_graph_has_infinite_diameter():
    g = build_graph(4, [(0, 1), (2, 3)], [])
    rep = distance_report(g)
    assert math.isinf(rep.diameter)
    assert math.isinf(rep.dist[0, 2])
