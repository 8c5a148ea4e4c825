"""Generate the bundled fixture MGF files and sanity-check them hard.

Each entry: name -> (n, edges, arcs, r, z, k, kind, value) where kind is
"excess" or "defect" and value is the expected excess/defect.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from geocage.analysis import defect_report, distance_report, excess_report, geodecity_report
from geocage.core import build_graph, parse_mgf, regularity_report, write_mgf

C12 = [(i, (i + 1) % 12) for i in range(12)]

PENT = []
for base in (0, 5, 10, 15, 20, 25):
    PENT += [(base + i, base + (i + 1) % 5) for i in range(5)]

FIXTURES = {
    "fig2_almost_moore": (
        10,
        [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (5, 6), (5, 9), (6, 7), (7, 8), (8, 9)],
        [(1, 5), (5, 4), (4, 9), (9, 2), (2, 8), (8, 0), (0, 7), (7, 3), (3, 6), (6, 1)],
        2, 1, 2, "defect", 1,
    ),
    "fig3_excess_one": (
        12,
        C12,
        [(0, 4), (4, 8), (8, 0), (1, 9), (9, 5), (5, 1), (2, 6), (6, 10), (10, 2),
         (3, 11), (11, 7), (7, 3)],
        2, 1, 2, "excess", 1,
    ),
    "fig_p22": (
        12,
        [],
        [(0, 6), (0, 11), (1, 0), (1, 2), (2, 7), (2, 8), (3, 2), (3, 4), (4, 9), (4, 10),
         (5, 4), (5, 0), (6, 1), (6, 10), (7, 1), (7, 9), (8, 3), (8, 6), (9, 3), (9, 11),
         (10, 5), (10, 8), (11, 5), (11, 7)],
        0, 2, 2, "excess", 5,
    ),
    "fig_d2k2n7_a": (
        9,
        [],
        [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 0), (3, 5), (4, 2), (4, 7),
         (5, 4), (5, 8), (6, 0), (6, 7), (7, 3), (7, 8), (8, 1), (8, 6)],
        0, 2, 2, "excess", 2,
    ),
    "fig_d2k2n7_b": (
        9,
        [],
        [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 0), (3, 5), (4, 7), (4, 8),
         (5, 7), (5, 8), (6, 3), (6, 4), (7, 0), (7, 6), (8, 1), (8, 2)],
        0, 2, 2, "excess", 2,
    ),
    "fig_d2k3n20_a": (
        20,
        [],
        [(0, 1), (0, 2), (7, 0), (12, 0), (1, 3), (1, 4), (17, 1), (2, 5), (2, 6), (17, 2),
         (3, 7), (3, 8), (18, 3), (4, 9), (4, 10), (18, 4), (5, 11), (5, 12), (19, 5),
         (6, 13), (6, 14), (19, 6), (7, 11), (14, 7), (12, 8), (8, 13), (8, 15), (9, 12),
         (13, 9), (9, 16), (11, 10), (10, 14), (10, 17), (11, 16), (13, 17), (14, 15),
         (15, 18), (15, 19), (16, 18), (16, 19)],
        0, 2, 3, "excess", 5,
    ),
    "fig_d2k3n20_b": (
        20,
        [],
        [(0, 10), (0, 11), (12, 0), (13, 0), (1, 10), (1, 11), (16, 1), (17, 1), (10, 2),
         (2, 12), (14, 2), (2, 15), (10, 3), (14, 3), (3, 17), (3, 18), (11, 4), (4, 13),
         (15, 4), (4, 19), (11, 5), (5, 14), (15, 5), (5, 16), (12, 6), (13, 6), (6, 17),
         (6, 18), (7, 12), (7, 15), (18, 7), (19, 7), (8, 13), (16, 8), (17, 8), (8, 19),
         (9, 14), (9, 16), (18, 9), (19, 9)],
        0, 2, 3, "excess", 5,
    ),
    "fig_d3k2n16": (
        16,
        [],
        [(0, 1), (0, 2), (0, 3), (5, 0), (8, 0), (9, 0), (1, 6), (1, 8), (11, 1), (1, 13),
         (15, 1), (2, 7), (2, 9), (12, 2), (2, 14), (15, 2), (3, 10), (3, 11), (3, 12),
         (13, 3), (14, 3), (4, 5), (8, 4), (9, 4), (4, 11), (4, 12), (15, 4), (5, 6),
         (5, 7), (13, 5), (14, 5), (6, 9), (10, 6), (6, 12), (6, 14), (7, 8), (10, 7),
         (7, 11), (7, 13), (8, 10), (12, 8), (9, 10), (11, 9), (10, 15), (11, 14),
         (12, 13), (13, 15), (14, 15)],
        0, 3, 2, "excess", 3,
    ),
    "fig_r1z1k3_a": (
        16,
        [(i, i + 8) for i in range(8)],
        [(0, 1), (8, 10), (1, 4), (9, 11), (2, 3), (10, 5), (3, 0), (11, 6), (4, 7),
         (12, 8), (5, 12), (13, 14), (6, 15), (14, 2), (7, 13), (15, 9)],
        1, 1, 3, "excess", 5,
    ),
    "fig_r1z1k3_b": (
        16,
        [(i, i + 8) for i in range(8)],
        [(0, 1), (8, 10), (1, 4), (9, 11), (2, 12), (10, 3), (3, 15), (11, 5), (4, 7),
         (12, 13), (5, 6), (13, 0), (6, 2), (14, 9), (7, 14), (15, 8)],
        1, 1, 3, "excess", 5,
    ),
    "fig_r1z1k4": (
        30,
        [(0, 5), (1, 10), (2, 15), (3, 20), (4, 25), (6, 17), (7, 13), (8, 27), (9, 23),
         (11, 22), (12, 28), (14, 16), (18, 29), (19, 21), (24, 26)],
        PENT,
        1, 1, 4, "excess", 11,
    ),
    "fig_r2z2k2": (
        21,
        [(0, 1), (0, 3), (1, 4), (2, 5), (2, 20), (3, 15), (4, 19), (5, 14), (6, 12),
         (6, 15), (7, 10), (7, 20), (8, 10), (8, 14), (9, 11), (9, 19), (11, 16),
         (12, 13), (13, 18), (16, 17), (17, 18)],
        [(0, 8), (0, 9), (12, 0), (20, 0), (1, 6), (1, 7), (11, 1), (14, 1), (3, 2),
         (12, 2), (2, 16), (2, 19), (10, 3), (3, 13), (19, 3), (4, 5), (10, 4), (15, 4),
         (4, 16), (11, 5), (5, 13), (5, 15), (6, 14), (6, 17), (20, 6), (7, 11), (15, 7),
         (7, 18), (8, 12), (8, 17), (19, 8), (14, 9), (9, 18), (9, 20), (13, 10),
         (16, 10), (13, 11), (16, 12), (18, 14), (18, 15), (17, 19), (17, 20)],
        2, 2, 2, "excess", 2,
    ),
}


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "src" / "geocage" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    failures = []
    for name, (n, edges, arcs, r, z, k, kind, value) in FIXTURES.items():
        g = build_graph(n, edges, arcs)
        reg = regularity_report(g, r, z)
        checks = {"totally_regular": reg.totally_regular}
        if kind == "excess":
            rep = geodecity_report(g, k)
            checks["k_geodetic"] = rep.is_k_geodetic
            checks["girth_exact"] = rep.girth == k and not geodecity_report(g, k + 1).is_k_geodetic
            if rep.is_k_geodetic:
                checks["excess"] = excess_report(g, r, z, k).excess == value
        else:
            rep = distance_report(g)
            checks["diameter"] = rep.diameter <= k
            if rep.diameter <= k:
                checks["defect"] = defect_report(g, r, z, k).defect == value
        bad = [c for c, ok in checks.items() if not ok]
        if bad:
            failures.append((name, bad))
            print(f"FAIL {name}: {bad}")
            continue
        text = write_mgf(g)
        assert parse_mgf(text) == g
        (out_dir / f"{name}.mgf").write_text(text)
        print(f"ok   {name}: n={n} ({r},{z},{k}) {kind}={value}")
    if failures:
        sys.exit(1)
    print(f"\nwrote {len(FIXTURES)} fixture files to {out_dir}")


if __name__ == "__main__":
    main()
