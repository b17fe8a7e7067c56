"""Smoke test for the hullscan Python extension.

Build and install first:

    pip install --no-build-isolation -e crates/py
    python python/smoke_test.py
"""

import os
import sys
import tempfile

import hullscan


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    square = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5), (0.25, 0.75)]
    hull = hullscan.convex_hull(square)
    check(hull == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)], "unit square hull, ccw from lowest")

    check(hullscan.orient((0, 0), (1, 0), (0, 1)) == 1, "orient left")
    check(hullscan.orient((0, 0), (1, 0), (0, -1)) == -1, "orient right")
    check(hullscan.orient((0, 0), (1, 1), (2, 2)) == 0, "orient collinear")

    pts = hullscan.gen_disk(100_000, 7)
    check(pts == hullscan.generate("disk", 100_000, 7), "generators are deterministic")
    hull, stats = hullscan.full_pipeline(pts)
    check(sorted(hull) == sorted(hullscan.monotone_chain(pts)), "pipeline matches monotone chain")
    check(stats.n_input == 100_000 and stats.hull_size == len(hull), "stage counts")
    check(stats.remaining_r2_pct <= stats.remaining_r1_pct <= 100.0, "remaining percentages ordered")
    check(stats.t_total >= 0.0, "timings present")

    for cfg in [
        hullscan.PipelineConfig(chunk_count=7),
        hullscan.PipelineConfig(chunked=False),
        hullscan.PipelineConfig(enable_round1=False, enable_round2=False),
    ]:
        check(hullscan.convex_hull(pts, cfg) == hull, f"config invariance {cfg!r}")

    circle = hullscan.gen_circle(1000, 1)
    _, stats = hullscan.full_pipeline(circle)
    check(stats.remaining_r2_pct == 100.0 and stats.hull_size == 1000, "points on a circle are all kept")

    small = hullscan.gen_square(20, 3)
    check(hullscan.brute_force_hull(small) == hullscan.monotone_chain(small), "brute force agrees")

    with tempfile.TemporaryDirectory() as d:
        xy = os.path.join(d, "pts.xy")
        with open(xy, "w") as f:
            f.write("# comment\n0 0\n1 2.5\n\n")
        check(hullscan.load_points(xy) == [(0.0, 0.0), (1.0, 2.5)], "load_points")
        obj = os.path.join(d, "mesh.obj")
        with open(obj, "w") as f:
            f.write("v 0 0 1\nv 2 0 3\nvn 0 0 1\nv 0 2 5\nf 1 2 3\n")
        check(hullscan.load_obj_projected(obj) == [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)], "load_obj_projected")
        try:
            hullscan.load_points(os.path.join(d, "missing.xy"))
            check(False, "missing file raises OSError")
        except OSError:
            check(True, "missing file raises OSError")

    for bad, label in [([], "empty input"), ([(0.0, float("nan"))], "non-finite input")]:
        try:
            hullscan.convex_hull(bad)
            check(False, f"{label} raises HullscanError")
        except hullscan.HullscanError:
            check(True, f"{label} raises HullscanError")
    try:
        hullscan.PipelineConfig(chunk_count=0)
        check(False, "zero chunks rejected")
    except ValueError:
        check(True, "zero chunks rejected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
