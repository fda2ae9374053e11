import random

import pytest

from calisson.bruteforce import check_tiling
from calisson.constraints import DISTANCE, LATERAL, X1_NEG, X2_NEG
from calisson.grid import X, Y, Z, canon, height, neighbors
from calisson.infinite import (
    ORIGIN,
    build_reduced_graph,
    decide_infinite,
    directed_distance,
    solve_infinite,
    window_tiling,
    window_triangles,
    window_vertices,
)
from calisson.instances import infinite_region, make_instance, triangle_region, validate

VERTICAL = (ORIGIN, Z)
# the three edges around the right triangle at the origin
TRIANGLE_EDGES = [(ORIGIN, Z), ((0, 0, 1), Y), ((0, 1, 1), X)]


def bfs_positive_steps(u, v, radius=20):
    # oracle: breadth-first search along positive edge orientations
    seen = {u: 0}
    frontier = [u]
    while frontier and v not in seen:
        nxt = []
        for a in frontier:
            for b, (axis, sign) in neighbors(a):
                if sign == 1 and b not in seen:
                    seen[b] = seen[a] + 1
                    nxt.append(b)
        frontier = nxt
        if frontier and seen[frontier[0]] > radius:
            break
    return seen.get(v)


def test_directed_distance_examples():
    assert directed_distance(ORIGIN, (0, 0, 1)) == 1
    assert directed_distance(ORIGIN, ORIGIN) == 0
    assert directed_distance(ORIGIN, canon(-1, 0, 0)) == 2
    assert directed_distance((0, 0, 1), ORIGIN) == 2


def test_directed_distance_representative_invariant():
    assert directed_distance((1, 1, 1), (1, 1, 2)) == 1
    assert directed_distance((5, 5, 5), (0, 0, 1)) == directed_distance(ORIGIN, (0, 0, 1))


def test_directed_distance_matches_bfs():
    rng = random.Random(4)
    ball = sorted(window_vertices(ORIGIN, 4))
    for _ in range(60):
        u, v = rng.choice(ball), rng.choice(ball)
        assert directed_distance(u, v) == bfs_positive_steps(u, v)


def test_directed_distance_triangle_inequality_and_congruence():
    rng = random.Random(5)
    ball = sorted(window_vertices(ORIGIN, 5))
    for _ in range(100):
        u, v, w = (rng.choice(ball) for _ in range(3))
        assert directed_distance(u, w) <= directed_distance(u, v) + directed_distance(v, w)
        assert (directed_distance(u, v) - (height(v) - height(u))) % 3 == 0
        assert directed_distance(u, v) >= 0


def test_reduced_graph_single_x1():
    g = build_reduced_graph(x1=[VERTICAL])
    assert len(g.vertices) == 2
    assert g.arc_count(X1_NEG) == 1
    assert g.arc_count(DISTANCE) == 2
    assert g.arc_count() == 3


def test_reduced_graph_single_x2():
    g = build_reduced_graph(x2=[VERTICAL])
    assert len(g.vertices) == 4
    assert g.arc_count(X2_NEG) == 1
    assert g.arc_count(LATERAL) == 2
    assert g.arc_count(DISTANCE) == 12


def test_reduced_graph_triangle_cycle():
    g = build_reduced_graph(x1=TRIANGLE_EDGES)
    i = g.index
    neg = {(u, v) for u, v, w, tag in g.arcs if tag == X1_NEG}
    assert neg == {
        (i[(0, 0, 1)], i[ORIGIN]),
        (i[(0, 1, 1)], i[(0, 0, 1)]),
        (i[ORIGIN], i[(0, 1, 1)]),
    }


def test_decide_empty_is_feasible():
    run = decide_infinite()
    assert run.feasible
    assert run.heights.values == {ORIGIN: 0}


def test_decide_triangle_infeasible():
    run = decide_infinite(x1=TRIANGLE_EDGES)
    assert not run.feasible
    cert = run.certificate
    assert cert.total_weight <= -3
    assert cert.total_weight == sum(w for _, _, w, _ in cert.arcs)


def test_decide_single_x2_heights():
    run = decide_infinite(x2=[VERTICAL])
    assert run.feasible
    assert run.heights.values == {
        ORIGIN: 0,
        (0, 0, 1): 1,
        (0, 1, 1): 2,
        (1, 0, 1): 2,
    }


def test_decide_stacked_pair_feasible():
    assert decide_infinite(x2=[VERTICAL, ((0, 0, 1), Z)]).feasible


def test_feasibility_monotone_under_superset():
    rng = random.Random(9)
    ball = sorted(window_vertices(ORIGIN, 2))
    for _ in range(20):
        edges = [(v, axis) for v in ball for axis in (X, Y, Z)]
        chosen = rng.sample(edges, 6)
        small = chosen[:3]
        feas_small = decide_infinite(x2=small).feasible
        feas_big = decide_infinite(x2=chosen).feasible
        if not feas_small:
            assert not feas_big


def test_window_region_is_valid():
    region = triangle_region(window_triangles(ORIGIN, 3))
    assert validate(make_instance(region)) == []


def test_window_tiling_empty_constraints():
    wt = window_tiling(window=window_triangles(ORIGIN, 4))
    inst = make_instance(wt.region)
    assert check_tiling(inst, wt.tiling) == []
    # minimal staircase: heights are distances from the origin
    assert all(h == directed_distance(ORIGIN, v) for v, h in wt.heights.values.items())


def test_window_tiling_single_x2():
    wt = window_tiling(x2=[VERTICAL], window=window_triangles(ORIGIN, 4))
    assert wt.region.contains_edge(VERTICAL)
    inst = make_instance(wt.region, x2=[VERTICAL])
    assert check_tiling(inst, wt.tiling) == []
    # extension agrees with the reduced heights inside the window
    run = decide_infinite(x2=[VERTICAL])
    for v, h in run.heights.values.items():
        assert wt.heights[v] == h


def test_window_tiling_infeasible_raises():
    with pytest.raises(ValueError):
        window_tiling(x1=TRIANGLE_EDGES, window=window_triangles(ORIGIN, 3))


def test_solve_infinite_outcomes():
    region = infinite_region()
    out = solve_infinite(make_instance(region, x2=[VERTICAL]))
    assert out.status == "tiled" and out.tiling is None
    assert out.stats.vertices == 4 and out.stats.arcs == 15

    out = solve_infinite(make_instance(region, x2=[VERTICAL]), radius=4)
    assert out.status == "tiled"
    assert out.tiling is not None
    d = out.to_dict()
    assert "lozenges" in d and "heights" in d

    out = solve_infinite(make_instance(region, x1=TRIANGLE_EDGES))
    assert out.status == "infeasible"
    assert out.certificate.total_weight <= -3


def test_solve_infinite_rejects_bounded():
    from calisson.instances import hexagon

    with pytest.raises(ValueError):
        solve_infinite(make_instance(hexagon(1)))
