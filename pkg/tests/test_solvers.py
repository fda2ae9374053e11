import random

import pytest

from calisson.bruteforce import check_tiling, count_feasible
from calisson.constraints import HeightField, build_dc, check_heights
from calisson.grid import X, Y, Z, edge_endpoints, height
from calisson.instances import boundary_cycle, hexagon, make_instance, triangle_region
from calisson.solvers import (
    AXIS_COLOR,
    HeightError,
    extract_tiling,
    generate_instance,
    random_tiling,
    salient_drawn_edges,
    solve_advancing,
    solve_bf,
    solve_thurston,
    solve_thurston_outcome,
)

CENTER = (0, 0, 0)
ODD_RING = [(0, 0, 1), (1, 0, 0), (0, 1, 0)]
EVEN_RING = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]

# the two tilings of the unit hexagon
TILING_A = frozenset({((1, 1, 0), Z), ((0, 1, 1), X), ((1, 0, 1), Y)})
TILING_B = frozenset({(CENTER, Z), (CENTER, X), (CENTER, Y)})

HEIGHTS_A = {CENTER: 0, **{v: 1 for v in ODD_RING}, **{v: 2 for v in EVEN_RING}}
HEIGHTS_B = {CENTER: 0, **{v: -2 for v in ODD_RING}, **{v: -1 for v in EVEN_RING}}


def test_axis_colors():
    assert AXIS_COLOR == {X: "blue", Y: "red", Z: "yellow"}


def test_extract_tiling_unit_hexagon():
    region = hexagon(1)
    assert extract_tiling(region, HeightField(HEIGHTS_A, CENTER)).lozenges == TILING_A
    assert extract_tiling(region, HeightField(HEIGHTS_B, CENTER)).lozenges == TILING_B


def test_extract_tiling_rejects_flat_heights():
    region = hexagon(1)
    flat = HeightField({v: 0 for v in region.vertex_list}, CENTER)
    with pytest.raises(HeightError):
        extract_tiling(region, flat)


def test_solve_bf_unique_tiling():
    out = solve_bf(make_instance(hexagon(1), x2=[(CENTER, Z)]))
    assert out.status == "tiled"
    assert out.tiling.lozenges == TILING_A
    assert out.stats.vertices == 7 and out.stats.arcs == 21


def test_solve_bf_infeasible():
    out = solve_bf(make_instance(hexagon(1), x2=[(CENTER, Z), ((1, 1, 0), Z)]))
    assert out.status == "infeasible"
    assert out.certificate.total_weight < 0
    d = out.to_dict()
    assert d["status"] == "infeasible" and "cycle" in d and "lozenges" not in d


def test_solve_bf_lozenge_count():
    for n in (1, 2, 3):
        out = solve_bf(make_instance(hexagon(n)))
        assert out.status == "tiled"
        assert len(out.tiling.lozenges) == 3 * n * n
        assert not check_tiling(make_instance(hexagon(n)), out.tiling)


def test_outcome_dict_shape():
    d = solve_bf(make_instance(hexagon(1))).to_dict()
    assert d["status"] == "tiled"
    assert len(d["lozenges"]) == 3 and len(d["heights"]) == 7
    assert all(len(row) == 4 for row in d["lozenges"] + d["heights"])
    assert set(d["stats"]) == {"vertices", "arcs", "relaxations", "elapsed"}


def test_thurston_single_triangle_untilable():
    region = triangle_region([((0, 0, 0), "L")])
    assert solve_thurston(region) is None


def test_thurston_unit_hexagon_envelope():
    env = solve_thurston(hexagon(1))
    assert env.hmin[CENTER] == 0 and env.hmax[CENTER] == 3
    for v in ODD_RING + EVEN_RING:
        assert env.hmin[v] == env.hmax[v] == height(v)


def test_thurston_envelope_closed_form():
    # over the side-n hexagon: hmin = x+y+z and hmax = hmin + 3(n - max coord)
    for n in (1, 2):
        env = solve_thurston(hexagon(n))
        for v in hexagon(n).vertex_list:
            assert env.hmin[v] == sum(v)
            assert env.hmax[v] == sum(v) + 3 * (n - max(v))


def test_thurston_outcome_is_minimal_surface():
    out = solve_thurston_outcome(make_instance(hexagon(2)))
    assert out.status == "tiled"
    env = solve_thurston(hexagon(2))
    assert out.heights.values == env.hmin
    assert not check_tiling(make_instance(hexagon(2)), out.tiling)


def test_thurston_outcome_rejects_constraints():
    with pytest.raises(ValueError):
        solve_thurston_outcome(make_instance(hexagon(1), x2=[(CENTER, Z)]))


def test_advancing_no_raise_needed():
    out = solve_advancing(make_instance(hexagon(1), x2=[(CENTER, Z)]))
    assert out.status == "tiled"
    assert out.tiling.lozenges == TILING_A
    assert out.stats.relaxations == 0


def test_advancing_single_raise():
    # forcing an edge into the center lifts the center by one step of 3
    out = solve_advancing(make_instance(hexagon(1), x1=[((1, 1, 0), Z)]))
    assert out.status == "tiled"
    assert out.tiling.lozenges == TILING_B
    assert out.stats.relaxations == 1
    assert out.heights.values == HEIGHTS_B


def test_advancing_infeasible():
    out = solve_advancing(make_instance(hexagon(1), x2=[(CENTER, Z), ((1, 1, 0), Z)]))
    assert out.status == "infeasible"
    assert out.certificate.total_weight < 0


def test_advancing_untilable_region():
    region = triangle_region([((0, 0, 0), "L")])
    out = solve_advancing(make_instance(region))
    assert out.status == "infeasible"
    assert out.certificate.total_weight < 0


def test_random_tiling_zero_flips():
    region = hexagon(2)
    env = solve_thurston(region)
    assert random_tiling(region, 0, seed=5).values == env.hmin


def test_random_tiling_unit_hexagon():
    # the center is the only liftable vertex; extra flips change nothing
    for flips in (1, 2, 9):
        assert random_tiling(hexagon(1), flips, seed=3).values == HEIGHTS_B


def test_random_tiling_is_valid():
    region = hexagon(3)
    inst = make_instance(region)
    graph = build_dc(inst)
    env = solve_thurston(region)
    for seed in range(6):
        field = random_tiling(region, 40, seed=seed)
        assert check_heights(graph, field) is None
        assert not check_tiling(inst, extract_tiling(region, field))
        # boundary heights are pinned, so co-anchor there before comparing
        b0 = min(v for e in region.boundary for v in edge_endpoints(e))
        c = env.hmin[b0] - field.values[b0]
        for v, h in field.values.items():
            assert env.hmin[v] <= h + c <= env.hmax[v]


def test_salient_drawn_edges_unit_hexagon():
    region = hexagon(1)
    # all three drawn spokes separate lozenges of different axes
    assert salient_drawn_edges(region, extract_tiling(region, HeightField(HEIGHTS_A, CENTER))) == [
        (CENTER, X),
        (CENTER, Y),
        (CENTER, Z),
    ]


def test_generate_smallest():
    for seed in range(8):
        inst = generate_instance(1, 1, seed=seed)
        assert not inst.x1 and len(inst.x2) == 1
        (edge,) = inst.x2
        assert CENTER in edge_endpoints(edge)  # every interior edge is a spoke
        assert count_feasible(inst)


def test_generate_requested_count():
    inst = generate_instance(2, 3, seed=1)
    assert len(inst.x2) == 3 and not inst.x1
    assert all(inst.region.interior_edge(e) for e in inst.x2)
    for solve in (solve_bf, solve_advancing):
        out = solve(inst)
        assert out.status == "tiled"
        assert not check_tiling(inst, out.tiling)


def test_generate_caps_at_available(caplog):
    with caplog.at_level("WARNING", logger="calisson.solvers"):
        inst = generate_instance(1, 10, seed=0)
    assert len(inst.x2) == 3
    assert "salient" in caplog.text


def test_solvers_agree_with_oracle():
    rng = random.Random(7)
    for _ in range(30):
        region = hexagon(2)
        x1, x2 = set(), set()
        for e in sorted(region.edges - region.boundary):
            roll = rng.random()
            if roll < 0.1:
                x1.add(e)
            elif roll < 0.25:
                x2.add(e)
        inst = make_instance(region, x1, x2)
        bf = solve_bf(inst)
        adv = solve_advancing(inst)
        assert bf.status == adv.status
        assert (bf.status == "tiled") == bool(count_feasible(inst))
        if bf.status == "tiled":
            assert not check_tiling(inst, bf.tiling)
            assert not check_tiling(inst, adv.tiling)
            graph = build_dc(inst)
            assert check_heights(graph, bf.heights) is None
            assert check_heights(graph, adv.heights) is None
