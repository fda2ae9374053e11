import pytest

from support import macmahon_boxes

from calisson.bruteforce import (
    RegionTooLargeError,
    check_tiling,
    count_feasible,
    enumerate_tilings,
)
from calisson.grid import X, Y, Z, edge_triangles
from calisson.instances import Tiling, hexagon, make_instance


def hex_instance(n, x1=(), x2=()):
    return make_instance(hexagon(n), x1, x2)


TILING_A = Tiling(frozenset({((1, 1, 0), Z), ((0, 1, 1), X), ((1, 0, 1), Y)}))
TILING_B = Tiling(frozenset({((0, 0, 0), Z), ((0, 0, 0), X), ((0, 0, 0), Y)}))


def test_unit_hexagon_has_two_tilings():
    result = enumerate_tilings(hex_instance(1))
    assert result.count == 2
    assert result.exhausted
    assert set(result.tilings) == {TILING_A, TILING_B}


def test_hexagon_two_matches_macmahon():
    assert macmahon_boxes(1, 1, 1) == 2
    assert macmahon_boxes(2, 2, 2) == 20
    result = enumerate_tilings(hex_instance(2))
    assert result.count == 20
    assert result.exhausted
    assert len(set(result.tilings)) == 20


def test_every_enumerated_tiling_validates():
    inst = hex_instance(2)
    for tiling in enumerate_tilings(inst).tilings:
        assert check_tiling(inst, tiling) == []
        assert len(tiling.lozenges) == 12


def test_cap_stops_early():
    result = enumerate_tilings(hex_instance(2), cap=5)
    assert result.count == 5
    assert not result.exhausted
    assert len(result.tilings) == 5


def test_count_feasible_early_exit():
    assert count_feasible(hex_instance(2))


def test_unique_tiling_under_center_saliency_mark():
    result = enumerate_tilings(hex_instance(1, x2=[((0, 0, 0), Z)]))
    assert result.count == 1
    assert result.tilings[0] == TILING_A


def test_two_vertical_marks_kill_all_tilings():
    result = enumerate_tilings(hex_instance(1, x2=[((0, 0, 0), Z), ((1, 1, 0), Z)]))
    assert result.count == 0
    assert result.exhausted
    assert not count_feasible(hex_instance(1, x2=[((0, 0, 0), Z), ((1, 1, 0), Z)]))


def test_x1_mark_blocks_overlap():
    # overlapping the marked edge was the only difference between the two tilings
    result = enumerate_tilings(hex_instance(1, x1=[((0, 0, 0), Z)]))
    assert result.count == 1
    assert result.tilings[0] == TILING_A


def test_enumeration_order_independent():
    for inst in [
        hex_instance(2),
        hex_instance(1, x2=[((0, 0, 0), Z)]),
        hex_instance(2, x2=[((0, 0, 0), Z)]),
        hex_instance(2, x1=[((1, 0, 0), Y)]),
    ]:
        fwd = enumerate_tilings(inst)
        rev = enumerate_tilings(inst, reverse_trials=True)
        assert fwd.count == rev.count
        assert set(fwd.tilings) == set(rev.tilings)


def test_refuses_oversized_region():
    with pytest.raises(RegionTooLargeError):
        enumerate_tilings(hex_instance(6))
    assert enumerate_tilings(hex_instance(6), max_triangles=300, cap=1).count == 1


def test_check_tiling_accepts_both_unit_tilings():
    inst = hex_instance(1)
    assert check_tiling(inst, TILING_A) == []
    assert check_tiling(inst, TILING_B) == []


def test_check_tiling_uncovered():
    broken = Tiling(TILING_A.lozenges - {((1, 1, 0), Z)})
    codes = [v.code for v in check_tiling(hex_instance(1), broken)]
    assert codes.count("uncovered-triangle") == 2


def test_check_tiling_double_cover():
    broken = Tiling((TILING_A.lozenges - {((1, 1, 0), Z)}) | {((0, 0, 0), Z)})
    codes = [v.code for v in check_tiling(hex_instance(1), broken)]
    assert "double-cover" in codes
    assert "uncovered-triangle" in codes


def test_check_tiling_overlap_at_marked_edge():
    inst = hex_instance(1, x2=[((0, 0, 0), Z)])
    codes = [v.code for v in check_tiling(inst, TILING_B)]
    assert "overlap-at-edge" in codes


def test_check_tiling_overlap_at_boundary():
    broken = Tiling(TILING_A.lozenges | {((0, 1, 0), Z)})
    codes = [v.code for v in check_tiling(hex_instance(1), broken)]
    assert "overlap-at-edge" in codes


def test_check_tiling_saliency_violation():
    # hunt a perfect tiling of the 2-hexagon with two same-axis lozenges
    # beside some drawn interior edge, then mark that edge as x2
    inst = hex_instance(2)
    region = inst.region
    for tiling in enumerate_tilings(inst).tilings:
        cover = {}
        for e in tiling.lozenges:
            for t in edge_triangles(e):
                cover[t] = e
        for edge in sorted(region.edges - region.boundary - tiling.lozenges):
            t1, t2 = edge_triangles(edge)
            if cover[t1][1] == cover[t2][1]:
                marked = make_instance(region, x2=[edge])
                codes = [v.code for v in check_tiling(marked, tiling)]
                assert codes == ["saliency-violation"]
                return
    raise AssertionError("no same-orientation pair found in any tiling")
