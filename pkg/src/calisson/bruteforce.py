"""Exhaustive enumeration and independent tiling validation.

Everything here works directly on triangles and lozenges, with no height
functions or constraint graphs involved, so it can serve as ground truth
for the solvers.  Enumeration is desk-scale only and refuses regions
above a configurable triangle limit.
"""

from dataclasses import dataclass

from .grid import Edge, Triangle, edge_triangles, triangle_edges
from .instances import Region, Tiling, TilingInstance, Violation

DEFAULT_TRIANGLE_LIMIT = 200


class RegionTooLargeError(ValueError):
    """Raised when enumeration is asked for more triangles than the limit."""


@dataclass(frozen=True)
class EnumerationResult:
    count: int
    tilings: tuple[Tiling, ...]
    exhausted: bool


def _lozenge_choices(region: Region, t: Triangle, blocked: frozenset[Edge]):
    """Edges of t that a lozenge covering t may overlap, with the partner triangle."""
    out = []
    for e in triangle_edges(t):
        if e in blocked or not region.interior_edge(e):
            continue
        a, b = edge_triangles(e)
        out.append((e, b if a == t else a))
    return out


def enumerate_tilings(
    instance: TilingInstance,
    cap: int | None = None,
    max_triangles: int = DEFAULT_TRIANGLE_LIMIT,
    reverse_trials: bool = False,
) -> EnumerationResult:
    """Count (and collect) every tiling of a bounded instance by backtracking.

    Stops early once ``cap`` tilings have been found, reporting
    exhausted=False.  ``reverse_trials`` flips the lozenge trial order at
    every branch; the count must not depend on it.
    """
    region = instance.region
    triangles = sorted(region.triangles)
    if len(triangles) > max_triangles:
        raise RegionTooLargeError(
            f"{len(triangles)} triangles exceeds the enumeration limit of {max_triangles}"
        )
    blocked = frozenset(region.boundary | instance.x1 | instance.x2)
    choices = {t: _lozenge_choices(region, t, blocked) for t in triangles}
    x2_edges = sorted(instance.x2)

    cover: dict[Triangle, Edge] = {}
    uncovered = set(triangles)
    found: list[Tiling] = []
    count = 0
    exhausted = True

    def salient_ok(edge: Edge) -> bool:
        # both flanking lozenges placed -> they must overlap different axes
        t1, t2 = edge_triangles(edge)
        e1 = cover.get(t1)
        e2 = cover.get(t2)
        if e1 is None or e2 is None:
            return True
        return e1[1] != e2[1]

    def place(t: Triangle, e: Edge, partner: Triangle) -> bool:
        cover[t] = e
        cover[partner] = e
        uncovered.discard(t)
        uncovered.discard(partner)
        return all(salient_ok(x2e) for x2e in x2_edges)

    def unplace(t: Triangle, partner: Triangle):
        del cover[t]
        del cover[partner]
        uncovered.add(t)
        uncovered.add(partner)

    def search() -> bool:
        """Returns False when the cap cut the search short."""
        nonlocal count
        if not uncovered:
            count += 1
            if cap is None or len(found) < cap:
                found.append(Tiling(frozenset(set(cover.values()))))
            return cap is None or count < cap
        t = min(uncovered)
        trials = choices[t]
        if reverse_trials:
            trials = list(reversed(trials))
        for e, partner in trials:
            if partner in cover:
                continue
            ok = place(t, e, partner)
            keep_going = search() if ok else True
            unplace(t, partner)
            if not keep_going:
                return False
        return True

    exhausted = search()
    return EnumerationResult(count, tuple(found), exhausted)


def count_feasible(instance: TilingInstance, max_triangles: int = DEFAULT_TRIANGLE_LIMIT) -> bool:
    """True when at least one tiling exists (early exit at the first one)."""
    return enumerate_tilings(instance, cap=1, max_triangles=max_triangles).count > 0


def check_tiling(instance: TilingInstance, tiling: Tiling) -> list[Violation]:
    """Validate a tiling against an instance without using heights.

    Checks exact cover of the region's triangles, non-overlap of boundary
    and constraint edges, and orientation contrast at every x2 edge.
    """
    region = instance.region
    out: list[Violation] = []
    cover: dict[Triangle, Edge] = {}
    blocked = instance.x1 | instance.x2

    for e in sorted(tiling.lozenges):
        if region.bounded and not region.contains_edge(e):
            out.append(Violation("edge-not-in-region", "lozenge edge outside the region", e))
            continue
        if (region.bounded and e in region.boundary) or e in blocked:
            out.append(Violation("overlap-at-edge", "lozenge overlaps a protected edge", e))
            continue
        for t in edge_triangles(e):
            if t in cover:
                out.append(Violation("double-cover", f"triangle {t} covered twice", e))
            else:
                cover[t] = e

    if region.bounded:
        for t in sorted(region.triangles):
            if t not in cover:
                out.append(Violation("uncovered-triangle", f"triangle {t} is not covered"))

    for e in sorted(instance.x2):
        t1, t2 = edge_triangles(e)
        e1 = cover.get(t1)
        e2 = cover.get(t2)
        if e1 is not None and e2 is not None and e1[1] == e2[1]:
            out.append(Violation("saliency-violation", "equal lozenge orientations beside an x2 edge", e))
    return out
