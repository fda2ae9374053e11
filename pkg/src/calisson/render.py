"""Deterministic SVG views of instances, tilings, heights, and certificates.

Output is byte-identical for identical inputs: elements are emitted in
sorted order, coordinates at fixed 3-decimal precision, and nothing
depends on wall time or hashing.  The vertical axis is flipped so the
+Z direction points up on screen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constraints import ConstraintGraph, HeightField, NegativeCycleCertificate, build_dc
from .grid import (
    Vertex,
    axis_name,
    edge_endpoints,
    edge_triangles,
    embed,
    triangle_vertices,
)
from .instances import Region, TilingInstance, boundary_cycle, make_instance, triangle_region
from .solvers import SolveOutcome

KNOWN_LAYERS = ("grid", "tiling", "constraints", "dcgraph", "heights", "cycle")

DEFAULT_PALETTE = {
    "fill-X": "blue",
    "fill-Y": "red",
    "fill-Z": "yellow",
    "grid": "#999999",
    "boundary": "black",
    "x1": "green",
    "x2": "orange",
    "cycle": "red",
    "text": "#111111",
    "arc-positive": "#3366cc",
    "arc-boundary-neg": "black",
    "arc-x1-neg": "green",
    "arc-x2-neg": "orange",
    "arc-lateral": "#8b5a2b",
    "arc-distance": "#9933cc",
}


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 40.0
    layers: tuple[str, ...] | None = None  # None: chosen from the outcome
    palette: dict[str, str] | None = None  # overrides merged onto the defaults


def _fmt(x: float) -> str:
    return f"{round(x, 3) + 0.0:.3f}"


def _pt(v: Vertex, scale: float) -> tuple[float, float]:
    ex, ey = embed(v)
    return ex * scale, -ey * scale


def _line(p, q, cls: str, stroke: str, width: float) -> str:
    return (
        f'<line class="{cls}" x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" '
        f'x2="{_fmt(q[0])}" y2="{_fmt(q[1])}" stroke="{stroke}" '
        f'stroke-width="{_fmt(width)}" stroke-linecap="round"/>'
    )


def _grid_group(region: Region, scale: float, pal) -> str:
    parts = ['<g class="grid">']
    for e in region.edge_list:
        u, v = edge_endpoints(e)
        parts.append(_line(_pt(u, scale), _pt(v, scale), "edge", pal["grid"], 1.0))
    outline = " ".join(
        f"{_fmt(_pt(step.frm, scale)[0])},{_fmt(_pt(step.frm, scale)[1])}"
        for step in boundary_cycle(region)
    )
    parts.append(
        f'<polygon class="outline" points="{outline}" fill="none" '
        f'stroke="{pal["boundary"]}" stroke-width="2.000"/>'
    )
    parts.append("</g>")
    return "\n".join(parts)


def _lozenge_points(e, scale: float) -> str:
    u, v = edge_endpoints(e)
    t1, t2 = edge_triangles(e)
    (a,) = set(triangle_vertices(t1)) - {u, v}
    (b,) = set(triangle_vertices(t2)) - {u, v}
    corners = [a, u, b, v]  # the covered edge is a diagonal of the rhombus
    return " ".join(f"{_fmt(_pt(c, scale)[0])},{_fmt(_pt(c, scale)[1])}" for c in corners)


def _tiling_group(tiling, scale: float, pal) -> str:
    parts = ['<g class="tiling">']
    for e in sorted(tiling.lozenges):
        fill = pal[f"fill-{axis_name(e[1])}"]
        parts.append(
            f'<polygon class="lozenge" points="{_lozenge_points(e, scale)}" '
            f'fill="{fill}" stroke="black" stroke-width="1.000"/>'
        )
    parts.append("</g>")
    return "\n".join(parts)


def _constraints_group(instance: TilingInstance, scale: float, pal) -> str:
    parts = ['<g class="constraints">']
    for name, edges in (("x1", instance.x1), ("x2", instance.x2)):
        for e in sorted(edges):
            u, v = edge_endpoints(e)
            parts.append(_line(_pt(u, scale), _pt(v, scale), name, pal[name], 3.5))
    parts.append("</g>")
    return "\n".join(parts)


def _dcgraph_group(graph: ConstraintGraph, scale: float, pal) -> str:
    # arcs are offset a little to their right so opposite pairs stay visible
    parts = ['<g class="dcgraph">']
    for u_i, v_i, _, tag in graph.arcs:
        p = _pt(graph.vertices[u_i], scale)
        q = _pt(graph.vertices[v_i], scale)
        dx, dy = q[0] - p[0], q[1] - p[1]
        norm = (dx * dx + dy * dy) ** 0.5 or 1.0
        ox, oy = -dy / norm * 0.08 * scale, dx / norm * 0.08 * scale
        parts.append(
            _line(
                (p[0] + ox, p[1] + oy),
                (q[0] + ox, q[1] + oy),
                f"arc {tag}",
                pal.get(f"arc-{tag}", "#555555"),
                1.2,
            )
        )
    parts.append("</g>")
    return "\n".join(parts)


def _heights_group(region: Region, heights: HeightField, scale: float, pal) -> str:
    h = heights.values
    base = h[heights.source]  # labels are shifted so the source shows 0
    parts = ['<g class="heights">']
    for e in region.edge_list:
        u, v = edge_endpoints(e)
        drawn = h[v] - h[u] == 1
        cls = "edge drawn" if drawn else "edge overlapped"
        stroke = "#333333" if drawn else "#cccccc"
        parts.append(_line(_pt(u, scale), _pt(v, scale), cls, stroke, 2.5 if drawn else 1.0))
    for v in region.vertex_list:
        x, y = _pt(v, scale)
        parts.append(
            f'<text class="height" x="{_fmt(x)}" y="{_fmt(y)}" fill="{pal["text"]}" '
            f'font-size="{_fmt(scale * 0.3)}" text-anchor="middle" dominant-baseline="central" '
            f'paint-order="stroke" stroke="white" stroke-width="{_fmt(scale * 0.08)}">'
            f"{h[v] - base}</text>"
        )
    parts.append("</g>")
    return "\n".join(parts)


def _cycle_group(cert: NegativeCycleCertificate, scale: float, pal) -> str:
    cycle = cert.vertices + cert.vertices[:1]
    points = " ".join(
        f"{_fmt(_pt(v, scale)[0])},{_fmt(_pt(v, scale)[1])}" for v in cycle
    )
    return (
        '<g class="cycle">'
        f'<polyline points="{points}" fill="none" stroke="{pal["cycle"]}" '
        'stroke-width="4.000" stroke-linejoin="round"/>'
        "</g>"
    )


def _document(region: Region, groups: list[str], scale: float) -> str:
    pts = [_pt(v, scale) for v in region.vertex_list]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y0 = min(xs) - scale, min(ys) - scale
    w = max(xs) - min(xs) + 2 * scale
    h = max(ys) - min(ys) + 2 * scale
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w)}" height="{_fmt(h)}">'
    )
    return "\n".join([head, *groups, "</svg>"]) + "\n"


def window_view(instance: TilingInstance, outcome: SolveOutcome) -> TilingInstance:
    """Bounded instance covering exactly the window a tiling was cut from."""
    region = triangle_region(
        t for e in outcome.tiling.lozenges for t in edge_triangles(e)
    )
    return make_instance(
        region,
        x1=[e for e in instance.x1 if region.interior_edge(e)],
        x2=[e for e in instance.x2 if region.interior_edge(e)],
    )


def render(
    instance: TilingInstance,
    outcome: SolveOutcome | None = None,
    options: RenderOptions | None = None,
) -> str:
    """One SVG document of the selected layers, back to front."""
    region = instance.region
    if not region.bounded:
        raise ValueError("rendering needs a bounded region")
    opts = options or RenderOptions()
    pal = {**DEFAULT_PALETTE, **(opts.palette or {})}
    layers = opts.layers
    if layers is None:
        if outcome is None:
            layers = ("grid", "constraints")
        elif outcome.status == "tiled":
            layers = ("grid", "constraints", "tiling")
        else:
            layers = ("grid", "constraints", "cycle")
    for layer in layers:
        if layer not in KNOWN_LAYERS:
            raise ValueError(f"unknown layer: {layer}")
    groups = []
    for layer in KNOWN_LAYERS:  # fixed paint order regardless of request order
        if layer not in layers:
            continue
        if layer == "grid":
            groups.append(_grid_group(region, opts.scale, pal))
        elif layer == "tiling" and outcome is not None and outcome.tiling is not None:
            groups.append(_tiling_group(outcome.tiling, opts.scale, pal))
        elif layer == "constraints":
            groups.append(_constraints_group(instance, opts.scale, pal))
        elif layer == "dcgraph":
            groups.append(_dcgraph_group(build_dc(instance), opts.scale, pal))
        elif layer == "heights" and outcome is not None and outcome.heights is not None:
            groups.append(_heights_group(region, outcome.heights, opts.scale, pal))
        elif layer == "cycle" and outcome is not None and outcome.certificate is not None:
            groups.append(_cycle_group(outcome.certificate, opts.scale, pal))
    return _document(region, groups, opts.scale)


def render_heights(
    heights: HeightField,
    region: Region,
    options: RenderOptions | None = None,
) -> str:
    """The numbers-on-vertices view: labels plus emphasized drawn edges."""
    if not region.bounded:
        raise ValueError("rendering needs a bounded region")
    opts = options or RenderOptions()
    pal = {**DEFAULT_PALETTE, **(opts.palette or {})}
    return _document(region, [_heights_group(region, heights, opts.scale, pal)], opts.scale)
