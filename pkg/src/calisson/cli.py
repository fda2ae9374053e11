"""Command-line front end: solve, check, count, render, gen, bench.

Data goes to stdout (or -o); diagnostics go to stderr.  Exit codes:
0 solved/valid, 1 infeasible/invalid tiling, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from .bruteforce import check_tiling, enumerate_tilings
from .constraints import HeightField
from .infinite import ORIGIN, solve_infinite
from .instances import (
    InstanceFormatError,
    Tiling,
    TilingInstance,
    edge_from_json,
    parse_instance,
    parse_tiling,
    serialize_instance,
    validate,
)
from .render import RenderOptions, render, window_view
from .solvers import (
    generate_instance,
    solve_advancing,
    solve_bf,
    solve_thurston_outcome,
)

BOUNDED_ALGOS = {"bf": solve_bf, "advancing": solve_advancing}


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _diag(message: str) -> None:
    print(f"calisson: {message}", file=sys.stderr)


def _load_instance(path: str) -> TilingInstance:
    instance = parse_instance(_read(path))
    problems = validate(instance)
    if problems:
        raise InstanceFormatError("; ".join(v.message for v in problems))
    return instance


def _window_arg(text: str) -> tuple[tuple[int, int, int], int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected X,Y,Z,R")
    try:
        x, y, z, r = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("window components must be integers") from None
    if r < 0:
        raise argparse.ArgumentTypeError("window radius must be nonnegative")
    return (x, y, z), r


def _layers_arg(text: str) -> tuple[str, ...]:
    return tuple(part for part in text.split(",") if part)


def _cmd_solve(args) -> int:
    instance = _load_instance(args.instance)
    if args.algo == "infinite":
        if instance.region.bounded:
            _diag("--algo infinite needs a region of type infinite")
            return 2
        if args.svg and args.window is None:
            _diag("--svg with --algo infinite needs --window")
            return 2
        center, radius = args.window if args.window else (ORIGIN, None)
        outcome = solve_infinite(instance, center=center, radius=radius)
    else:
        if not instance.region.bounded:
            _diag(f"--algo {args.algo} needs a bounded region")
            return 2
        if args.algo == "thurston":
            if instance.x1 or instance.x2:
                _diag("--algo thurston handles only unconstrained instances")
                return 2
            outcome = solve_thurston_outcome(instance)
        else:
            outcome = BOUNDED_ALGOS[args.algo](instance)
    _emit(args.output, json.dumps(outcome.to_dict(), indent=2) + "\n")
    if args.svg:
        if not instance.region.bounded:
            if outcome.tiling is None:
                _diag("no window tiling to render")
            else:
                _emit(args.svg, render(window_view(instance, outcome), outcome))
        else:
            _emit(args.svg, render(instance, outcome))
    return 0 if outcome.status == "tiled" else 1


def _cmd_check(args) -> int:
    instance = _load_instance(args.instance)
    tiling = parse_tiling(_read(args.tiling))
    problems = check_tiling(instance, tiling)
    report = {"valid": not problems, "violations": [v.to_dict() for v in problems]}
    _emit(args.output, json.dumps(report, indent=2) + "\n")
    return 0 if not problems else 1


def _cmd_count(args) -> int:
    instance = _load_instance(args.instance)
    if not instance.region.bounded:
        _diag("count needs a bounded region")
        return 2
    result = enumerate_tilings(instance, cap=args.cap)
    _emit(
        args.output,
        json.dumps({"count": result.count, "exhausted": result.exhausted}) + "\n",
    )
    return 0 if result.count else 1


@dataclass(frozen=True)
class _LoadedCycle:
    vertices: list


@dataclass(frozen=True)
class _LoadedOutcome:
    status: str
    tiling: Tiling | None
    heights: HeightField | None
    certificate: _LoadedCycle | None


def _outcome_from_json(text: str) -> _LoadedOutcome:
    """Rebuild just enough of a solve result to feed the renderer."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "status" not in obj:
        raise InstanceFormatError("solution file must be a solve-outcome object")
    tiling = None
    if "lozenges" in obj:
        tiling = Tiling(frozenset(edge_from_json(item) for item in obj["lozenges"]))
    heights = None
    if "heights" in obj:
        values = {(x, y, z): h for x, y, z, h in obj["heights"]}
        heights = HeightField(values, min(values))
    cycle = None
    if "cycle" in obj:
        cycle = _LoadedCycle([(x, y, z) for x, y, z in obj["cycle"]])
    return _LoadedOutcome(obj["status"], tiling, heights, cycle)


def _cmd_render(args) -> int:
    instance = _load_instance(args.instance)
    outcome = _outcome_from_json(_read(args.solution)) if args.solution else None
    options = RenderOptions(scale=args.scale, layers=args.layers)
    _emit(args.output, render(instance, outcome, options))
    return 0


def _cmd_gen(args) -> int:
    if args.size < 1 or args.clues < 0:
        _diag("gen needs SIZE >= 1 and CLUES >= 0")
        return 2
    instance = generate_instance(args.size, args.clues, seed=args.seed)
    _emit(args.output, serialize_instance(instance))
    return 0


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
        algos = args.algos.split(",")
    except ValueError:
        _diag("bench sizes must be integers")
        return 2
    bad = [a for a in algos if a not in BOUNDED_ALGOS]
    if bad:
        _diag(f"bench supports algos {sorted(BOUNDED_ALGOS)}, not {bad[0]}")
        return 2
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["algo", "size", "seed", "status", "millis", "relaxations"])
    for algo in algos:
        for size in sizes:
            for seed in range(args.seeds):
                instance = generate_instance(size, 3 * size, seed=seed)
                began = time.perf_counter()
                outcome = BOUNDED_ALGOS[algo](instance)
                millis = (time.perf_counter() - began) * 1000.0
                writer.writerow(
                    [algo, size, seed, outcome.status, f"{millis:.3f}",
                     outcome.stats.relaxations]
                )
                _diag(f"{algo} n={size} seed={seed}: {outcome.status} in {millis:.1f} ms")
    _emit(args.csv, buf.getvalue())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calisson",
        description="Solve, check, count, render, and generate lozenge-tiling puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve an instance, print the outcome as JSON")
    sp.add_argument("-i", "--instance", required=True, help="instance JSON file")
    sp.add_argument(
        "--algo",
        choices=("bf", "advancing", "thurston", "infinite"),
        default="advancing",
    )
    sp.add_argument(
        "--window",
        type=_window_arg,
        metavar="X,Y,Z,R",
        help="with --algo infinite: extract a tiling of the radius-R window at (X,Y,Z)",
    )
    sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
    sp.add_argument("--svg", help="also write an SVG view to this file")
    sp.set_defaults(func=_cmd_solve)

    cp = sub.add_parser("check", help="validate a tiling file against an instance")
    cp.add_argument("-i", "--instance", required=True)
    cp.add_argument("-t", "--tiling", required=True, help="tiling JSON file")
    cp.add_argument("-o", "--output")
    cp.set_defaults(func=_cmd_check)

    np_ = sub.add_parser("count", help="count tilings by exhaustive search")
    np_.add_argument("-i", "--instance", required=True)
    np_.add_argument("--cap", type=int, help="stop after this many tilings")
    np_.add_argument("-o", "--output")
    np_.set_defaults(func=_cmd_count)

    rp = sub.add_parser("render", help="draw an instance (and optional solution) as SVG")
    rp.add_argument("-i", "--instance", required=True)
    rp.add_argument("-s", "--solution", help="solve-outcome JSON to overlay")
    rp.add_argument(
        "--layers",
        type=_layers_arg,
        help="comma-separated subset of grid,tiling,constraints,dcgraph,heights,cycle",
    )
    rp.add_argument("--scale", type=float, default=40.0)
    rp.add_argument("-o", "--output")
    rp.set_defaults(func=_cmd_render)

    gp = sub.add_parser("gen", help="generate a solvable instance")
    gp.add_argument("-n", "--size", type=int, required=True, help="hexagon side length")
    gp.add_argument("-k", "--clues", type=int, required=True, help="number of x2 edges")
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=_cmd_gen)

    bp = sub.add_parser("bench", help="time solvers on generated instances")
    bp.add_argument("--sizes", default="10,20,40,80")
    bp.add_argument("--algos", default="bf,advancing")
    bp.add_argument("--seeds", type=int, default=5, help="seeds 0..N-1 per cell")
    bp.add_argument("--csv", help="write the CSV here instead of stdout")
    bp.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:  # malformed input, bad flags, missing files
        _diag(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
