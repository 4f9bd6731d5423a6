"""Command-line front end.

Exit codes: 0 success (including "validation ran and the graph failed"),
1 domain errors (bad n, odd attach count, ...), 2 unreadable or malformed
input files.  All outputs are deterministic given flags and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import f3, f3_upper, f4, verify_recursion
from .enumerator import RealizationStatus, run_census
from .geometry import Vec2F
from .graph import (
    GraphValidationError,
    PlaneGraph,
    VertexKind,
    graph_from_json,
    graph_to_json,
)
from .hn import build_hn
from .minimality import (
    StructureKind,
    check_minimality,
    classify_structure,
    maximal_cycles,
)
from .graph import check_embedding
from .quad import OddAttachCountError, arrangement_to_graph, build_arrangement
from .relax import RelaxProblem, minimize_length
from .svg import render_svg


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_hn(args) -> int:
    if args.n < 2:
        print(f"error: need n >= 2, got {args.n}", file=sys.stderr)
        return 1
    g = build_hn(args.n)
    if args.svg:
        _emit(render_svg(g), args.out)
    else:
        _emit(graph_to_json(g), args.out)
    return 0


def _cmd_bounds(args) -> int:
    if args.to < 2:
        print("error: need --to >= 2", file=sys.stderr)
        return 1
    rows = []
    if args.degree == 3:
        report = verify_recursion(args.to)
        for r in report.rows:
            rows.append(
                {
                    "n": r.n,
                    "f": r.f3,
                    "upper": f"{r.upper.numerator}/{r.upper.denominator}",
                    "witness_branch": r.witness_branch,
                }
            )
    else:
        for n in range(2, args.to + 1):
            rows.append({"n": n, "f": f4(n), "upper": f4(n), "witness_branch": "-"})
    if args.json:
        _emit(json.dumps(rows, sort_keys=True), args.out)
    else:
        header = "n\tf\tupper\twitness_branch"
        body = "\n".join(
            f"{r['n']}\t{r['f']}\t{r['upper']}\t{r['witness_branch']}" for r in rows
        )
        _emit(header + "\n" + body, args.out)
    return 0


def _cycle_obj(c) -> dict:
    return {
        "vertices": list(c.vertex_ids),
        "ingoing": sorted(c.ingoing),
        "outgoing": sorted(c.outgoing),
        "interior_area": c.interior_area,
        "gauss_bonnet_defect": c.gauss_bonnet_defect(),
    }


def _cmd_validate(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as e:
        print(f"error: cannot read {args.file}: {e}", file=sys.stderr)
        return 2
    try:
        g = graph_from_json(text)
    except GraphValidationError as e:
        _emit(json.dumps({"ok": False, "build_violations": e.violations}, sort_keys=True), args.out)
        return 0
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        print(f"error: malformed graph file: {e}", file=sys.stderr)
        return 2

    emb = check_embedding(g, args.tol)
    minrep = check_minimality(g, args.tol if g.mode == "float" else 1e-8)
    obj = {
        "ok": emb.ok and minrep.ok,
        "mode": g.mode,
        "vertices": g.vertex_count(),
        "embedding": {
            "ok": emb.ok,
            "edge_conflicts": [
                [list(e1), list(e2), kind.value] for e1, e2, kind in emb.edge_conflicts
            ],
            "vertex_on_edge": [[v, list(e)] for v, e in emb.vertex_on_edge],
            "coincident_vertices": [list(p) for p in emb.coincident_vertices],
            "zero_length": [list(e) for e in emb.zero_length],
        },
        "minimality": {
            "ok": minrep.ok,
            "worst_residual": minrep.worst_residual,
            "residuals": {str(k): v for k, v in sorted(minrep.residuals.items())},
            "violations": list(minrep.violations),
        },
    }
    if emb.ok:
        structure = classify_structure(g)
        obj["structure"] = structure.kind.value
        obj["maximal_cycles"] = [_cycle_obj(c) for c in structure.maximal]
    _emit(json.dumps(obj, sort_keys=True), args.out)
    return 0


def _cmd_quad(args) -> int:
    if args.n < 2 or args.n % 2:
        print(
            f"error: a 4-regular balanced network needs an even number of "
            f"attaching points (f4 is 0 for odd n); got {args.n}",
            file=sys.stderr,
        )
        return 1
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("MINIMALNETS_SEED", "0"))
    arr = build_arrangement(args.n // 2, seed)
    g = arrangement_to_graph(arr)
    if args.svg:
        _emit(render_svg(g), args.out)
    else:
        _emit(graph_to_json(g), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    if not 2 <= args.n <= 7:
        print(f"error: census supports 2 <= n <= 7, got {args.n}", file=sys.stderr)
        return 1
    census = run_census(args.n)
    realized = sum(1 for s in census.statuses if s is RealizationStatus.REALIZED_EMBEDDED)
    print(f"n\t{census.n}")
    print(f"topologies\t{len(census.topologies)}")
    print(f"realized_embedded\t{realized}")
    print(f"unresolved\t{len(census.unresolved)}")
    print(f"max_vertices\t{census.max_vertices}")
    print(f"witnesses\t{len(census.witnesses)}")
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    from .enumerator import realize

    for i, t in enumerate(census.witnesses):
        w = realize(t)
        path = outdir / f"witness_n{census.n}_{i}.json"
        path.write_text(graph_to_json(w.graph))
        print(f"witness_file\t{path}")
    return 0


def _cmd_relax(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as e:
        print(f"error: cannot read {args.file}: {e}", file=sys.stderr)
        return 2
    try:
        obj = json.loads(text)
        g = graph_from_json(text)
        pinned = {}
        for v in g.vertices:
            if v.kind is VertexKind.ATTACHING:
                pinned[v.id] = g.euclid(v.id)
        for key, (x, y) in obj.get("pinned", {}).items():
            pinned[int(key)] = Vec2F(float(x), float(y))
        interior = tuple(sorted(g.internal_ids()))
        initial = {v: g.euclid(v) for v in interior}
        problem = RelaxProblem(
            pinned,
            interior,
            tuple(g.edges),
            initial,
            tolerance=args.tol,
            max_iterations=args.max_iter,
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, GraphValidationError) as e:
        print(f"error: malformed relax input: {e}", file=sys.stderr)
        return 2
    res = minimize_length(problem)
    out = {
        "status": res.status.value,
        "total_length": res.total_length,
        "residual": None if math.isnan(res.residual) else res.residual,
        "iterations": res.iterations,
        "merges": sorted(sorted(s) for s in res.merges),
        "interior": {str(v): [p.x, p.y] for v, p in sorted(res.interior.items())},
    }
    _emit(json.dumps(out, sort_keys=True), args.out)
    return 0


def _cmd_gallery(args) -> int:
    if not 2 <= args.nmax <= 30:
        print(f"error: gallery supports 2 <= nmax <= 30, got {args.nmax}", file=sys.stderr)
        return 1
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for n in range(2, args.nmax + 1):
        (outdir / f"h{n}.svg").write_text(render_svg(build_hn(n)))
    print(f"wrote {args.nmax - 1} files to {outdir}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="minimalnets",
        description="Length-critical plane networks: extremal families, bounds, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hn", help="emit the extremal network H_n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true", help="emit canonical JSON (default)")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hn)

    p = sub.add_parser("bounds", help="closed-form bound table")
    p.add_argument("--degree", type=int, choices=(3, 4), default=3)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("validate", help="validate a graph JSON file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("quad", help="extremal 4-regular network on n attaching points")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--svg", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("enumerate", help="brute-force census for small n")
    p.add_argument("n", type=int)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("relax", help="minimize length over interior positions")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-iter", type=int, default=10**5)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_relax)

    p = sub.add_parser("gallery", help="render H_2..H_nmax as SVG files")
    p.add_argument("nmax", type=int)
    p.add_argument("--out-dir", default="gallery")
    p.set_defaults(func=_cmd_gallery)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
