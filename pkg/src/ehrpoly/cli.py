"""Command-line front end.

Subcommands:

    analyze    polygon JSON -> quasi-polynomial, periods, PIP/Pick/Scott status
    construct  emit a named family (pip-b1, pip-b2, heptagon, triangle-q, glued)
    verify     run a named invariant suite at given bounds
    search     seeded random search for Scott counterexamples among PIPs
    render     polygon/region/trace JSON -> SVG figure

Exit codes: 0 success, 1 verification failure / counterexample found,
2 usage or parse error.  Output is canonical JSON (sorted keys), identical
bytes for identical invocations.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import constructions as cons
from . import jsonio, svg, verify
from .ehrhart import ehrhart, mcmullen_indices
from .geometry import area, boundary_count, interior_count
from .sampling import random_polygon, trial_rng

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _threads() -> int:
    raw = os.environ.get("EHRHART_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_document(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise jsonio.ParseError(path, str(exc)) from None
    return jsonio.load_document(text)


def cmd_analyze(args) -> int:
    doc = _read_document(args.input)
    P = jsonio.polygon_from_json(doc, "polygon")
    q = ehrhart(P)
    ps = q.period_sequence()
    I = interior_count(P, 1)
    b = boundary_count(P, 1)
    applicable, holds = cons.integral_hull_proposition_check(P)
    out = {
        "polygon": jsonio.polygon_to_json(P),
        "area": jsonio.fraction_to_ratio(area(P)),
        "interior_points": I,
        "boundary_points": b,
        "ehrhart": jsonio.quasi_to_json(q),
        "period_sequence": [ps.s2, ps.s1, ps.s0],
        "quasi_period": ps.quasi_period,
        "is_pip": ps.quasi_period == 1,
        "mcmullen_indices": list(mcmullen_indices(P)),
        "pick_holds": area(P) == I + Fraction(b, 2) - 1,
        "scott": {
            "admissible_as_integral": cons.scott_admissible(I, b),
            "inequality_holds": cons.scott_inequality_holds(I, b),
            "integral_hull_proposition": {"applicable": applicable, "holds": holds},
        },
    }
    _write_out(jsonio.dumps(out), args.output)
    return EXIT_OK


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "pip-b2":
        _require(args, "I")
        doc = jsonio.polygon_to_json(cons.pip_b2(args.I))
    elif fam == "pip-b1":
        _require(args, "I")
        trace = cons.pip_b1(args.I)
        doc = jsonio.trace_to_json(trace) if args.trace \
            else jsonio.polygon_to_json(trace.final)
    elif fam == "heptagon":
        _require(args, "s")
        if args.decomposition:
            doc = _decomposition_document(args.s)
        else:
            doc = jsonio.polygon_to_json(cons.heptagon(args.s))
    elif fam == "triangle-q":
        _require(args, "t")
        ax, ay = (int(c) for c in args.anchor.split(","))
        doc = jsonio.polygon_to_json(cons.triangle_q((ax, ay), args.t))
    elif fam == "glued":
        _require(args, "s")
        _require(args, "t")
        doc = jsonio.polygon_to_json(cons.glued(args.s, args.t))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(fam)
    _write_out(jsonio.dumps(doc), args.output)
    return EXIT_OK


def _require(args, name: str) -> None:
    if getattr(args, name, None) is None:
        raise ValueError(f"construct {args.family}: missing required --{name}")


def _decomposition_document(s: int) -> dict:
    dec = cons.heptagon_decomposition(s)
    T1, T2, T3 = dec["triangles"]
    U1T1, U2T2 = dec["mapped"]
    return {
        "panels": [
            {"label": f"H (s={s})",
             "region": jsonio.polygon_to_json(dec["heptagon"]),
             "pieces": [jsonio.polygon_to_json(p)
                        for p in (dec["rectangle"], T1, T2, T3)]},
            {"label": "H'",
             "region": jsonio.polygon_to_json(dec["h_prime"]),
             "pieces": [jsonio.polygon_to_json(p)
                        for p in (dec["rectangle"], U1T1, U2T2, T3)]},
        ],
    }


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "pip":
        kwargs = {"max_I": args.max_I, "max_n": args.max_n}
    elif args.suite == "heptagon":
        kwargs = {"max_s": args.max_s}
    elif args.suite == "glue":
        kwargs = {"max_s": args.max_s, "max_t": args.max_t}
    elif args.suite == "mcmullen":
        kwargs = {"trials": args.trials, "seed": args.seed}
    elif args.suite == "transforms":
        kwargs = {"max_I": args.max_I}
    report = verify.SUITES[args.suite](**kwargs)
    _write_out(jsonio.dumps(report), args.output)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_search(args) -> int:
    workers = _threads()
    if workers > 1:
        # trials are independent streams keyed by (seed, index); collect in
        # index order so the report is identical to a serial run
        report = cons.SearchReport(args.seed, args.trials,
                                   args.max_denominator, args.coord_bound)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            polys = list(pool.map(
                lambda i: random_polygon(trial_rng(args.seed, i),
                                         args.max_denominator, args.coord_bound),
                range(args.trials)))
        from .ehrhart import is_pip
        from .geometry import boundary_count as bc, interior_count as ic
        for P in polys:
            if P is None:
                continue
            report.polygons_tested += 1
            if not is_pip(P):
                continue
            report.pips_found += 1
            I, b = ic(P, 1), bc(P, 1)
            report.census[(I, b)] = report.census.get((I, b), 0) + 1
            if not cons.scott_inequality_holds(I, b):
                report.counterexamples.append(P)
            if I >= 1 and b > 2 * I + 7:
                report.counterexamples_weak.append(P)
    else:
        report = cons.scott_pip_search(args.seed, args.trials,
                                       args.max_denominator, args.coord_bound)
    _write_out(jsonio.dumps(jsonio.search_report_to_json(report)), args.output)
    return EXIT_FAIL if report.counterexamples else EXIT_OK


def _panel_from_json(obj, path: str) -> svg.Panel:
    label = obj.get("label", "")
    region = jsonio.region_from_json(obj.get("region", obj), f"{path}.region")
    lines = []
    for i, ln in enumerate(obj.get("splitting_lines", [])):
        anchor = jsonio.vertex_from_json(ln["anchor"], f"{path}.splitting_lines[{i}].anchor")
        d = ln["direction"]
        lines.append((anchor, (int(d[0]), int(d[1]))))
    pieces = [jsonio.polygon_from_json(p, f"{path}.pieces[{i}]")
              for i, p in enumerate(obj.get("pieces", []))]
    return svg.Panel(region, label, lines, pieces)


def cmd_render(args) -> int:
    doc = _read_document(args.input)
    if not isinstance(doc, dict):
        raise jsonio.ParseError("document", "expected a JSON object")
    if "panels" in doc:
        panels = [_panel_from_json(p, f"panels[{i}]")
                  for i, p in enumerate(doc["panels"])]
    elif "steps" in doc:
        panels = []
        for i, step in enumerate(doc["steps"]):
            panels.append(_panel_from_json(step, f"steps[{i}]"))
            panels[-1].label = step.get("label", f"step {i}")
    else:
        panels = [_panel_from_json(doc, "document")]
    _write_out(svg.render_panels(panels), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ehrpoly",
        description="Exact Ehrhart quasi-polynomials of rational polygons")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a polygon JSON file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="emit a constructed family member")
    p.add_argument("family",
                   choices=["pip-b1", "pip-b2", "heptagon", "triangle-q", "glued"])
    p.add_argument("--I", type=int, help="number of interior lattice points")
    p.add_argument("--s", type=int, help="linear-coefficient period (>= 2)")
    p.add_argument("--t", type=int, help="constant-coefficient period")
    p.add_argument("--anchor", default="0,0", help="lattice anchor for triangle-q")
    p.add_argument("--trace", action="store_true",
                   help="emit the full construction trace (pip-b1)")
    p.add_argument("--decomposition", action="store_true",
                   help="emit the subdivision panels (heptagon)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--max-I", dest="max_I", type=int, default=5)
    p.add_argument("--max-n", dest="max_n", type=int, default=12)
    p.add_argument("--max-s", dest="max_s", type=int, default=5)
    p.add_argument("--max-t", dest="max_t", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search PIPs for Scott counterexamples")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-denominator", dest="max_denominator", type=int, default=4)
    p.add_argument("--coord-bound", dest="coord_bound", type=int, default=4)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="render polygon/region/trace JSON to SVG")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except jsonio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cons.ConstructionMismatch as exc:
        print(f"construction verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
