"""Exact JSON interchange for polygons, regions, quasi-polynomials, traces.

All numbers that could be non-integral rationals are serialized as decimal
strings so output is byte-identical across platforms and arbitrary
precision survives the round trip:

* coordinate: ``["num", "den"]`` (two decimal strings, den > 0, reduced)
* vertex:     ``[x, y]`` of two coordinates
* polygon:    ``{"vertices": [vertex, ...]}``
* region:     polygon plus ``"removed": [{"open": vertex, "closed": vertex}]``
* quasi-polynomial: coefficient tables as ``"num/den"`` strings in residue
  order 1, 2, ..., D-1, 0 (residue 0 is stored last, at position D).

Parsing errors always name the offending field path.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .constructions import ConstructionTrace, SearchReport
from .ehrhart import EhrhartQuasiPolynomial
from .geometry import Point, Polygon, point
from .regions import HalfOpenSegment, SemiOpenRegion


class ParseError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def fraction_to_pair(f: Fraction) -> list[str]:
    return [str(f.numerator), str(f.denominator)]


def fraction_to_ratio(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_int(s, path: str) -> int:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(path, f"expected an integer string, got {s!r}")
    try:
        return int(s)
    except ValueError:
        raise ParseError(path, f"not an integer: {s!r}") from None


def pair_to_fraction(obj, path: str) -> Fraction:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ParseError(path, f'expected ["num", "den"], got {obj!r}')
    num = _parse_int(obj[0], f"{path}[0]")
    den = _parse_int(obj[1], f"{path}[1]")
    if den <= 0:
        raise ParseError(f"{path}[1]", f"denominator must be positive, got {den}")
    return Fraction(num, den)


def vertex_to_json(p: Point) -> list:
    return [fraction_to_pair(p[0]), fraction_to_pair(p[1])]


def vertex_from_json(obj, path: str) -> Point:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ParseError(path, f"expected [x, y], got {obj!r}")
    return (pair_to_fraction(obj[0], f"{path}[0]"),
            pair_to_fraction(obj[1], f"{path}[1]"))


def polygon_to_json(P: Polygon) -> dict:
    return {"vertices": [vertex_to_json(v) for v in P.vertices]}


def polygon_from_json(obj, path: str = "polygon") -> Polygon:
    if not isinstance(obj, dict):
        raise ParseError(path, f"expected an object, got {type(obj).__name__}")
    if "vertices" not in obj:
        raise ParseError(f"{path}.vertices", "missing")
    raw = obj["vertices"]
    if not isinstance(raw, list):
        raise ParseError(f"{path}.vertices", "expected a list")
    verts = [vertex_from_json(v, f"{path}.vertices[{i}]") for i, v in enumerate(raw)]
    try:
        return Polygon(verts)
    except ValueError as exc:
        raise ParseError(f"{path}.vertices", str(exc)) from None


def region_to_json(R: SemiOpenRegion) -> dict:
    out = polygon_to_json(R.closed)
    if R.removed:
        out["removed"] = [
            {"open": vertex_to_json(s.open_end), "closed": vertex_to_json(s.closed_end)}
            for s in R.removed]
    return out


def region_from_json(obj, path: str = "region") -> SemiOpenRegion:
    P = polygon_from_json(obj, path)
    removed = []
    for i, raw in enumerate(obj.get("removed", [])):
        p = f"{path}.removed[{i}]"
        if not isinstance(raw, dict) or "open" not in raw or "closed" not in raw:
            raise ParseError(p, 'expected {"open": vertex, "closed": vertex}')
        removed.append(HalfOpenSegment(
            vertex_from_json(raw["open"], f"{p}.open"),
            vertex_from_json(raw["closed"], f"{p}.closed")))
    try:
        return SemiOpenRegion(P, removed)
    except ValueError as exc:
        raise ParseError(f"{path}.removed", str(exc)) from None


def _table_to_json(table) -> list[str]:
    """Residue order 1..D-1 then 0, per the documented layout."""
    D = len(table)
    return [fraction_to_ratio(table[r % D]) for r in range(1, D + 1)]


def quasi_to_json(q: EhrhartQuasiPolynomial) -> dict:
    ps = q.period_sequence()
    return {
        "modulus": q.modulus,
        "c2": _table_to_json(q.c2),
        "c1": _table_to_json(q.c1),
        "c0": _table_to_json(q.c0),
        "period_sequence": [ps.s2, ps.s1, ps.s0],
        "quasi_period": ps.quasi_period,
    }


def trace_to_json(trace: ConstructionTrace) -> dict:
    steps = []
    for s in trace.steps:
        steps.append({
            "label": s.label,
            "region": region_to_json(s.region),
            "splitting_lines": [
                {"anchor": vertex_to_json(a), "direction": [str(d[0]), str(d[1])]}
                for a, d in s.splitting_lines],
            "ehrhart": quasi_to_json(s.quasi),
        })
    return {"steps": steps, "final": polygon_to_json(trace.final)}


def search_report_to_json(r: SearchReport) -> dict:
    return {
        "seed": r.seed,
        "trials": r.trials,
        "max_denominator": r.max_denominator,
        "coord_bound": r.coord_bound,
        "polygons_tested": r.polygons_tested,
        "pips_found": r.pips_found,
        "census": {f"({i},{b})": c for (i, b), c in sorted(r.census.items())},
        "counterexamples": [polygon_to_json(P) for P in r.counterexamples],
        "counterexamples_weak": [polygon_to_json(P) for P in r.counterexamples_weak],
    }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_document(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("document", f"invalid JSON: {exc}") from None
