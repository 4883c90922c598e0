import json
from fractions import Fraction as F

import pytest

from ehrpoly import Polygon
from ehrpoly.cli import main
from ehrpoly.jsonio import dumps, polygon_to_json

SQUARE = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_pip_b1(capsys):
    code, out, _ = run(capsys, "construct", "pip-b1", "--I", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc == polygon_to_json(
        Polygon([(0, -1), (F(1, 3), F(1, 3)), (F(-1, 3), F(2, 3))]))


def test_construct_pip_b2_and_triangle_q(capsys):
    code, out, _ = run(capsys, "construct", "pip-b2", "--I", "2")
    assert code == 0
    assert json.loads(out) == polygon_to_json(
        Polygon([(0, 0), (1, F(-2, 3)), (3, 0), (1, F(2, 3))]))
    code, out, _ = run(capsys, "construct", "triangle-q", "--t", "2",
                       "--anchor", "1,5")
    assert code == 0
    assert json.loads(out) == polygon_to_json(
        Polygon([(1, 5), (2, 4), (F(3, 2), 5)]))


def test_construct_missing_parameter_exits_2(capsys):
    code, _, err = run(capsys, "construct", "pip-b2")
    assert code == 2 and "--I" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    import ehrpoly.verify as v
    monkeypatch.setitem(
        v.SUITES, "pip",
        lambda **kw: {"suite": "pip", "passed": False,
                      "checks": [{"name": "broken", "passed": False}]})
    code, out, _ = run(capsys, "verify", "pip")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_construct_and_analyze_round_trip(tmp_path, capsys):
    poly_file = tmp_path / "glued.json"
    code, _, _ = run(capsys, "construct", "glued", "--s", "2", "--t", "3",
                     "-o", str(poly_file))
    assert code == 0
    code, out, _ = run(capsys, "analyze", str(poly_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["period_sequence"] == [1, 2, 3]
    assert doc["quasi_period"] == 6
    assert doc["is_pip"] is False
    assert doc["polygon"] == json.loads(poly_file.read_text())
    assert doc["scott"]["inequality_holds"] is True


def test_analyze_unit_square(tmp_path, capsys):
    f = tmp_path / "square.json"
    f.write_text(dumps(polygon_to_json(SQUARE)))
    code, out, _ = run(capsys, "analyze", str(f))
    assert code == 0
    doc = json.loads(out)
    assert doc["period_sequence"] == [1, 1, 1]
    assert doc["quasi_period"] == 1
    assert doc["is_pip"] is True
    assert doc["mcmullen_indices"] == [1, 1, 1]
    assert doc["pick_holds"] is True
    assert doc["area"] == "1/1"


def test_analyze_malformed_json_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"vertices": "oops"}')
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2
    assert "vertices" in err


def test_analyze_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/p.json")
    assert code == 2 and err


def test_construct_out_of_range_exits_2(capsys):
    code, _, err = run(capsys, "construct", "heptagon", "--s", "1")
    assert code == 2
    assert "s must be" in err


def test_construct_unknown_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "dodecahedron"])
    assert exc.value.code == 2


def test_verify_pip_passes(capsys):
    code, out, _ = run(capsys, "verify", "pip", "--max-I", "2", "--max-n", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_verify_heptagon_passes(capsys):
    code, out, _ = run(capsys, "verify", "heptagon", "--max-s", "2")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_glue_passes(capsys):
    code, out, _ = run(capsys, "verify", "glue", "--max-s", "3", "--max-t", "3")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_transforms_passes(capsys):
    code, out, _ = run(capsys, "verify", "transforms", "--max-I", "2")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_mcmullen_passes(capsys):
    code, out, _ = run(capsys, "verify", "mcmullen", "--trials", "30", "--seed", "7")
    assert code == 0 and json.loads(out)["passed"] is True


def test_search_deterministic_and_exit_zero(tmp_path, capsys):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "search", "--seed", "1", "--trials", "80", "-o", str(f1))[0] == 0
    assert run(capsys, "search", "--seed", "1", "--trials", "80", "-o", str(f2))[0] == 0
    assert f1.read_bytes() == f2.read_bytes()
    doc = json.loads(f1.read_text())
    assert doc["trials"] == 80 and doc["counterexamples"] == []


def test_search_threaded_matches_serial(tmp_path, capsys, monkeypatch):
    serial, threaded = tmp_path / "s.json", tmp_path / "t.json"
    run(capsys, "search", "--seed", "5", "--trials", "60", "-o", str(serial))
    monkeypatch.setenv("EHRHART_THREADS", "4")
    run(capsys, "search", "--seed", "5", "--trials", "60", "-o", str(threaded))
    assert serial.read_bytes() == threaded.read_bytes()


def test_render_square(tmp_path, capsys):
    f = tmp_path / "square.json"
    f.write_text(dumps(polygon_to_json(SQUARE)))
    out_svg = tmp_path / "square.svg"
    code, _, _ = run(capsys, "render", str(f), str(out_svg))
    assert code == 0
    svg = out_svg.read_text()
    assert svg.startswith("<svg")
    # 4 boundary lattice points drawn as rings
    assert svg.count('fill="#ffffff" stroke="#1f3552"') == 4
    assert '<line' in svg


def test_render_trace_four_panels(tmp_path, capsys):
    trace_file = tmp_path / "trace.json"
    run(capsys, "construct", "pip-b1", "--I", "3", "--trace", "-o", str(trace_file))
    out_svg = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "render", str(trace_file), str(out_svg))
    assert code == 0
    svg = out_svg.read_text()
    for label in ("T1", "T2", "T3", "P"):
        assert f">{label}</text>" in svg
    assert 'stroke-dasharray="6,4"' in svg          # removed half-open segments
    assert 'stroke="#999999"' in svg                 # splitting lines

    # byte-identical on re-render
    out2 = tmp_path / "fig2.svg"
    run(capsys, "render", str(trace_file), str(out2))
    assert out_svg.read_bytes() == out2.read_bytes()


def test_render_heptagon_decomposition(tmp_path, capsys):
    dec_file = tmp_path / "dec.json"
    run(capsys, "construct", "heptagon", "--s", "3", "--decomposition",
        "-o", str(dec_file))
    out_svg = tmp_path / "dec.svg"
    code, _, _ = run(capsys, "render", str(dec_file), str(out_svg))
    assert code == 0
    svg = out_svg.read_text()
    assert "H (s=3)" in svg and "H&apos;" in svg or "H'" in svg


def test_construct_byte_identical_runs(capsys):
    _, out1, _ = run(capsys, "construct", "heptagon", "--s", "4")
    _, out2, _ = run(capsys, "construct", "heptagon", "--s", "4")
    assert out1 == out2
