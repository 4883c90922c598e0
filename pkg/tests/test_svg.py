from fractions import Fraction as F

from ehrpoly import Polygon, region
from ehrpoly.svg import Panel, _num, render_panels, render_region


def test_number_formatting_is_exact_and_deterministic():
    assert _num(F(1, 2)) == "0.5"
    assert _num(F(-7, 4)) == "-1.75"
    assert _num(F(1, 3)) == "0.333"
    assert _num(F(2, 3)) == "0.667"
    assert _num(F(5)) == "5"
    assert _num(F(0)) == "0"


def test_render_region_structure():
    square = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    svg = render_region(square, label="unit square")
    assert svg.startswith("<svg") and svg.endswith("</svg>\n")
    assert svg.count('fill="#ffffff" stroke="#1f3552"') == 4   # boundary rings
    assert "unit square" in svg
    assert render_region(square, label="unit square") == svg


def test_removed_segment_and_splitting_line_styles():
    R = region([(0, 0), (1, 1), (-1, 0)], [((0, 0), (1, 1))])
    svg = render_panels([Panel(R, "seed", [((0, 0), (0, -1))])])
    assert 'stroke-dasharray="6,4"' in svg
    assert 'stroke="#999999"' in svg
    # open endpoint hollow, closed endpoint solid
    assert 'fill="#ffffff" stroke="#cc3333"' in svg
    assert 'fill="#cc3333"' in svg


def test_interior_points_solid():
    fat = Polygon([(0, 0), (3, 0), (3, 3), (0, 3)])
    svg = render_region(fat)
    assert svg.count('fill="#1a1a1a"') == 4   # (1,1),(1,2),(2,1),(2,2)
