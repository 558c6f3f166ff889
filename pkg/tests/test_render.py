"""Rendering: SVG and TikZ structure, geometric faithfulness, determinism."""

import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from tanglekit import (
    DrawingSpec,
    Layout,
    Permutation,
    catergram,
    count_crossings,
    rho_layout,
    to_svg,
    to_text,
    to_tikz,
)

from conftest import (
    count_segment_crossings,
    layouts,
    svg_leaf_order,
    svg_matching_segments,
)


def _sample_layout():
    t = catergram(Permutation((2, 3, 1)))
    return Layout(t, (1, 2, 3), (1, 2, 3))


class TestDrawingSpec:
    def test_defaults(self):
        spec = DrawingSpec()
        assert spec.unit == 24.0
        assert spec.gutter == 240.0

    def test_rejects_non_positive_dimensions(self):
        with pytest.raises(ValueError):
            DrawingSpec(unit=0)
        with pytest.raises(ValueError):
            DrawingSpec(gutter=-5)


class TestSvg:
    def test_well_formed_xml(self):
        svg = to_svg(_sample_layout())
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_deterministic_bytes(self):
        lay = _sample_layout()
        assert to_svg(lay) == to_svg(lay)

    def test_one_matching_segment_per_edge(self):
        lay = _sample_layout()
        assert len(svg_matching_segments(to_svg(lay))) == 3

    def test_leaf_orders_read_back_bottom_up(self):
        lay = _sample_layout()
        svg = to_svg(lay)
        assert svg_leaf_order(svg, "left") == ("1", "2", "3")
        assert svg_leaf_order(svg, "right") == ("1", "2", "3")

    def test_mirrored_order_reads_back(self):
        t = catergram(Permutation((2, 3, 1)))
        lay = Layout(t, (3, 2, 1), (3, 2, 1))
        svg = to_svg(lay)
        assert svg_leaf_order(svg, "left") == ("3", "2", "1")

    def test_crossed_pair_meets_geometrically(self):
        t = catergram(Permutation((2, 1)))
        lay = Layout(t, (1, 2), (1, 2))
        assert count_crossings(lay) == 1
        segs = svg_matching_segments(to_svg(lay))
        assert count_segment_crossings(segs) == 1

    @given(layouts(2, 7))
    def test_geometry_matches_the_combinatorial_count(self, lay):
        segs = svg_matching_segments(to_svg(lay))
        assert count_segment_crossings(segs) == count_crossings(lay)

    def test_spec_scales_coordinates(self):
        lay = _sample_layout()
        wide = svg_matching_segments(to_svg(lay, DrawingSpec(gutter=500.0)))
        assert all(x2 - x1 == 500.0 for x1, _, x2, _ in wide)

    def test_twenty_leaf_drawing_is_crossing_free(self):
        svg = to_svg(rho_layout(4))
        assert count_segment_crossings(svg_matching_segments(svg)) == 0


class TestTikz:
    def test_environment_and_dashes(self):
        tikz = to_tikz(_sample_layout())
        assert tikz.startswith(r"\begin{tikzpicture}")
        assert tikz.rstrip().endswith(r"\end{tikzpicture}")
        assert tikz.count("dashed") == 3

    def test_deterministic(self):
        lay = _sample_layout()
        assert to_tikz(lay) == to_tikz(lay)

    def test_labels_present(self):
        tikz = to_tikz(_sample_layout())
        assert r"\node[anchor=east]" in tikz
        assert r"\node[anchor=west]" in tikz

    def test_tree_edge_count(self):
        # a binary tree with n leaves draws 2(n-1) edges; two trees double it
        tikz = to_tikz(_sample_layout())
        assert tikz.count("line width=1.50pt") == 8


class TestText:
    def test_summary_lines(self):
        out = to_text(_sample_layout())
        assert out == "left: (1,2,3)\nright: (1,2,3)\ncrossings: 2\n"

    def test_crossing_count_reported(self):
        t = catergram(Permutation((2, 1)))
        out = to_text(Layout(t, (1, 2), (1, 2)))
        assert out.endswith("crossings: 1\n")
