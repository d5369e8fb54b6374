"""Figure rendering sanity: files appear, layouts behave."""

import math

from cellsheaf import build_complex, cycle_graph, path_graph
from cellsheaf.figures import (
    circular_layout,
    complex_figure,
    dimension_figure,
    save_figure,
)


def test_circular_layout_positions():
    single = circular_layout(path_graph(0))
    assert single[0] == (0.0, 0.0)
    pos = circular_layout(cycle_graph(4))
    assert len(pos) == 4
    for x, y in pos.values():
        assert math.isclose(x * x + y * y, 1.0, abs_tol=1e-9)
    # distinct positions
    assert len({(round(x, 6), round(y, 6)) for x, y in pos.values()}) == 4


def test_complex_figure_draws_and_saves(tmp_path):
    x = build_complex([(0, 1, 2), (2, 3)])
    fig = complex_figure(x, highlight=[0, (2, 3)], title="test")
    out = tmp_path / "complex.png"
    save_figure(fig, out)
    assert out.stat().st_size > 0


def test_dimension_figure_saves(tmp_path):
    fig = dimension_figure([("0", 3), ("1", 0)], title="dims")
    out = tmp_path / "dims.png"
    save_figure(fig, out)
    assert out.stat().st_size > 0


def test_graph_figure_without_marks(tmp_path):
    fig = complex_figure(cycle_graph(5))
    out = tmp_path / "c5.png"
    save_figure(fig, out)
    assert out.stat().st_size > 0
