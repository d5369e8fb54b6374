"""Piecewise linear sheaves on graphs: stalk layout, coverage radius,
redundancy counting, the worked extrapolation cases."""

import math
import random
from fractions import Fraction

import pytest

from cellsheaf import (
    build_complex,
    build_pl_sheaf,
    cohomology,
    complete_graph,
    cycle_graph,
    edge_distance,
    extrapolation_case_suite,
    is_section,
    max_edge_distance,
    path_graph,
    pl_section,
    pl_vanishing_subsheaf,
    redundancy_dimension,
    star_graph,
    unambiguous_check,
)
from corpus import connected_graphs, random_connected_graph, uncovered_vertex_count


def test_stalk_layout():
    pl = build_pl_sheaf(star_graph(3))
    assert pl.stalk_dim((0,)) == 4  # value + one slope per incident edge
    assert pl.stalk_dim((1,)) == 2
    assert pl.stalk_dim((0, 1)) == 2  # midpoint value + slope


def test_restrictions_on_a_path_edge():
    """Vertex (value, slope) data maps to the midpoint sample: the lower
    endpoint walks half a slope down, the upper one half a slope up."""
    pl = build_pl_sheaf(path_graph(1))
    lower = pl.restriction((0,), (0, 1)).to_rows()
    upper = pl.restriction((1,), (0, 1)).to_rows()
    assert lower == [[1, Fraction(-1, 2)], [0, 1]]
    assert upper == [[1, Fraction(1, 2)], [0, 1]]


def test_pl_section_is_a_section_with_the_slope_convention():
    g = path_graph(2)
    pl = build_pl_sheaf(g)
    s = pl_section(pl, {0: 5, 1: 2, 2: 2})
    assert is_section(pl, s)
    # slope on (0,1) is lower value minus upper value
    assert s[(0,)] == (5, 3)
    assert s[(1,)] == (2, 3, 0)
    assert s[(0, 1)] == (Fraction(7, 2), 3)


def test_pl_section_rejects_missing_vertices():
    pl = build_pl_sheaf(path_graph(1))
    with pytest.raises(ValueError):
        pl_section(pl, {0: 1})


def test_global_sections_are_vertex_functions():
    for g in (path_graph(3), cycle_graph(5), complete_graph(4)):
        pl = build_pl_sheaf(g)
        assert cohomology(pl).h == {0: len(g.vertices), 1: 0}


def test_edge_distance():
    g = path_graph(3)
    assert edge_distance(g, 0, 3) == 3
    assert edge_distance(g, 2, 2) == 0
    two = build_complex([(0, 1), (2, 3)])
    assert edge_distance(two, 0, 3) == math.inf
    with pytest.raises(ValueError):
        edge_distance(g, 0, 9)


def test_max_edge_distance_extremes():
    g = cycle_graph(5)
    assert max_edge_distance(g, []) == math.inf
    assert max_edge_distance(g, list(g.vertices)) == 0
    assert max_edge_distance(g, [0]) == 2
    empty = build_complex([])
    assert max_edge_distance(empty, []) == 0


def test_unambiguous_check_is_two_routes_in_agreement():
    rep = unambiguous_check(star_graph(3), [1, 2, 3])
    assert rep.radius == 1
    assert rep.h0_vanishing == 0
    assert rep.radius_predicts and rep.agree
    assert rep.witness is None

    rep = unambiguous_check(path_graph(2), [0])
    assert rep.radius == 2
    assert rep.h0_vanishing == 1
    assert not rep.radius_predicts
    assert rep.agree
    w = rep.witness
    assert w is not None and not w.is_zero()
    assert w[(0,)] == (0, 0)  # vanishes where sampled


def test_vanishing_subsheaf_counts_uncovered_vertices():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng, max_vertices=9)
        y = [v for v in g.vertices if rng.random() < 0.4]
        sub = pl_vanishing_subsheaf(g, y)
        assert cohomology(sub).dim_h(0) == uncovered_vertex_count(g, y)


def test_prop_style_equivalence_exhaustively_on_small_graphs():
    """radius <= 1 iff no vanishing sections, across every labeled
    connected graph on up to 4 vertices and every sampled set."""
    for n in (2, 3, 4):
        for g in connected_graphs(n):
            verts = list(g.vertices)
            for mask in range(2 ** len(verts)):
                y = [v for i, v in enumerate(verts) if mask >> i & 1]
                rep = unambiguous_check(g, y)
                assert rep.agree, (g.all_faces(), y)


def test_redundancy_formula_frozen_cases():
    rep = redundancy_dimension(cycle_graph(3), [0, 1, 2])
    assert rep.applicable and rep.matches
    assert rep.formula == 6 == rep.h1_ambiguity
    assert rep.redundant
    assert not rep.balance_holds
    assert rep.radius == 0

    rep = redundancy_dimension(path_graph(3), [0, 3])
    assert rep.applicable and rep.matches
    assert rep.formula == 0 == rep.h1_ambiguity
    assert not rep.redundant
    assert rep.balance_holds  # exactly critical sampling

    rep = redundancy_dimension(path_graph(2), [0])
    assert not rep.applicable  # ambiguity first: the formula claims nothing
    assert rep.h0_ambiguity == 1
    assert rep.matches  # trivially


def test_unknown_sample_vertices_are_rejected():
    with pytest.raises(ValueError):
        redundancy_dimension(path_graph(2), [7])
    with pytest.raises(ValueError):
        unambiguous_check(path_graph(2), [-1])
    # duplicates are harmless, the set is what matters
    a = unambiguous_check(path_graph(2), [0, 0])
    b = unambiguous_check(path_graph(2), [0])
    assert (a.radius, a.h0_vanishing) == (b.radius, b.h0_vanishing)


def test_extrapolation_cases():
    suite = extrapolation_case_suite()
    assert suite.ok
    by_name = {c.name: c for c in suite.cases}
    assert set(by_name) == {"anchored_star", "anchored_pair", "free_tail"}
    assert by_name["anchored_star"].h0_vanishing == 0
    assert by_name["anchored_pair"].h0_vanishing == 0
    assert by_name["free_tail"].h0_vanishing == 1
    for case in suite.cases:
        assert case.ok
        assert case.h0_vanishing == case.expected
