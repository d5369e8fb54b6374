"""Cochain assembly and cohomology dimensions against frozen cases."""

import itertools
import random
from fractions import Fraction

import pytest

from cellsheaf import (
    build_complex,
    coboundary,
    cochain_space,
    cohomology,
    constant_sheaf,
    cycle_graph,
    identity_morphism,
    induced_h0_map,
    is_section,
    path_graph,
    section_from_vertex_values,
)
from corpus import random_complex, random_valid_sheaf, section_space_dimension


def test_path_coboundary_is_the_frozen_difference_matrix():
    f = constant_sheaf(path_graph(2))
    d0 = coboundary(f, 0)
    assert d0.to_rows() == [[-1, 1, 0], [0, -1, 1]]


def test_coboundary_squares_to_zero_on_a_triangle():
    f = constant_sheaf(build_complex([(0, 1, 2)]))
    d0 = coboundary(f, 0)
    d1 = coboundary(f, 1)
    assert (d1 @ d0).is_zero()


def test_coboundary_beyond_top_degree_is_empty():
    f = constant_sheaf(path_graph(1))
    d1 = coboundary(f, 1)
    assert d1.rows == 0 and d1.cols == 1


def test_constant_sheaf_measures_topology():
    assert cohomology(constant_sheaf(path_graph(4))).h == {0: 1, 1: 0}
    assert cohomology(constant_sheaf(cycle_graph(5))).h == {0: 1, 1: 1}
    two = build_complex([(0, 1), (2, 3)])
    assert cohomology(constant_sheaf(two)).dim_h(0) == 2
    sphere = build_complex(list(itertools.combinations(range(4), 3)))
    assert cohomology(constant_sheaf(sphere)).h == {0: 1, 1: 0, 2: 1}
    solid = build_complex([(0, 1, 2, 3)])
    assert cohomology(constant_sheaf(solid)).h == {0: 1, 1: 0, 2: 0, 3: 0}


def test_cochain_space_blocks_round_trip():
    f = constant_sheaf(cycle_graph(3), dim=2)
    space = cochain_space(f, 0)
    vec = tuple(Fraction(i) for i in range(space.total_dim))
    parts = space.split(vec)
    assert set(parts) == set(f.base.faces(0))
    assert space.join(parts) == vec
    assert space.block((1,)) == (2, 4)


def test_h0_sections_are_sections():
    f = constant_sheaf(cycle_graph(4), dim=2)
    rep = cohomology(f)
    secs = rep.h0_sections()
    assert len(secs) == rep.dim_h(0) == 2
    for s in secs:
        assert is_section(f, s)
    combo = rep.section_from_coefficients((Fraction(2), Fraction(-3)))
    assert is_section(f, combo)
    assert combo == secs[0].scaled(2) + secs[1].scaled(-3)


def test_section_from_vertex_values_extends():
    f = constant_sheaf(path_graph(2))
    s = section_from_vertex_values(f, {0: (5,), 1: (5,), 2: (5,)})
    assert is_section(f, s)
    assert s[(0, 1)] == (5,)
    with pytest.raises(ValueError):
        section_from_vertex_values(f, {0: (5,)})


def test_induced_h0_map_of_identity():
    f = constant_sheaf(cycle_graph(3), dim=2)
    m = induced_h0_map(identity_morphism(f))
    assert m.rows == m.cols == 2
    assert m.rank() == 2


def test_euler_characteristic_two_routes_agree():
    rng = random.Random(11)
    for _ in range(20):
        f = random_valid_sheaf(rng, random_complex(rng))
        rep = cohomology(f)
        assert rep.euler_cochain() == rep.euler_cohomology()


def test_h0_matches_brute_force_on_spot_checks():
    rng = random.Random(12)
    for _ in range(10):
        f = random_valid_sheaf(rng, random_complex(rng))
        assert cohomology(f).dim_h(0) == section_space_dimension(f)


def test_report_json_shape():
    rep = cohomology(constant_sheaf(path_graph(1)))
    doc = rep.to_json_dict()
    assert set(doc) == {"H", "sections"}
    assert doc["H"] == {"0": 1, "1": 0}
    assert len(doc["sections"]) == 1
