"""Simplicial complexes: face discipline, incidence signs, builders."""

import pytest

from cellsheaf import (
    as_face,
    build_complex,
    complete_graph,
    cycle_graph,
    face_dim,
    incidence,
    is_subcomplex,
    path_graph,
    star_graph,
)


def test_faces_must_be_strictly_ascending():
    assert as_face((0, 2, 5)) == (0, 2, 5)
    with pytest.raises(ValueError):
        as_face((2, 1))
    with pytest.raises(ValueError):
        as_face((1, 1))
    with pytest.raises(ValueError):
        as_face((-1, 0))
    with pytest.raises(ValueError):
        as_face(())


def test_incidence_signs_on_a_triangle():
    t = (0, 1, 2)
    assert incidence(t, (1, 2)) == 1
    assert incidence(t, (0, 2)) == -1
    assert incidence(t, (0, 1)) == 1
    assert incidence(t, (0, 3)) == 0  # not a face of t
    assert incidence(t, (0,)) == 0  # wrong codimension


def test_incidence_composes_to_zero():
    """Boundary-of-boundary: the two edge routes from a vertex into a
    triangle carry opposite signs."""
    tri = build_complex([(0, 1, 2)])
    total = {}
    for a, b, c in tri.inclusion_chains():
        if face_dim(b) == 1:
            total[(a, c)] = total.get((a, c), 0) + incidence(c, b) * incidence(b, a)
    assert total and all(v == 0 for v in total.values())


def test_build_complex_closes_downward():
    x = build_complex([(0, 1, 2), (2, 3)])
    assert x.faces(0) == ((0,), (1,), (2,), (3,))
    assert (0, 1) in x.all_faces()
    assert x.dimension == 2
    with pytest.raises(ValueError):
        build_complex([(1, 0)])


def test_build_complex_respects_face_budget():
    with pytest.raises(ValueError):
        build_complex([tuple(range(30))], max_faces=100)


def test_skeleton_and_subcomplexes():
    x = build_complex([(0, 1, 2)])
    sk1 = x.skeleton(1)
    assert sk1.dimension == 1
    assert sk1.faces(1) == ((0, 1), (0, 2), (1, 2))
    sub = x.closed_subcomplex([(0, 1)])
    assert sub.all_faces() == ((0,), (1,), (0, 1))
    assert is_subcomplex(x, sub)
    assert not is_subcomplex(sub, x)
    vs = x.vertex_subcomplex([0, 2])
    assert vs.all_faces() == ((0,), (2,))  # vertices only, no induced edge


def test_vertex_degree():
    g = star_graph(3)
    assert g.vertex_degree(0) == 3
    assert g.vertex_degree((1,)) == 1
    with pytest.raises(ValueError):
        g.vertex_degree(9)
    tri = build_complex([(0, 1, 2)])
    with pytest.raises(ValueError):
        tri.vertex_degree(0)


def test_inclusion_pairs_are_proper_and_complete():
    x = build_complex([(0, 1, 2)])
    pairs = x.inclusion_pairs()
    assert ((0,), (0, 1, 2)) in pairs  # composite inclusions included
    assert all(len(a) < len(b) for a, b in pairs)
    assert len(pairs) == 12  # 6 vertex-edge, 3 vertex-triangle, 3 edge-triangle
    chains = x.inclusion_chains()
    assert all(set(a) < set(b) < set(c) for a, b, c in chains)
    assert len(chains) == 6


def test_graph_builders():
    p = path_graph(3)
    assert p.vertices == (0, 1, 2, 3)
    assert p.faces(1) == ((0, 1), (1, 2), (2, 3))
    c = cycle_graph(4)
    assert len(c.faces(1)) == 4
    assert (0, 3) in c.faces(1)
    s = star_graph(4)
    assert s.vertex_degree(0) == 4
    k = complete_graph(4)
    assert len(k.faces(1)) == 6
    assert k.is_graph
    assert not build_complex([(0, 1, 2)]).is_graph


def test_empty_complex():
    e = build_complex([])
    assert e.all_faces() == ()
    assert e.dimension == -1
    assert e.is_graph
