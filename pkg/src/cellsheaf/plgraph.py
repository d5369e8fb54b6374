"""Piecewise linear functions on a graph, as a cellular sheaf.

A PL function is a value per vertex plus a slope per edge, matched at
edge midpoints.  The vertex stalk packs the value together with the
slopes of every incident edge, the edge stalk is (midpoint value, slope),
and the restriction to an edge reads off the matching data.  Global
sections are exactly the PL functions, so the sheaf has one section
degree of freedom per vertex.

The sampling analysis on this sheaf is controlled by a purely
combinatorial quantity: the worst graph distance from a vertex to the
sampled set.  Radius <= 1 (every vertex sampled or adjacent to a sample)
kills the vanishing subsheaf's sections, and the leftover redundancy has
a closed-form dimension.  Both facts are checked against exact
elimination rather than trusted.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, as_face, incidence
from .exactlin import Matrix, _coerce
from .cohomology import cohomology
from .sampling import SamplingProblem, ambiguity_sheaf, sampling_from_subcomplex
from .sheaf import Assignment, Sheaf, apply_morphism

_HALF = Fraction(1, 2)


class PLSheaf(Sheaf):
    """Sheaf of piecewise linear functions on a graph.

    edge_order maps each vertex face to the tuple of its incident edges
    in the coordinate order of the slope slots: ascending by the
    opposite endpoint's identifier.
    """

    __slots__ = ("edge_order",)

    def __init__(self, base, stalk_dims, restrictions, edge_order):
        super().__init__(base, stalk_dims, restrictions)
        self.edge_order = edge_order


def build_pl_sheaf(graph: SimplicialComplex) -> PLSheaf:
    """The piecewise linear sheaf on a 1-dimensional complex.

    Vertex stalk: (value, slope per incident edge); edge stalk
    (midpoint value, slope).  The restriction of a vertex into an edge e
    with sign eps = incidence(e, v) sends the packed vector to
    (value + eps/2 * slope_e, slope_e): walking half an edge from either
    endpoint lands on the same midpoint exactly when the slope is the
    difference of the endpoint values.
    """
    if not graph.is_graph:
        raise ValueError("the PL sheaf is defined on graphs only")
    edges = graph.faces(1)
    edge_order = {}
    dims = {}
    for v in graph.faces(0):
        vid = v[0]
        incident = sorted(
            (e for e in edges if vid in e),
            key=lambda e: e[1] if e[0] == vid else e[0],
        )
        edge_order[v] = tuple(incident)
        dims[v] = 1 + len(incident)
    for e in edges:
        dims[e] = 2
    rest = {}
    for v in graph.faces(0):
        order = edge_order[v]
        width = 1 + len(order)
        for slot, e in enumerate(order):
            eps = incidence(e, v)
            top = [Fraction(0)] * width
            bottom = [Fraction(0)] * width
            top[0] = Fraction(1)
            top[1 + slot] = eps * _HALF
            bottom[1 + slot] = Fraction(1)
            rest[(v, e)] = Matrix(2, width, [top, bottom])
    return PLSheaf(graph, dims, rest, edge_order)


def pl_section(pl: PLSheaf, vertex_values) -> Assignment:
    """The global section of the PL sheaf with the given vertex values.

    A PL function is determined by its vertex values; every slope is the
    difference of the endpoint values taken along the edge's orientation
    (ascending identifiers), matching the restriction convention.
    """
    values = {as_face((v,) if not isinstance(v, tuple) else v)[0]: _coerce(x)
              for v, x in vertex_values.items()}
    if set(values) != set(pl.base.vertices):
        missing = [v for v in pl.base.vertices if v not in values]
        raise ValueError(f"need a value for every vertex; missing {missing}")
    slope = {}
    for e in pl.base.faces(1):
        u, w = e
        slope[e] = values[u] - values[w]
    out = {}
    for v in pl.base.faces(0):
        out[v] = tuple([values[v[0]]] + [slope[e] for e in pl.edge_order[v]])
    for e in pl.base.faces(1):
        u, w = e
        out[e] = ((values[u] + values[w]) * _HALF, slope[e])
    return Assignment(out)


def _adjacency(graph: SimplicialComplex) -> dict:
    adj = {v: [] for v in graph.vertices}
    for u, w in graph.faces(1):
        adj[u].append(w)
        adj[w].append(u)
    return adj


def _distances_from(graph: SimplicialComplex, sources) -> dict:
    adj = _adjacency(graph)
    dist = {v: math.inf for v in adj}
    queue = []
    for s in sources:
        dist[s] = 0
        queue.append(s)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in adj[v]:
            if dist[w] is math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _vertex_ids(graph: SimplicialComplex, vertices) -> list:
    ids = []
    for v in vertices:
        face = as_face(v if isinstance(v, tuple) else (v,))
        if face not in graph:
            raise ValueError(f"{face[0]} is not a vertex of the graph")
        ids.append(face[0])
    return sorted(set(ids))


def edge_distance(graph: SimplicialComplex, v, w):
    """Number of edges on a shortest path between two vertices, or
    math.inf when they lie in different components."""
    if not graph.is_graph:
        raise ValueError("edge distance is defined on graphs only")
    [vid] = _vertex_ids(graph, [v])
    [wid] = _vertex_ids(graph, [w])
    return _distances_from(graph, [vid])[wid]


def max_edge_distance(graph: SimplicialComplex, y_vertices):
    """Worst-case distance from any vertex to the sampled vertex set:
    max over vertices of the shortest edge count into the set.

    math.inf when the set is empty (and the graph is not) or misses a
    component entirely; 0 exactly when every vertex is in the set.
    """
    if not graph.is_graph:
        raise ValueError("defined on graphs only")
    ids = _vertex_ids(graph, y_vertices)
    if not graph.vertices:
        return 0
    if not ids:
        return math.inf
    dist = _distances_from(graph, ids)
    return max(dist.values())


def pl_sampling_problem(graph: SimplicialComplex, y_vertices) -> SamplingProblem:
    """Full-stalk sampling of the PL sheaf at a set of vertices: every
    sampled vertex reports its value and all incident slopes."""
    pl = build_pl_sheaf(graph)
    ids = _vertex_ids(graph, y_vertices)
    support = graph.vertex_subcomplex(ids)
    return sampling_from_subcomplex(pl, support)


def pl_vanishing_subsheaf(graph: SimplicialComplex, y_vertices) -> Sheaf:
    """The subsheaf of PL functions whose value and incident slopes all
    vanish on the given vertices."""
    return ambiguity_sheaf(pl_sampling_problem(graph, y_vertices)).sheaf


@dataclass
class CoverageReport:
    """Two independent answers to "does sampling at Y pin down PL
    functions near Y":

    radius           -- max distance from a vertex to Y (math.inf allowed)
    h0_vanishing     -- dim H^0 of the subsheaf vanishing on Y
    radius_predicts  -- radius <= 1, the combinatorial criterion
    agree            -- whether the two routes reach the same verdict
    witness          -- a nonzero vanishing-on-Y section when one exists
    """

    radius: object
    h0_vanishing: int
    radius_predicts: bool
    agree: bool
    witness: Assignment | None


def unambiguous_check(graph: SimplicialComplex, y_vertices) -> CoverageReport:
    """Decide unambiguity of full-stalk vertex sampling two ways.

    The combinatorial route says sampling is unambiguous iff every
    vertex is within one edge of the sampled set; the algebraic route
    eliminates the vanishing subsheaf's section system.  Disagreement is
    reported, never silently reconciled.
    """
    radius = max_edge_distance(graph, y_vertices)
    amb = ambiguity_sheaf(pl_sampling_problem(graph, y_vertices))
    rep = cohomology(amb.sheaf)
    h0 = rep.dim_h(0)
    witness = None
    if h0 > 0:
        witness = apply_morphism(amb.inclusion, rep.h0_sections()[0])
    predicts = radius <= 1
    return CoverageReport(radius, h0, predicts, predicts == (h0 == 0), witness)


@dataclass
class RedundancyReport:
    """Closed-form redundancy count for full-stalk vertex sampling.

    When no ambiguity remains (h0_ambiguity = 0), the redundancy of
    sampling at Y is exactly

        2 * #edges - sum over unsampled vertices of (degree + 1),

    by a dimension count on the ambiguity sheaf's two cochain spaces.
    balance_holds records the boundary case where that count is zero.
    """

    formula: int
    h0_ambiguity: int
    h1_ambiguity: int
    applicable: bool
    matches: bool
    balance_holds: bool
    radius: object

    @property
    def redundant(self) -> bool:
        return self.h1_ambiguity > 0


def redundancy_dimension(graph: SimplicialComplex, y_vertices) -> RedundancyReport:
    """Evaluate the redundancy formula against exact elimination.

    The formula only claims anything when dim H^0(A) = 0; applicable
    records that gate and matches compares against the eliminated
    dim H^1(A) (trivially True when not applicable).
    """
    ids = set(_vertex_ids(graph, y_vertices))
    n_edges = len(graph.faces(1))
    excluded = [graph.vertex_degree(v) for v in graph.vertices if v not in ids]
    formula = 2 * n_edges - sum(d + 1 for d in excluded)
    balance = len(excluded) + sum(excluded) == 2 * n_edges
    amb = ambiguity_sheaf(pl_sampling_problem(graph, ids)).sheaf
    rep = cohomology(amb)
    h0, h1 = rep.dim_h(0), rep.dim_h(1)
    applicable = h0 == 0
    matches = (h1 == formula) if applicable else True
    return RedundancyReport(
        formula, h0, h1, applicable, matches, balance, max_edge_distance(graph, ids)
    )


@dataclass
class ExtrapolationCase:
    """One worked coverage configuration with its expected dimension."""

    name: str
    description: str
    h0_vanishing: int
    expected: int
    ok: bool


@dataclass
class ExtrapolationSuite:
    cases: tuple
    ok: bool


def extrapolation_case_suite() -> ExtrapolationSuite:
    """Three canonical configurations separating coverage radius 1 from 2.

    anchored_star: an unsampled vertex all of whose neighbors are
    sampled is pinned by linear extrapolation along each edge (dim 0).
    anchored_pair: two adjacent unsampled vertices, each anchored to a
    sampled vertex on the outside, are pinned through the shared edge
    (dim 0).  free_tail: a vertex two steps from the sampled set keeps
    one free degree of freedom (dim exactly 1).
    """
    from .complexes import path_graph, star_graph

    specs = [
        (
            "anchored_star",
            "center unsampled, every leaf sampled",
            star_graph(3),
            (1, 2, 3),
            0,
        ),
        (
            "anchored_pair",
            "path with both ends sampled and two interior vertices free",
            path_graph(3),
            (0, 3),
            0,
        ),
        (
            "free_tail",
            "path sampled at one end, far end two edges away",
            path_graph(2),
            (0,),
            1,
        ),
    ]
    cases = []
    for name, description, graph, ys, expected in specs:
        h0 = cohomology(pl_vanishing_subsheaf(graph, ys)).dim_h(0)
        cases.append(ExtrapolationCase(name, description, h0, expected, h0 == expected))
    return ExtrapolationSuite(tuple(cases), all(c.ok for c in cases))
