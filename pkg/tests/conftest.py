"""Session-wide randomized corpora.

Seeds and sizes are pinned: the suite is reproducible run to run, and
changing a seed is a deliberate edit, not noise.  Sizes meet the
acceptance floors (200 sheaves with a two-dimensional contingent, 500
sampling problems on graphs, 500 PL instances).
"""

import random

import pytest

from corpus import (
    random_complex,
    random_connected_graph,
    random_data_sheaf,
    random_valid_sheaf,
    random_vertex_sampling,
)

SHEAF_COUNT = 200
TWO_DIM_COUNT = 60
SAMPLING_COUNT = 500
PL_COUNT = 500


@pytest.fixture(scope="session")
def sheaf_corpus():
    """>= 200 valid random sheaves on complexes of dimension <= 2, with
    at least 60 on genuinely two-dimensional bases."""
    rng = random.Random(130825)
    out = []
    for i in range(SHEAF_COUNT):
        base = random_complex(rng, require_triangle=i < TWO_DIM_COUNT)
        out.append(random_valid_sheaf(rng, base))
    return out


@pytest.fixture(scope="session")
def sampling_corpus():
    """>= 500 vertex-supported sampling problems on connected graphs.

    Data sheaves are conditioned to have surjective coboundary (dim H^1
    of the data sheaf is zero) so that invertibility of the induced
    section map is equivalent to the vanishing of both ambiguity
    dimensions; samplings read vertex stalks only."""
    rng = random.Random(210825)
    out = []
    for _ in range(SAMPLING_COUNT):
        graph = random_connected_graph(rng, max_vertices=8, max_extra_edges=2)
        f = random_data_sheaf(rng, graph)
        out.append(random_vertex_sampling(rng, f))
    return out


@pytest.fixture(scope="session")
def pl_corpus():
    """>= 500 (connected graph, sampled vertex set) instances, up to 12
    vertices, Y ranging from empty to everything."""
    rng = random.Random(350825)
    out = []
    for _ in range(PL_COUNT):
        graph = random_connected_graph(rng, max_vertices=12)
        roll = rng.random()
        if roll < 0.08:
            y = ()
        elif roll < 0.16:
            y = tuple(graph.vertices)
        else:
            y = tuple(v for v in graph.vertices if rng.random() < 0.5)
        out.append((graph, y))
    return out
