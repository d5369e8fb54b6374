"""Committed example documents, and the writer that regenerates them.

Run `python -m cellsheaf.fixtures DIR` to (re)write the fixture files.
The repository ships the output under fixtures/; a test asserts the
committed bytes match regeneration, so the files can never drift from
the builders.
"""

import argparse
import sys
from pathlib import Path

from .complexes import build_complex, cycle_graph, path_graph, star_graph
from .document import (
    Document,
    MorphismEntry,
    ProblemEntry,
    canonical_json,
    dump,
    sample_to_json,
)
from .plgraph import build_pl_sheaf
from .sampling import polynomial_evaluation_problem, sampling_from_subcomplex
from .sheaf import Assignment, constant_sheaf


def c3_document() -> Document:
    """The worked three-cycle: its PL sheaf, a constant sheaf, and the
    two canonical vertex samplings (one vertex, all vertices)."""
    cx = cycle_graph(3)
    pl = build_pl_sheaf(cx)
    vertex0 = cx.vertex_subcomplex([0])
    all_vertices = cx.skeleton(0)
    at0 = sampling_from_subcomplex(pl, vertex0)
    everywhere = sampling_from_subcomplex(pl, all_vertices)
    return Document(
        complex=cx,
        sheaves={
            "constant": constant_sheaf(cx, 1),
            "pl": pl,
            "s_vertex0": at0.sampling,
            "s_allverts": everywhere.sampling,
        },
        morphisms={
            "to_vertex0": MorphismEntry("pl", "s_vertex0", at0.morphism),
            "to_allverts": MorphismEntry("pl", "s_allverts", everywhere.morphism),
        },
        problems={
            "pl_at_vertex0": ProblemEntry("pl", "to_vertex0", vertex0),
            "pl_at_all_vertices": ProblemEntry("pl", "to_allverts", all_vertices),
        },
        graphs={"c3": cx},
    )


def c3_sample() -> Assignment:
    """Full-stalk sample at vertex 0 of the three-cycle: value 1, slope
    2 toward vertex 1, slope 3 toward vertex 2."""
    return Assignment({(0,): (1, 2, 3)})


def polynomial_path_document() -> Document:
    """Degree-<=2 polynomial data on the path 0..4, sampled by point
    evaluation: two points leave one ambiguous dimension, three points
    reconstruct perfectly."""
    cx = path_graph(4)
    two = polynomial_evaluation_problem(2, 4, [0, 4])
    three = polynomial_evaluation_problem(2, 4, [0, 2, 4])
    return Document(
        complex=cx,
        sheaves={
            "poly2": two.sheaf,
            "pts04": two.sampling,
            "pts024": three.sampling,
        },
        morphisms={
            "eval04": MorphismEntry("poly2", "pts04", two.morphism),
            "eval024": MorphismEntry("poly2", "pts024", three.morphism),
        },
        problems={
            "poly2_y04": ProblemEntry("poly2", "eval04", cx.vertex_subcomplex([0, 4])),
            "poly2_y024": ProblemEntry("poly2", "eval024", cx.vertex_subcomplex([0, 2, 4])),
        },
        graphs={"path5": cx},
    )


def coverage_cases_document() -> Document:
    """The three coverage configurations used by the extrapolation
    suite, as plain graphs for command line exploration."""
    return Document(
        complex=build_complex([]),
        graphs={
            "anchored_star": star_graph(3),
            "anchored_pair": path_graph(3),
            "free_tail": path_graph(2),
        },
    )


FIXTURE_DOCUMENTS = {
    "c3.json": c3_document,
    "poly_path.json": polynomial_path_document,
    "coverage_cases.json": coverage_cases_document,
}

SAMPLE_FIXTURES = {
    "c3_vertex0_sample.json": c3_sample,
}


def write_fixtures(directory) -> list:
    """Write the documents into directory and the samples into
    directory/samples, so `validate --corpus directory` sees documents
    only."""
    directory = Path(directory)
    sample_dir = directory / "samples"
    sample_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in FIXTURE_DOCUMENTS.items():
        path = directory / name
        dump(build(), path)
        written.append(path)
    for name, build in SAMPLE_FIXTURES.items():
        path = sample_dir / name
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(sample_to_json(build())))
        written.append(path)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="write the fixture documents")
    parser.add_argument("directory", help="output directory")
    args = parser.parse_args(argv)
    for path in write_fixtures(args.directory):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
