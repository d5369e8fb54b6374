"""Command line front end.

Verbs: validate, cohomology, sample-check, reconstruct, pl-analyze.
Every run prints exactly one canonical JSON object to standard output;
identical inputs produce byte-identical output.  Exit codes: 0 success
(or verdict pass), 1 validation/verdict failure, 2 I/O or parse failure.

With --figures DIR, a run additionally renders PNG figures of the
complex and the computed dimensions into DIR next to a delimited
report.csv summarizing the same numbers.
"""

import argparse
import csv
import math
import re
import sys
from pathlib import Path

from .cohomology import cohomology
from .document import DocumentError, canonical_json, load, load_sample
from .plgraph import redundancy_dimension
from .sampling import nyquist_check, reconstruct
from .sheaf import validate_morphism, validate_sheaf


def _emit(obj) -> None:
    sys.stdout.write(canonical_json(obj))


def _finite_or_inf(value):
    return "inf" if value == math.inf else int(value)


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name) or "unnamed"


class ReportDir:
    """Accumulates figure files and report.csv rows for --figures."""

    def __init__(self, directory, header):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.header = list(header)
        self.rows = []

    def row(self, *values) -> None:
        self.rows.append([str(v) for v in values])

    def complex_figure(self, cx, name, highlight=(), title=""):
        from . import figures

        figures.save_figure(figures.complex_figure(cx, highlight, title), self.dir / name)

    def dimension_figure(self, items, name, title=""):
        from . import figures

        figures.save_figure(figures.dimension_figure(items, title), self.dir / name)

    def finish(self) -> None:
        with open(self.dir / "report.csv", "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.header)
            writer.writerows(self.rows)


def _document_report(doc) -> dict:
    objects = {"morphisms": {}, "problems": {}, "sheaves": {}}
    ok = True
    for name, sheaf in doc.sheaves.items():
        verdict = validate_sheaf(sheaf)
        objects["sheaves"][name] = {"ok": bool(verdict), "reason": verdict.reason}
        ok = ok and bool(verdict)
    for name, entry in doc.morphisms.items():
        verdict = validate_morphism(entry.morphism)
        objects["morphisms"][name] = {"ok": bool(verdict), "reason": verdict.reason}
        ok = ok and bool(verdict)
    for name, entry in doc.problems.items():
        try:
            entry.build(doc)
            objects["problems"][name] = {"ok": True, "reason": ""}
        except ValueError as exc:
            objects["problems"][name] = {"ok": False, "reason": str(exc)}
            ok = False
    return {"objects": objects, "ok": ok}


def _corpus_paths(directory) -> list:
    root = Path(directory)
    if not root.is_dir():
        raise OSError(f"{directory} is not a directory")
    return sorted(root.glob("*.json"))


def cmd_validate(args) -> int:
    report_dir = ReportDir(args.figures, ["document", "kind", "name", "ok", "reason"]) if args.figures else None

    def render(stem, doc, rep):
        if report_dir is None:
            return
        report_dir.complex_figure(doc.complex, f"{_safe_name(stem)}_complex.png", title=stem)
        for kind in ("sheaves", "morphisms", "problems"):
            for name, entry in rep["objects"][kind].items():
                report_dir.row(stem, kind, name, entry["ok"], entry["reason"])

    if args.corpus:
        documents = {}
        parse_failed = invalid = False
        for path in _corpus_paths(args.corpus):
            try:
                doc = load(path)
            except (DocumentError, OSError) as exc:
                documents[path.name] = {"error": str(exc), "ok": False}
                parse_failed = True
                continue
            rep = _document_report(doc)
            documents[path.name] = rep
            invalid = invalid or not rep["ok"]
            render(path.stem, doc, rep)
        if report_dir:
            report_dir.finish()
        _emit({"documents": documents, "ok": not (parse_failed or invalid)})
        return 2 if parse_failed else (1 if invalid else 0)

    doc = load(args.path)
    rep = _document_report(doc)
    render(Path(args.path).stem, doc, rep)
    if report_dir:
        report_dir.finish()
    _emit(rep)
    return 0 if rep["ok"] else 1


def cmd_cohomology(args) -> int:
    doc = load(args.path)
    if args.sheaf not in doc.sheaves:
        raise ValueError(f"unknown sheaf {args.sheaf!r}")
    sheaf = doc.sheaves[args.sheaf]
    verdict = validate_sheaf(sheaf)
    if not verdict:
        raise ValueError(f"sheaf {args.sheaf!r} is invalid: {verdict.reason}")
    rep = cohomology(sheaf)
    if args.figures:
        stem = _safe_name(Path(args.path).stem)
        sheaf_tag = _safe_name(args.sheaf)
        report_dir = ReportDir(args.figures, ["degree", "cochain_dim", "rank_d", "dim_H"])
        report_dir.complex_figure(doc.complex, f"{stem}_complex.png", title=Path(args.path).stem)
        report_dir.dimension_figure(
            [(f"H{k}", rep.dim_h(k)) for k in rep.degrees],
            f"{stem}_{sheaf_tag}_dims.png",
            title=f"cohomology of {args.sheaf}",
        )
        for k in rep.degrees:
            report_dir.row(k, rep.cochain_dim(k), rep.ranks.get(k, 0), rep.dim_h(k))
        report_dir.finish()
    _emit(rep.to_json_dict())
    return 0


def _certificate_json(problem):
    return nyquist_check(problem).to_json_dict()


def cmd_sample_check(args) -> int:
    require = args.require_perfect
    report_dir = ReportDir(
        args.figures,
        ["document", "problem", "verdict", "h0_ambiguity", "h1_ambiguity", "induced_invertible"],
    ) if args.figures else None

    def run_one(stem, doc, name):
        problem = doc.build_problem(name)
        cert = nyquist_check(problem)
        if report_dir is not None:
            tag = f"{_safe_name(stem)}_{_safe_name(name)}"
            report_dir.complex_figure(
                doc.complex,
                f"{tag}_support.png",
                highlight=problem.support.all_faces(),
                title=f"{name}: sampled faces",
            )
            report_dir.dimension_figure(
                [("H0(A)", cert.h0_ambiguity), ("H1(A)", cert.h1_ambiguity)],
                f"{tag}_dims.png",
                title=f"{name}: {cert.verdict}",
            )
            report_dir.row(
                stem, name, cert.verdict, cert.h0_ambiguity, cert.h1_ambiguity, cert.induced_invertible
            )
        return cert

    if args.corpus:
        documents = {}
        parse_failed = build_failed = False
        all_perfect = True
        for path in _corpus_paths(args.corpus):
            try:
                doc = load(path)
            except (DocumentError, OSError) as exc:
                documents[path.name] = {"error": str(exc)}
                parse_failed = True
                continue
            certs = {}
            for name in doc.problems:
                try:
                    cert = run_one(path.stem, doc, name)
                except ValueError as exc:
                    certs[name] = {"error": str(exc)}
                    build_failed = True
                    continue
                certs[name] = cert.to_json_dict()
                all_perfect = all_perfect and cert.verdict == "perfect"
            documents[path.name] = certs
        if report_dir:
            report_dir.finish()
        verdict_fail = require and not all_perfect
        _emit({"documents": documents, "ok": not (parse_failed or build_failed or verdict_fail)})
        return 2 if parse_failed else (1 if build_failed or verdict_fail else 0)

    doc = load(args.path)
    if args.problem not in doc.problems:
        raise ValueError(f"unknown problem {args.problem!r}")
    cert = run_one(Path(args.path).stem, doc, args.problem)
    if report_dir:
        report_dir.finish()
    _emit(cert.to_json_dict())
    if require and cert.verdict != "perfect":
        return 1
    return 0


def cmd_reconstruct(args) -> int:
    doc = load(args.path)
    problem = doc.build_problem(args.problem)
    sample = load_sample(args.sample)
    result = reconstruct(problem, sample)
    if args.figures:
        from .document import assignment_to_json

        stem = _safe_name(Path(args.path).stem)
        tag = f"{stem}_{_safe_name(args.problem)}"
        report_dir = ReportDir(args.figures, ["face", "values"])
        report_dir.complex_figure(
            doc.complex,
            f"{tag}_reconstruct.png",
            highlight=problem.support.all_faces(),
            title=f"{args.problem}: {result.status}",
        )
        if result.section is not None:
            for key, values in sorted(assignment_to_json(result.section).items()):
                report_dir.row(key, " ".join(values))
        report_dir.finish()
    _emit(result.to_json_dict())
    return 0


def cmd_pl_analyze(args) -> int:
    doc = load(args.path)
    if args.graph not in doc.graphs:
        raise ValueError(f"unknown graph {args.graph!r}")
    graph = doc.graphs[args.graph]
    ys = [int(token) for token in args.y.split(",") if token.strip() != ""]
    rep = redundancy_dimension(graph, ys)
    out = {
        "med": _finite_or_inf(rep.radius),
        "h0_ply": rep.h0_ambiguity,
        "h1_a": rep.h1_ambiguity,
        "radius_agrees": (rep.radius <= 1) == (rep.h0_ambiguity == 0),
        "formula": rep.formula,
        "formula_applicable": rep.applicable,
        "formula_matches": rep.matches,
        "balance_holds": rep.balance_holds,
    }
    if args.figures:
        stem = _safe_name(Path(args.path).stem)
        tag = f"{stem}_{_safe_name(args.graph)}"
        report_dir = ReportDir(args.figures, ["key", "value"])
        report_dir.complex_figure(
            graph,
            f"{tag}_coverage.png",
            highlight=ys,
            title=f"{args.graph}: sampled vertices",
        )
        report_dir.dimension_figure(
            [("H0", rep.h0_ambiguity), ("H1", rep.h1_ambiguity)],
            f"{tag}_dims.png",
            title=f"{args.graph}: ambiguity and redundancy",
        )
        for key, value in out.items():
            report_dir.row(key, value)
        report_dir.finish()
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellsheaf",
        description="Exact cellular sheaf cohomology and sampling certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, figures=True):
        p.add_argument("--json", action="store_true", help="emit JSON (the default; kept for scripting)")
        if figures:
            p.add_argument("--figures", metavar="DIR", help="render PNG figures and report.csv into DIR")

    p = sub.add_parser("validate", help="validate every object in a document")
    p.add_argument("path", nargs="?", help="document file")
    p.add_argument("--corpus", metavar="DIR", help="validate every *.json in DIR instead")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="cohomology dimensions and sections of a named sheaf")
    p.add_argument("path", help="document file")
    p.add_argument("sheaf", help="sheaf name in the document")
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("sample-check", help="certify a sampling problem")
    p.add_argument("path", nargs="?", help="document file")
    p.add_argument("problem", nargs="?", help="problem name in the document")
    p.add_argument("--corpus", metavar="DIR", help="certify every problem of every *.json in DIR")
    p.add_argument(
        "--require-perfect",
        action="store_true",
        help="exit 1 unless every checked verdict is 'perfect'",
    )
    common(p)
    p.set_defaults(func=cmd_sample_check)

    p = sub.add_parser("reconstruct", help="solve for sections matching a sample")
    p.add_argument("path", help="document file")
    p.add_argument("problem", help="problem name in the document")
    p.add_argument("sample", help="sample file")
    common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("pl-analyze", help="coverage and redundancy of vertex sampling for PL data")
    p.add_argument("path", help="document file")
    p.add_argument("graph", help="graph name in the document")
    p.add_argument("--y", default="", metavar="V,V,...", help="sampled vertex ids, comma separated")
    common(p)
    p.set_defaults(func=cmd_pl_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "validate" and bool(args.path) == bool(args.corpus):
        parser.error("validate needs a document path or --corpus DIR (not both)")
    if args.command == "sample-check":
        if args.corpus and (args.path or args.problem):
            parser.error("--corpus replaces the path and problem arguments")
        if not args.corpus and not (args.path and args.problem):
            parser.error("sample-check needs a document path and a problem name, or --corpus DIR")
    try:
        return args.func(args)
    except DocumentError as exc:
        _emit({"error": str(exc)})
        return 2
    except OSError as exc:
        _emit({"error": str(exc)})
        return 2
    except ValueError as exc:
        _emit({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
