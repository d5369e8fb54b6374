"""Self-contained JSON documents for complexes, sheaves and samplings.

One file carries a base complex plus named sheaves, morphisms, sampling
problems, and optional plain graphs, so an analysis is reproducible from
a single artifact.  Decoding is strict: references must resolve, every
matrix entry must parse as an exact rational, and shapes must match the
stalk dimensions, or the document is rejected with a message naming the
offender.  Serialization is canonical (sorted keys, fixed indentation,
newline-terminated), so dump(load(text)) == text for canonical text.

Schema sketch (version 1):

    {
      "version": 1,
      "complex": [[0, 1], [0, 2], [1, 2]],          # maximal faces
      "sheaves": {"name": {"stalks": {"0": 2},      # face key -> dim
                           "restrictions": {"0->0,1": MATRIX}}},
      "morphisms": {"name": {"source": "f", "target": "s",
                             "components": {"0": MATRIX}}},
      "problems": {"name": {"sheaf": "f", "morphism": "m",
                            "support": [[0]]}},
      "graphs": {"name": {"vertices": [0, 1], "edges": [[0, 1]]}}
    }

where MATRIX is {"shape": [rows, cols], "entries": [["p/q", ...], ...]}.
Rationals travel as strings ("p" or "p/q"); zero-dimensional stalks and
zero-size matrices are omitted, as are zero morphism components.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import SimplicialComplex, as_face, build_complex
from .exactlin import Matrix
from .sampling import SamplingProblem
from .sheaf import Assignment, Sheaf, SheafMorphism

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9][0-9]*)?$")


class DocumentError(ValueError):
    """The text or structure of a document could not be decoded."""


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"{where}: booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise DocumentError(f"{where}: {value!r} is not an exact rational ('p' or 'p/q')")


def rational_to_str(x: Fraction) -> str:
    return str(x)


def face_key(face) -> str:
    return ",".join(str(v) for v in face)


def parse_face_key(key: str, where: str) -> tuple:
    parts = key.split(",")
    try:
        face = tuple(int(p) for p in parts)
    except ValueError:
        raise DocumentError(f"{where}: face key {key!r} is not comma-separated integers") from None
    if any(p != str(v) for p, v in zip(parts, face)):
        raise DocumentError(f"{where}: face key {key!r} is not in canonical form")
    try:
        return as_face(face)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def pair_key(a, b) -> str:
    return f"{face_key(a)}->{face_key(b)}"


def parse_pair_key(key: str, where: str) -> tuple:
    left, sep, right = key.partition("->")
    if not sep:
        raise DocumentError(f"{where}: pair key {key!r} lacks '->'")
    return parse_face_key(left, where), parse_face_key(right, where)


def matrix_to_json(m: Matrix) -> dict:
    return {
        "shape": [m.rows, m.cols],
        "entries": [[rational_to_str(x) for x in row] for row in m.to_rows()],
    }


def matrix_from_json(obj, where: str) -> Matrix:
    if not isinstance(obj, dict) or set(obj) != {"shape", "entries"}:
        raise DocumentError(f"{where}: a matrix needs exactly the keys 'shape' and 'entries'")
    shape = obj["shape"]
    if (
        not isinstance(shape, list)
        or len(shape) != 2
        or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 0 for n in shape)
    ):
        raise DocumentError(f"{where}: matrix shape must be a pair of non-negative integers")
    rows, cols = shape
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise DocumentError(f"{where}: expected {rows} entry rows")
    grid = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"{where}: entry row {i} must have {cols} values")
        grid.append([parse_rational(x, f"{where}, row {i}") for x in row])
    return Matrix(rows, cols, grid)


def assignment_to_json(s: Assignment) -> dict:
    return {
        face_key(face): [rational_to_str(x) for x in value] for face, value in s.items()
    }


def assignment_from_json(obj, where: str) -> Assignment:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: an assignment must be an object keyed by faces")
    values = {}
    for key, vec in obj.items():
        face = parse_face_key(key, where)
        if not isinstance(vec, list):
            raise DocumentError(f"{where}: value on {key!r} must be a list of rationals")
        values[face] = tuple(parse_rational(x, f"{where}, face {key}") for x in vec)
    return Assignment(values)


def sample_to_json(s: Assignment) -> dict:
    return {"sample": assignment_to_json(s), "version": SCHEMA_VERSION}


def sample_from_json(obj) -> Assignment:
    if not isinstance(obj, dict) or set(obj) != {"sample", "version"}:
        raise DocumentError("a sample document needs exactly the keys 'version' and 'sample'")
    if obj["version"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported sample document version {obj['version']!r}")
    return assignment_from_json(obj["sample"], "sample")


def loads_sample(text: str) -> Assignment:
    return sample_from_json(_parse_json(text))


def load_sample(path) -> Assignment:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_sample(fh.read())


@dataclass
class MorphismEntry:
    """A named morphism together with the names of its endpoints."""

    source: str
    target: str
    morphism: SheafMorphism


@dataclass
class ProblemEntry:
    """A sampling problem by reference: data sheaf name, morphism name,
    and the support subcomplex.  Surjectivity and naturality are checked
    when the problem is built, not at document load time."""

    sheaf: str
    morphism: str
    support: SimplicialComplex

    def build(self, document: "Document") -> SamplingProblem:
        entry = document.morphisms[self.morphism]
        return SamplingProblem(
            document.sheaves[self.sheaf],
            document.sheaves[entry.target],
            self.support,
            entry.morphism,
        )


@dataclass
class Document:
    """Validated contents of one document file."""

    complex: SimplicialComplex
    sheaves: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    problems: dict = field(default_factory=dict)
    graphs: dict = field(default_factory=dict)

    def build_problem(self, name: str) -> SamplingProblem:
        if name not in self.problems:
            raise ValueError(f"unknown problem {name!r}")
        return self.problems[name].build(self)

    def to_json_dict(self) -> dict:
        sheaves = {}
        for name, sheaf in self.sheaves.items():
            stalks = {
                face_key(f): sheaf.stalk_dim(f)
                for f in self.complex.all_faces()
                if sheaf.stalk_dim(f) > 0
            }
            restrictions = {}
            for a, b in self.complex.inclusion_pairs():
                if sheaf.stalk_dim(a) > 0 and sheaf.stalk_dim(b) > 0:
                    restrictions[pair_key(a, b)] = matrix_to_json(sheaf.restriction(a, b))
            sheaves[name] = {"restrictions": restrictions, "stalks": stalks}
        morphisms = {}
        for name, entry in self.morphisms.items():
            components = {}
            for face in self.complex.all_faces():
                comp = entry.morphism.component(face)
                if comp.rows > 0 and comp.cols > 0 and not comp.is_zero():
                    components[face_key(face)] = matrix_to_json(comp)
            morphisms[name] = {
                "components": components,
                "source": entry.source,
                "target": entry.target,
            }
        problems = {
            name: {
                "morphism": entry.morphism,
                "sheaf": entry.sheaf,
                "support": [list(f) for f in maximal_faces(entry.support)],
            }
            for name, entry in self.problems.items()
        }
        graphs = {
            name: {
                "edges": [list(e) for e in g.faces(1)],
                "vertices": list(g.vertices),
            }
            for name, g in self.graphs.items()
        }
        return {
            "complex": [list(f) for f in maximal_faces(self.complex)],
            "graphs": graphs,
            "morphisms": morphisms,
            "problems": problems,
            "sheaves": sheaves,
            "version": SCHEMA_VERSION,
        }


def maximal_faces(cx: SimplicialComplex) -> list:
    """Faces not strictly contained in any other face, in canonical order."""
    faces = cx.all_faces()
    out = []
    for f in faces:
        fset = set(f)
        if not any(len(g) > len(f) and fset <= set(g) for g in faces):
            out.append(f)
    return sorted(out, key=lambda f: (len(f), f))


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def _expect_object(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    return obj


def _expect_keys(obj: dict, where: str, required: set, optional: set = frozenset()):
    keys = set(obj)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise DocumentError(f"{where}: missing keys {sorted(missing)}")
    if unknown:
        raise DocumentError(f"{where}: unknown keys {sorted(unknown)}")


def _parse_face_list(obj, where: str) -> list:
    if not isinstance(obj, list):
        raise DocumentError(f"{where}: expected a list of faces")
    faces = []
    for i, f in enumerate(obj):
        if not isinstance(f, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in f
        ):
            raise DocumentError(f"{where}: face {i} must be a list of integers")
        faces.append(tuple(f))
    return faces


def _parse_name_table(obj, where: str) -> dict:
    table = _expect_object(obj, where)
    for name in table:
        if not isinstance(name, str) or not name:
            raise DocumentError(f"{where}: names must be non-empty strings")
    return table


def from_json_dict(raw) -> Document:
    top = _expect_object(raw, "document")
    _expect_keys(
        top,
        "document",
        {"version"},
        {"complex", "sheaves", "morphisms", "problems", "graphs"},
    )
    if top["version"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported document version {top['version']!r}")

    try:
        cx = build_complex(_parse_face_list(top.get("complex", []), "complex"))
    except ValueError as exc:
        raise DocumentError(f"complex: {exc}") from None

    sheaves = {}
    for name, body in _parse_name_table(top.get("sheaves", {}), "sheaves").items():
        where = f"sheaf {name!r}"
        body = _expect_object(body, where)
        _expect_keys(body, where, set(), {"stalks", "restrictions"})
        stalks = {}
        for key, dim in _expect_object(body.get("stalks", {}), f"{where} stalks").items():
            face = parse_face_key(key, f"{where} stalks")
            if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
                raise DocumentError(f"{where}: stalk dimension on {key!r} must be a non-negative integer")
            stalks[face] = dim
        restrictions = {}
        for key, mat in _expect_object(
            body.get("restrictions", {}), f"{where} restrictions"
        ).items():
            a, b = parse_pair_key(key, f"{where} restrictions")
            restrictions[(a, b)] = matrix_from_json(mat, f"{where}, restriction {key}")
        try:
            sheaves[name] = Sheaf(cx, stalks, restrictions)
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None

    morphisms = {}
    for name, body in _parse_name_table(top.get("morphisms", {}), "morphisms").items():
        where = f"morphism {name!r}"
        body = _expect_object(body, where)
        _expect_keys(body, where, {"source", "target"}, {"components"})
        src, tgt = body["source"], body["target"]
        for role, ref in (("source", src), ("target", tgt)):
            if ref not in sheaves:
                raise DocumentError(f"{where}: {role} references unknown sheaf {ref!r}")
        components = {}
        for key, mat in _expect_object(body.get("components", {}), f"{where} components").items():
            face = parse_face_key(key, f"{where} components")
            components[face] = matrix_from_json(mat, f"{where}, component {key}")
        try:
            morphism = SheafMorphism(sheaves[src], sheaves[tgt], components)
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None
        morphisms[name] = MorphismEntry(src, tgt, morphism)

    problems = {}
    for name, body in _parse_name_table(top.get("problems", {}), "problems").items():
        where = f"problem {name!r}"
        body = _expect_object(body, where)
        _expect_keys(body, where, {"sheaf", "morphism", "support"})
        sheaf_name, morph_name = body["sheaf"], body["morphism"]
        if sheaf_name not in sheaves:
            raise DocumentError(f"{where}: references unknown sheaf {sheaf_name!r}")
        if morph_name not in morphisms:
            raise DocumentError(f"{where}: references unknown morphism {morph_name!r}")
        if morphisms[morph_name].source != sheaf_name:
            raise DocumentError(
                f"{where}: morphism {morph_name!r} samples sheaf "
                f"{morphisms[morph_name].source!r}, not {sheaf_name!r}"
            )
        generators = _parse_face_list(body["support"], f"{where} support")
        try:
            support = cx.closed_subcomplex(generators)
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None
        problems[name] = ProblemEntry(sheaf_name, morph_name, support)

    graphs = {}
    for name, body in _parse_name_table(top.get("graphs", {}), "graphs").items():
        where = f"graph {name!r}"
        body = _expect_object(body, where)
        _expect_keys(body, where, {"vertices", "edges"})
        vertices = body["vertices"]
        if not isinstance(vertices, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in vertices
        ):
            raise DocumentError(f"{where}: vertices must be a list of integers")
        edges = _parse_face_list(body["edges"], f"{where} edges")
        try:
            g = build_complex([(v,) for v in vertices] + edges)
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None
        if not g.is_graph:
            raise DocumentError(f"{where}: edges must have exactly two vertices")
        graphs[name] = g

    return Document(cx, sheaves, morphisms, problems, graphs)


def loads(text: str) -> Document:
    return from_json_dict(_parse_json(text))


def load(path) -> Document:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(document: Document) -> str:
    return canonical_json(document.to_json_dict())


def dump(document: Document, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(document))


def canonical_json(obj) -> str:
    """The one serialization used everywhere: sorted keys, two-space
    indentation, trailing newline.  Byte-identical output is part of the
    interface contract."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
