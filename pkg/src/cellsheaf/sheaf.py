"""Cellular sheaves on simplicial complexes.

A sheaf assigns a finite-dimensional rational vector space to every face
and a restriction matrix to every inclusion of faces, functorially: the
restriction along a composite inclusion equals the composite of the
restrictions.  Restrictions are stored for every inclusion pair, not just
codimension 1, and the composition law is checked rather than assumed.

Zero-dimensional stalks are first-class: their restriction matrices have
a zero dimension and there is exactly one such matrix per shape, so those
maps may be omitted by builders and are filled in automatically.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, as_face, is_subcomplex
from .exactlin import Matrix, _coerce


@dataclass
class Verdict:
    """Boolean check outcome with a reason and a finite witness."""

    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


class Sheaf:
    """Stalk dimensions plus restriction matrices over a base complex.

    stalk_dims maps faces to dimensions; faces left out get dimension 0.
    restrictions maps inclusion pairs (a, b), a strictly inside b, to a
    stalk_dim(b) x stalk_dim(a) matrix.  Pairs where either stalk is
    zero-dimensional may be omitted.  Instances are immutable.
    """

    __slots__ = ("base", "_dims", "_restrictions")

    def __init__(self, base: SimplicialComplex, stalk_dims, restrictions):
        self.base = base
        dims = {}
        for face, d in stalk_dims.items():
            face = as_face(face)
            if face not in base:
                raise ValueError(f"stalk given for {face!r}, which is not a face of the base")
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"stalk dimension for {face!r} must be a non-negative integer")
            dims[face] = d
        self._dims = {f: dims.get(f, 0) for f in base.all_faces()}

        rest = {}
        pair_set = set(base.inclusion_pairs())
        for (a, b), m in restrictions.items():
            a, b = as_face(a), as_face(b)
            if (a, b) not in pair_set:
                raise ValueError(f"restriction given for {a!r} -> {b!r}, which is not an inclusion")
            if not isinstance(m, Matrix):
                raise TypeError(f"restriction {a!r} -> {b!r} must be a Matrix")
            if m.rows != self._dims[b] or m.cols != self._dims[a]:
                raise ValueError(
                    f"restriction {a!r} -> {b!r} has shape ({m.rows}, {m.cols}), "
                    f"expected ({self._dims[b]}, {self._dims[a]})"
                )
            rest[(a, b)] = m
        for a, b in base.inclusion_pairs():
            if (a, b) not in rest:
                da, db = self._dims[a], self._dims[b]
                if da and db:
                    raise ValueError(f"missing restriction for {a!r} -> {b!r}")
                rest[(a, b)] = Matrix.zeros(db, da)
        self._restrictions = rest

    @classmethod
    def from_codim1(cls, base: SimplicialComplex, stalk_dims, codim1_restrictions) -> "Sheaf":
        """Build a sheaf from codimension-1 restrictions only.

        Composite restrictions are filled in by composing along the first
        intermediate face in canonical order; validate_sheaf afterwards
        confirms the result is path independent.
        """
        rest = dict(codim1_restrictions)
        dims = {as_face(f): d for f, d in stalk_dims.items()}

        def dim_of(face):
            return dims.get(face, 0)

        full = {}
        for a, b in base.inclusion_pairs():
            gap = len(b) - len(a)
            if gap == 1:
                m = rest.get((a, b))
                if m is None:
                    if dim_of(a) and dim_of(b):
                        raise ValueError(f"missing codimension-1 restriction {a!r} -> {b!r}")
                    m = Matrix.zeros(dim_of(b), dim_of(a))
                full[(a, b)] = m
        for gap in range(2, base.dimension + 2):
            for a, b in base.inclusion_pairs():
                if len(b) - len(a) != gap:
                    continue
                mid = None
                for i in range(len(b)):
                    m = b[:i] + b[i + 1:]
                    if set(a) <= set(m):
                        mid = m
                        break
                full[(a, b)] = full[(mid, b)] @ full[(a, mid)]
        return cls(base, dims, full)

    def stalk_dim(self, face) -> int:
        face = as_face(face)
        try:
            return self._dims[face]
        except KeyError:
            raise ValueError(f"{face!r} is not a face of the base") from None

    def restriction(self, a, b) -> Matrix:
        a, b = as_face(a), as_face(b)
        if a == b:
            return Matrix.identity(self.stalk_dim(a))
        try:
            return self._restrictions[(a, b)]
        except KeyError:
            raise ValueError(f"{a!r} -> {b!r} is not an inclusion of faces of the base") from None

    def total_dim(self, k: int) -> int:
        return sum(self._dims[f] for f in self.base.faces(k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sheaf):
            return NotImplemented
        return (
            self.base == other.base
            and self._dims == other._dims
            and self._restrictions == other._restrictions
        )

    def __repr__(self) -> str:
        return f"Sheaf(base={self.base!r})"


def validate_sheaf(f: Sheaf) -> Verdict:
    """Check shapes and the composition law on every inclusion chain.

    Returns the first violated chain (a, b, c) as the witness on failure.
    On a graph there are no chains, so any shape-correct sheaf is valid.
    """
    for a, b in f.base.inclusion_pairs():
        m = f.restriction(a, b)
        if m.rows != f.stalk_dim(b) or m.cols != f.stalk_dim(a):
            return Verdict(False, f"restriction {a!r} -> {b!r} has the wrong shape", (a, b))
    for a, b, c in f.base.inclusion_chains():
        if f.restriction(b, c) @ f.restriction(a, b) != f.restriction(a, c):
            return Verdict(
                False,
                f"composition failure along {a!r} -> {b!r} -> {c!r}",
                (a, b, c),
            )
    return Verdict(True)


def constant_sheaf(base: SimplicialComplex, dim: int = 1) -> Sheaf:
    """The sheaf with the same stalk everywhere and identity restrictions."""
    if dim < 0:
        raise ValueError("stalk dimension must be non-negative")
    dims = {f: dim for f in base.all_faces()}
    rest = {(a, b): Matrix.identity(dim) for a, b in base.inclusion_pairs()}
    return Sheaf(base, dims, rest)


class Assignment:
    """A choice of stalk value on a set of faces.

    Values are tuples of Fractions whose lengths must match the stalk
    dimensions of whatever sheaf the assignment is used with.
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        vals = {}
        for face, vec in values.items():
            vals[as_face(face)] = tuple(_coerce(x) for x in vec)
        self._values = vals

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._values, key=lambda f: (len(f), f)))

    def __getitem__(self, face) -> tuple:
        return self._values[as_face(face)]

    def __contains__(self, face) -> bool:
        return as_face(face) in self._values

    def items(self):
        return ((f, self._values[f]) for f in self.support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Assignment):
            return NotImplemented
        return self._values == other._values

    def is_zero(self) -> bool:
        return all(not x for vec in self._values.values() for x in vec)

    def __add__(self, other: "Assignment") -> "Assignment":
        if set(self._values) != set(other._values):
            raise ValueError("assignments have different supports")
        return Assignment(
            {f: tuple(x + y for x, y in zip(v, other._values[f])) for f, v in self._values.items()}
        )

    def scaled(self, c) -> "Assignment":
        c = _coerce(c)
        return Assignment({f: tuple(c * x for x in v) for f, v in self._values.items()})

    def __repr__(self) -> str:
        return f"Assignment(on {len(self._values)} faces)"


def is_section(f: Sheaf, s: Assignment) -> Verdict:
    """Whether s is compatible with every restriction inside its support.

    An assignment supported on all of the base that passes this check is
    exactly a global section.  Values of the wrong length are errors, not
    verdicts.
    """
    for face, vec in s.items():
        if face not in f.base:
            raise ValueError(f"assignment value on {face!r}, which is not a face of the base")
        if len(vec) != f.stalk_dim(face):
            raise ValueError(
                f"value on {face!r} has length {len(vec)}, stalk dimension is {f.stalk_dim(face)}"
            )
    support = set(s.support)
    for a, b in f.base.inclusion_pairs():
        if a in support and b in support:
            if f.restriction(a, b).apply(s[a]) != s[b]:
                return Verdict(False, f"restriction {a!r} -> {b!r} disagrees with the values", (a, b))
    return Verdict(True)


class SheafMorphism:
    """Stalkwise linear maps between two sheaves on the same base.

    components maps faces to target_dim x source_dim matrices; missing
    components default to zero maps.  Shape problems are construction
    errors, naturality is checked by validate_morphism.
    """

    __slots__ = ("source", "target", "_components")

    def __init__(self, source: Sheaf, target: Sheaf, components):
        if source.base != target.base:
            raise ValueError("source and target live on different base complexes")
        self.source = source
        self.target = target
        comps = {}
        for face, m in components.items():
            face = as_face(face)
            if face not in source.base:
                raise ValueError(f"component on {face!r}, which is not a face of the base")
            if m.rows != target.stalk_dim(face) or m.cols != source.stalk_dim(face):
                raise ValueError(
                    f"component on {face!r} has shape ({m.rows}, {m.cols}), expected "
                    f"({target.stalk_dim(face)}, {source.stalk_dim(face)})"
                )
            comps[face] = m
        for face in source.base.all_faces():
            if face not in comps:
                comps[face] = Matrix.zeros(target.stalk_dim(face), source.stalk_dim(face))
        self._components = comps

    def component(self, face) -> Matrix:
        face = as_face(face)
        try:
            return self._components[face]
        except KeyError:
            raise ValueError(f"{face!r} is not a face of the base") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SheafMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._components == other._components
        )

    def __repr__(self) -> str:
        return "SheafMorphism()"


def validate_morphism(f: SheafMorphism) -> Verdict:
    """Check the naturality square on every inclusion pair.

    Returns the first failing inclusion (a, b) as the witness.
    """
    src, tgt = f.source, f.target
    for a, b in src.base.inclusion_pairs():
        left = f.component(b) @ src.restriction(a, b)
        right = tgt.restriction(a, b) @ f.component(a)
        if left != right:
            return Verdict(False, f"naturality fails on {a!r} -> {b!r}", (a, b))
    return Verdict(True)


def apply_morphism(f: SheafMorphism, s: Assignment) -> Assignment:
    """Stalkwise image of an assignment under a morphism."""
    return Assignment({face: f.component(face).apply(vec) for face, vec in s.items()})


def identity_morphism(f: Sheaf) -> SheafMorphism:
    comps = {face: Matrix.identity(f.stalk_dim(face)) for face in f.base.all_faces()}
    return SheafMorphism(f, f, comps)


def zero_morphism(source: Sheaf, target: Sheaf) -> SheafMorphism:
    return SheafMorphism(source, target, {})


def restrict_to_subcomplex(f: Sheaf, y: SimplicialComplex) -> tuple:
    """The quotient sheaf that keeps the stalks of f on y and kills the
    rest, together with the canonical surjection onto it.

    Because y is closed, zeroing the stalks off y leaves every naturality
    square intact, so the projection really is a morphism.  Returns
    (sheaf, surjection).
    """
    if not is_subcomplex(f.base, y):
        raise ValueError("the subcomplex has faces outside the base")
    dims = {face: f.stalk_dim(face) for face in y.all_faces()}
    rest = {}
    for a, b in f.base.inclusion_pairs():
        if a in y and b in y:
            rest[(a, b)] = f.restriction(a, b)
    quotient = Sheaf(f.base, dims, rest)
    comps = {face: Matrix.identity(dims[face]) for face in y.all_faces()}
    surjection = SheafMorphism(f, quotient, comps)
    return quotient, surjection


def restrict_base(f: Sheaf, sub: SimplicialComplex) -> Sheaf:
    """The sheaf f viewed on a closed subcomplex as its own base.

    Unlike restrict_to_subcomplex this changes the underlying complex and
    forgets the faces outside it entirely.
    """
    if not is_subcomplex(f.base, sub):
        raise ValueError("the subcomplex has faces outside the base")
    dims = {face: f.stalk_dim(face) for face in sub.all_faces()}
    rest = {}
    for a, b in sub.inclusion_pairs():
        rest[(a, b)] = f.restriction(a, b)
    return Sheaf(sub, dims, rest)
