"""Cochain complexes and sheaf cohomology.

The degree-k cochain space of a sheaf is the direct sum of its stalks
over the k-faces, in canonical face order.  The coboundary sends a
k-cochain s to the (k+1)-cochain whose value on b is the signed sum of
restricted values sum_a [b:a] F(a -> b) s(a), with [b:a] the deletion
sign from the complexes module.  H^k is ker d^k / im d^(k-1), reported as
an exact dimension.

Degree zero is special: a vertex cochain in ker d^0 extends uniquely to a
compatible value on every face (push it along any restriction; the edge
constraints make all choices agree), so H^0 representatives decode to
honest global sections and are reported that way.
"""

from fractions import Fraction
from functools import cached_property

from .exactlin import Matrix, block_diagonal, solve_matrix
from .sheaf import Assignment, Sheaf, SheafMorphism

_ZERO = Fraction(0)


class CochainSpace:
    """Bookkeeping for one direct-sum cochain space.

    Records the k-faces in canonical order with their stalk dimensions
    and offsets, and converts between flat coordinate vectors and
    per-face values.
    """

    __slots__ = ("degree", "faces", "dims", "offsets", "total_dim")

    def __init__(self, sheaf: Sheaf, degree: int):
        self.degree = degree
        self.faces = sheaf.base.faces(degree)
        self.dims = tuple(sheaf.stalk_dim(f) for f in self.faces)
        offsets = []
        total = 0
        for d in self.dims:
            offsets.append(total)
            total += d
        self.offsets = tuple(offsets)
        self.total_dim = total

    def block(self, face) -> tuple:
        """(start, stop) slice of a face's coordinates in the flat vector."""
        i = self.faces.index(face)
        return self.offsets[i], self.offsets[i] + self.dims[i]

    def split(self, vector) -> dict:
        if len(vector) != self.total_dim:
            raise ValueError(f"vector of length {len(vector)} does not fit C^{self.degree}")
        out = {}
        for face, off, d in zip(self.faces, self.offsets, self.dims):
            out[face] = tuple(vector[off:off + d])
        return out

    def join(self, values) -> tuple:
        vec = []
        for face, d in zip(self.faces, self.dims):
            v = tuple(values[face])
            if len(v) != d:
                raise ValueError(f"value on {face!r} has length {len(v)}, expected {d}")
            vec.extend(v)
        return tuple(vec)


def cochain_space(sheaf: Sheaf, degree: int) -> CochainSpace:
    return CochainSpace(sheaf, degree)


def coboundary(sheaf: Sheaf, degree: int) -> Matrix:
    """The coboundary matrix d^k : C^k -> C^(k+1).

    Assembled blockwise: the (b, a) block is [b:a] times the restriction
    F(a -> b), where a runs over the faces obtained by deleting one
    vertex of b and the sign alternates with the deleted index.
    """
    if degree < 0:
        raise ValueError("coboundary degree must be non-negative")
    dom = CochainSpace(sheaf, degree)
    cod = CochainSpace(sheaf, degree + 1)
    data = [[_ZERO] * dom.total_dim for _ in range(cod.total_dim)]
    dom_offset = {f: off for f, off in zip(dom.faces, dom.offsets)}
    for b, row_off in zip(cod.faces, cod.offsets):
        for i in range(len(b)):
            a = b[:i] + b[i + 1:]
            sign = -1 if i % 2 else 1
            block = sheaf.restriction(a, b)
            col_off = dom_offset[a]
            for r in range(block.rows):
                target = data[row_off + r]
                brow = block._data[r]
                for c in range(block.cols):
                    x = brow[c]
                    if x:
                        target[col_off + c] = -x if sign < 0 else x
    return Matrix._raw(cod.total_dim, dom.total_dim, data)


def section_from_vertex_values(sheaf: Sheaf, vertex_values: dict) -> Assignment:
    """Extend compatible vertex values to a full assignment.

    The value on a face b is the restriction of the value at b's first
    vertex; for vertex data in ker d^0 this is independent of the choice.
    """
    values = {
        (k if isinstance(k, tuple) else (k,)): tuple(v) for k, v in vertex_values.items()
    }
    for v in sheaf.base.faces(0):
        if v not in values:
            raise ValueError(f"no value given for vertex {v[0]}")
    for k in range(1, sheaf.base.dimension + 1):
        for b in sheaf.base.faces(k):
            v = (b[0],)
            values[b] = sheaf.restriction(v, b).apply(values[v])
    return Assignment(values)


class CohomologyReport:
    """Exact cohomology dimensions of one sheaf, degree by degree.

    Dimensions come from ranks alone; kernel bases (and the global
    sections they decode to in degree zero) are computed lazily since
    most callers only need numbers.
    """

    def __init__(self, sheaf: Sheaf):
        self.sheaf = sheaf
        dim = sheaf.base.dimension
        self.degrees = tuple(range(dim + 1))
        self.spaces = {k: CochainSpace(sheaf, k) for k in self.degrees}
        self.d = {k: coboundary(sheaf, k) for k in self.degrees}
        self.ranks = {k: self.d[k].rank() for k in self.degrees}
        self.h = {}
        for k in self.degrees:
            below = self.ranks.get(k - 1, 0)
            self.h[k] = self.spaces[k].total_dim - self.ranks[k] - below

    def dim_h(self, k: int) -> int:
        return self.h.get(k, 0)

    def cochain_dim(self, k: int) -> int:
        space = self.spaces.get(k)
        return space.total_dim if space is not None else 0

    @cached_property
    def h0_basis(self) -> Matrix:
        """Basis of ker d^0 as matrix columns (coordinates in C^0)."""
        if 0 in self.d:
            return self.d[0].kernel_basis()
        return Matrix.zeros(0, 0)

    def h0_sections(self) -> list:
        """H^0 basis decoded to global sections of the sheaf."""
        if 0 not in self.spaces:
            return []
        space = self.spaces[0]
        out = []
        for j in range(self.h0_basis.cols):
            vertex_values = space.split(self.h0_basis.column(j))
            out.append(section_from_vertex_values(self.sheaf, vertex_values))
        return out

    def section_from_coefficients(self, coefficients) -> Assignment:
        """The global section with the given coordinates in the H^0 basis."""
        coeffs = list(coefficients)
        if len(coeffs) != self.h0_basis.cols:
            raise ValueError(f"expected {self.h0_basis.cols} coefficients, got {len(coeffs)}")
        vec = self.h0_basis.apply(coeffs) if coeffs else (_ZERO,) * self.cochain_dim(0)
        space = self.spaces.get(0)
        vertex_values = space.split(vec) if space is not None else {}
        return section_from_vertex_values(self.sheaf, vertex_values)

    def euler_cochain(self) -> int:
        return sum((-1) ** k * self.cochain_dim(k) for k in self.degrees)

    def euler_cohomology(self) -> int:
        return sum((-1) ** k * self.dim_h(k) for k in self.degrees)

    def to_json_dict(self, include_sections: bool = True) -> dict:
        from .document import assignment_to_json

        out = {"H": {str(k): self.dim_h(k) for k in self.degrees}}
        if include_sections:
            out["sections"] = [assignment_to_json(s) for s in self.h0_sections()]
        return out

    def __repr__(self) -> str:
        dims = ", ".join(f"h{k}={self.dim_h(k)}" for k in self.degrees)
        return f"CohomologyReport({dims or 'empty base'})"


def cohomology(sheaf: Sheaf) -> CohomologyReport:
    return CohomologyReport(sheaf)


def induced_h0_map(
    f: SheafMorphism,
    source_report: CohomologyReport | None = None,
    target_report: CohomologyReport | None = None,
) -> Matrix:
    """Matrix of the map H^0(source) -> H^0(target) induced by f.

    Applies the vertex components of f to the H^0 basis of the source and
    rewrites the images in the H^0 basis of the target.  Both rewrites
    are exact solves; failure of either one means f was not a morphism,
    which is raised as an internal-consistency error.
    """
    sr = source_report if source_report is not None else CohomologyReport(f.source)
    tr = target_report if target_report is not None else CohomologyReport(f.target)
    if not sr.degrees:
        return Matrix.zeros(tr.h0_basis.cols, 0)
    vertex_blocks = block_diagonal([f.component(v) for v in sr.spaces[0].faces])
    images = vertex_blocks @ sr.h0_basis
    if not (tr.d[0] @ images).is_zero():
        raise RuntimeError("image of a section is not a section; the morphism is not natural")
    coords = solve_matrix(tr.h0_basis, images)
    if coords is None:
        raise RuntimeError("section image left the section space; the morphism is not natural")
    return coords
