"""Sampling sheaves, ambiguity sheaves, and reconstruction certificates.

A sampling of a data sheaf F is a stalkwise-surjective morphism s onto a
sheaf S whose stalks vanish off a closed subcomplex Y.  The stalkwise
kernels of s assemble into the ambiguity sheaf A: its restriction along
a -> b is obtained by solving K_b X = F(a -> b) K_a exactly, where K_a,
K_b are the kernel bases.  The solve is always consistent for a genuine
morphism, and failure is raised as an internal error rather than patched.

The two cohomology dimensions of A are the whole story of the sampling:
dim H^0(A) counts independent unsampled section degrees of freedom
(ambiguity), dim H^1(A) counts sampling constraints beyond those needed
to pin sections down (redundancy).  Both zero means every sample of a
global section determines it, and reconstruction is a single exact solve.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, as_face, is_subcomplex, path_graph
from .exactlin import Matrix, solve, solve_matrix
from .cohomology import CohomologyReport, cohomology, induced_h0_map, section_from_vertex_values
from .sheaf import (
    Assignment,
    Sheaf,
    SheafMorphism,
    apply_morphism,
    constant_sheaf,
    is_section,
    restrict_base,
    restrict_to_subcomplex,
    validate_morphism,
)

_ZERO = Fraction(0)


def make_sampling_sheaf(base: SimplicialComplex, support: SimplicialComplex, v_dims) -> Sheaf:
    """A sheaf with the given stalk dimensions on the faces of a closed
    subcomplex, zero stalks elsewhere, and zero maps between degrees.

    v_dims is either a single dimension applied to every support face or
    a mapping from face to dimension.
    """
    if not is_subcomplex(base, support):
        raise ValueError("support has faces outside the base")
    if isinstance(v_dims, int):
        dims = {f: v_dims for f in support.all_faces()}
    else:
        dims = {as_face(f): d for f, d in v_dims.items()}
        for f in dims:
            if f not in support:
                raise ValueError(f"stalk dimension given for {f!r} outside the support")
    rest = {
        (a, b): Matrix.zeros(dims.get(b, 0), dims.get(a, 0))
        for a, b in base.inclusion_pairs()
    }
    return Sheaf(base, dims, rest)


class SamplingProblem:
    """A data sheaf together with a sampling morphism.

    Construction validates everything the theory needs: the sampling
    sheaf's stalks vanish off the support, the morphism is natural, and
    every component is surjective onto its sampling stalk.
    """

    __slots__ = ("sheaf", "sampling", "support", "morphism")

    def __init__(
        self,
        sheaf: Sheaf,
        sampling: Sheaf,
        support: SimplicialComplex,
        morphism: SheafMorphism,
    ):
        if morphism.source is not sheaf and morphism.source != sheaf:
            raise ValueError("morphism source is not the data sheaf")
        if morphism.target is not sampling and morphism.target != sampling:
            raise ValueError("morphism target is not the sampling sheaf")
        if not is_subcomplex(sheaf.base, support):
            raise ValueError("support has faces outside the base")
        for face in sheaf.base.all_faces():
            if face not in support and sampling.stalk_dim(face) != 0:
                raise ValueError(f"sampling stalk on {face!r} must vanish off the support")
        verdict = validate_morphism(morphism)
        if not verdict:
            raise ValueError(f"sampling morphism is not natural: {verdict.reason}")
        for face in sheaf.base.all_faces():
            comp = morphism.component(face)
            if comp.rank() != sampling.stalk_dim(face):
                raise ValueError(f"sampling component on {face!r} is not surjective")
        self.sheaf = sheaf
        self.sampling = sampling
        self.support = support
        self.morphism = morphism

    def __repr__(self) -> str:
        return f"SamplingProblem(support={self.support!r})"


def sampling_from_subcomplex(f: Sheaf, y: SimplicialComplex) -> SamplingProblem:
    """The full-stalk sampling of f on a closed subcomplex: the canonical
    surjection onto the quotient that keeps f's stalks on y."""
    quotient, surjection = restrict_to_subcomplex(f, y)
    return SamplingProblem(f, quotient, y, surjection)


@dataclass
class AmbiguitySheaf:
    """The stalkwise kernel of a sampling, with its inclusion into the
    data sheaf.  Stalk coordinates are kernel-basis coordinates; the
    inclusion components are the kernel bases themselves."""

    sheaf: Sheaf
    inclusion: SheafMorphism


def ambiguity_sheaf(problem: SamplingProblem) -> AmbiguitySheaf:
    f = problem.sheaf
    base = f.base
    kernels = {}
    dims = {}
    for face in base.all_faces():
        k = problem.morphism.component(face).kernel_basis()
        kernels[face] = k
        dims[face] = k.cols
        if f.stalk_dim(face) - problem.sampling.stalk_dim(face) != k.cols:
            raise RuntimeError(f"kernel dimension mismatch on {face!r}; sampling is inconsistent")
    rest = {}
    for a, b in base.inclusion_pairs():
        if dims[a] == 0 or f.stalk_dim(b) == 0:
            continue
        target = f.restriction(a, b) @ kernels[a]
        x = solve_matrix(kernels[b], target)
        if x is None:
            raise RuntimeError(
                f"restriction along {a!r} -> {b!r} does not preserve kernels; "
                "sampling is inconsistent"
            )
        rest[(a, b)] = x
    ambiguity = Sheaf(base, dims, rest)
    inclusion = SheafMorphism(ambiguity, f, kernels)
    return AmbiguitySheaf(ambiguity, inclusion)


def subsheaf_vanishing_on(f: Sheaf, y: SimplicialComplex) -> Sheaf:
    """The subsheaf of sections of f forced to zero on a closed
    subcomplex: the ambiguity sheaf of the canonical surjection."""
    return ambiguity_sheaf(sampling_from_subcomplex(f, y)).sheaf


VERDICT_PERFECT = "perfect"
VERDICT_AMBIGUOUS = "ambiguous"
VERDICT_REDUNDANT = "redundant"
VERDICT_AMBIGUOUS_REDUNDANT = "ambiguous+redundant"


@dataclass
class SamplingCertificate:
    """Verdict on a sampling problem with exact evidence.

    h0_ambiguity / h1_ambiguity -- dim H^0(A) and dim H^1(A)
    verdict            -- perfect / ambiguous / redundant / both
    ambiguity_witness  -- a nonzero unsampled global section of the data
                          sheaf (in data-sheaf coordinates) when ambiguous
    redundancy_ledger  -- the dimension count behind dim H^1(A)
    induced_h0         -- matrix of H^0(data) -> H^0(sampling)
    induced_invertible -- whether that matrix is a bijection
    """

    h0_ambiguity: int
    h1_ambiguity: int
    verdict: str
    ambiguity_witness: Assignment | None
    redundancy_ledger: dict
    induced_h0: Matrix
    induced_invertible: bool

    @property
    def perfect(self) -> bool:
        return self.verdict == VERDICT_PERFECT

    def to_json_dict(self) -> dict:
        from .document import assignment_to_json, matrix_to_json

        return {
            "verdict": self.verdict,
            "H_A": {"0": self.h0_ambiguity, "1": self.h1_ambiguity},
            "ambiguity_witness": (
                assignment_to_json(self.ambiguity_witness)
                if self.ambiguity_witness is not None
                else None
            ),
            "redundancy_ledger": self.redundancy_ledger,
            "induced_h0": matrix_to_json(self.induced_h0),
            "induced_invertible": self.induced_invertible,
        }


def nyquist_check(problem: SamplingProblem) -> SamplingCertificate:
    """Decide whether a sampling is perfect, ambiguous, redundant or both.

    Perfect means dim H^0(A) = dim H^1(A) = 0 for the ambiguity sheaf A;
    in that case the induced map on global sections is verified to be a
    bijection, so every sample determines a unique section.
    """
    amb = ambiguity_sheaf(problem)
    rep = cohomology(amb.sheaf)
    h0, h1 = rep.dim_h(0), rep.dim_h(1)
    if h0 == 0 and h1 == 0:
        verdict = VERDICT_PERFECT
    elif h1 == 0:
        verdict = VERDICT_AMBIGUOUS
    elif h0 == 0:
        verdict = VERDICT_REDUNDANT
    else:
        verdict = VERDICT_AMBIGUOUS_REDUNDANT

    witness = None
    if h0 > 0:
        witness = apply_morphism(amb.inclusion, rep.h0_sections()[0])

    ledger = {
        "c0_ambiguity": rep.cochain_dim(0),
        "c1_ambiguity": rep.cochain_dim(1),
        "rank_d0": rep.ranks.get(0, 0),
        "rank_d1": rep.ranks.get(1, 0),
    }

    induced = induced_h0_map(problem.morphism)
    invertible = induced.rows == induced.cols and induced.rank() == induced.rows
    if verdict == VERDICT_PERFECT and not invertible:
        raise RuntimeError("vanishing ambiguity cohomology without a section bijection")
    return SamplingCertificate(h0, h1, verdict, witness, ledger, induced, invertible)


@dataclass
class OversamplingReport:
    """Vanishing check for the subsheaf forced to zero on a skeleton."""

    degree: int
    dim: int
    ok: bool


def oversampling_check(f: Sheaf, k: int) -> OversamplingReport:
    """Check dim H^k of the subsheaf of f on the (k+1)-skeleton that
    vanishes on the k-skeleton.

    The degree-k cochain space of that subsheaf is zero outright, so a
    nonzero dimension here would expose an assembly bug rather than an
    interesting sheaf.
    """
    if k < 0:
        raise ValueError("skeleton degree must be non-negative")
    base = f.base
    upper = base.skeleton(min(k + 1, base.dimension)) if base.dimension >= 0 else base
    on_upper = restrict_base(f, upper)
    lower = upper.skeleton(min(k, upper.dimension)) if upper.dimension >= 0 else upper
    vanishing = subsheaf_vanishing_on(on_upper, lower)
    dim = cohomology(vanishing).dim_h(k)
    return OversamplingReport(k, dim, dim == 0)


@dataclass
class ObstructionReport:
    """Outcome of the injectivity obstruction check.

    If the subsheaf of data sections vanishing on the support has global
    sections, sampling cannot be injective on sections; the witness is
    such a section, checked to be nonzero and to sample to zero.
    """

    h0_vanishing: int
    obstructed: bool
    witness: Assignment | None
    witness_verified: bool

    def to_json_dict(self) -> dict:
        from .document import assignment_to_json

        return {
            "h0_vanishing": self.h0_vanishing,
            "obstructed": self.obstructed,
            "witness": assignment_to_json(self.witness) if self.witness is not None else None,
            "witness_verified": self.witness_verified,
        }


def obstruction_check(problem: SamplingProblem) -> ObstructionReport:
    f = problem.sheaf
    vanishing = subsheaf_vanishing_on(f, problem.support)
    h0 = cohomology(vanishing).dim_h(0)
    if h0 == 0:
        return ObstructionReport(0, False, None, False)
    rep_f = cohomology(f)
    induced = induced_h0_map(problem.morphism, source_report=rep_f)
    kernel = induced.kernel_basis()
    if kernel.cols == 0:
        return ObstructionReport(h0, True, None, False)
    witness = rep_f.section_from_coefficients(kernel.column(0))
    verified = (
        not witness.is_zero()
        and bool(is_section(f, witness))
        and apply_morphism(problem.morphism, witness).is_zero()
    )
    return ObstructionReport(h0, True, witness, verified)


@dataclass
class ReconstructionResult:
    """Solution of the sample-interpolation system.

    status is unique / ambiguous / inconsistent.  For unique, section is
    the reconstruction.  For ambiguous, section is one solution and
    freedom spans the solution set's direction space.  For inconsistent,
    certificate holds a row vector combining the constraints into
    0 = nonzero, proving no section fits the sample.
    """

    status: str
    section: Assignment | None
    freedom: list
    certificate: dict | None

    def to_json_dict(self) -> dict:
        from .document import assignment_to_json

        return {
            "status": self.status,
            "section": assignment_to_json(self.section) if self.section is not None else None,
            "freedom": [assignment_to_json(s) for s in self.freedom],
            "certificate": self.certificate,
        }


def sample_section(problem: SamplingProblem, section: Assignment) -> Assignment:
    """Apply the sampling morphism to a section and keep the values on
    the faces with nonzero sampling stalks."""
    image = apply_morphism(problem.morphism, section)
    return Assignment(
        {f: image[f] for f in image.support if problem.sampling.stalk_dim(f) > 0}
    )


def reconstruct(problem: SamplingProblem, sample: Assignment) -> ReconstructionResult:
    """Solve for the global sections of the data sheaf that produce the
    given sample.

    Stacks the section constraints (d^0 s = 0 over the vertex stalks)
    with the sampling constraints (component of the extended section
    equals the sample value on every supported face) and solves exactly.
    """
    f = problem.sheaf
    s_sheaf = problem.sampling
    expected = tuple(
        face for face in f.base.all_faces() if s_sheaf.stalk_dim(face) > 0
    )
    if sample.support != expected:
        raise ValueError(
            f"sample must cover exactly the sampled faces {[list(x) for x in expected]}"
        )
    for face in expected:
        if len(sample[face]) != s_sheaf.stalk_dim(face):
            raise ValueError(f"sample value on {face!r} has the wrong length")
    verdict = is_section(s_sheaf, sample)
    if not verdict:
        raise ValueError(f"sample is not a section of the sampling sheaf: {verdict.reason}")

    rep = cohomology(f)
    if not rep.degrees:
        return ReconstructionResult("unique", Assignment({}), [], None)
    space0 = rep.spaces[0]
    d0 = rep.d[0]
    rows = [list(r) for r in d0._data]
    rhs = [_ZERO] * d0.rows
    for face in expected:
        comp = problem.morphism.component(face)
        if len(face) == 1:
            block = comp
            col_off, _ = space0.block(face)
        else:
            v = (face[0],)
            block = comp @ f.restriction(v, face)
            col_off, _ = space0.block(v)
        for r in range(block.rows):
            row = [_ZERO] * space0.total_dim
            brow = block._data[r]
            for c in range(block.cols):
                if brow[c]:
                    row[col_off + c] = brow[c]
            rows.append(row)
            rhs.append(sample[face][r])

    system = Matrix._raw(len(rows), space0.total_dim, rows)
    result = solve(system, rhs)
    if not result.consistent:
        certificate = {
            "combination": [str(x) for x in result.certificate],
            "contradiction": str(sum(y * b for y, b in zip(result.certificate, rhs))),
        }
        return ReconstructionResult("inconsistent", None, [], certificate)
    particular = section_from_vertex_values(f, space0.split(result.particular))
    freedom = [
        section_from_vertex_values(f, space0.split(result.kernel.column(j)))
        for j in range(result.kernel.cols)
    ]
    status = "unique" if not freedom else "ambiguous"
    return ReconstructionResult(status, particular, freedom, None)


def polynomial_evaluation_problem(degree: int, length: int, sample_vertices) -> SamplingProblem:
    """Point-evaluation sampling of polynomial data on a path.

    The data sheaf is the constant sheaf of coefficient vectors of
    polynomials of degree <= degree on the path 0..length; the sampling
    evaluates the polynomial at each chosen vertex.  This is the desk
    scale version of classical equally-spaced sampling: dim H^0(A) = 0
    exactly when at least degree+1 points are sampled.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    base = path_graph(length)
    data = constant_sheaf(base, degree + 1)
    ys = sorted(set(int(v) for v in sample_vertices))
    for y in ys:
        if (y,) not in base:
            raise ValueError(f"sample vertex {y} is not on the path")
    support = base.vertex_subcomplex(ys)
    sampling = make_sampling_sheaf(base, support, 1)
    comps = {}
    for y in ys:
        comps[(y,)] = Matrix(1, degree + 1, [[Fraction(y) ** j for j in range(degree + 1)]])
    morphism = SheafMorphism(data, sampling, comps)
    return SamplingProblem(data, sampling, support, morphism)
