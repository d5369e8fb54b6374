"""Finite abstract simplicial complexes with ordered faces.

A face is a tuple of distinct vertex identifiers in strictly ascending
order.  Input that is unsorted or has repeats is rejected rather than
normalized: equality of faces stays purely syntactic and no orientation
bookkeeping is ever needed.  The signed incidence number of a
codimension-1 face pair is (-1)^i where i is the index of the deleted
vertex; every boundary-style computation in the package uses exactly this
convention.
"""

from itertools import combinations

Face = tuple
IncidenceSign = int

DEFAULT_MAX_FACES = 100_000


def as_face(vertices) -> Face:
    """Validate and return a face tuple.

    Vertices must be non-negative integers, pairwise distinct, and given
    in ascending order.
    """
    face = tuple(vertices)
    if not face:
        raise ValueError("the empty face is not allowed")
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"face {face!r}: vertices must be non-negative integers")
    for a, b in zip(face, face[1:]):
        if a == b:
            raise ValueError(f"face {face!r}: duplicate vertex {a}")
        if a > b:
            raise ValueError(f"face {face!r}: vertices must be in ascending order")
    return face


def face_dim(face: Face) -> int:
    return len(face) - 1


def incidence(b, a) -> IncidenceSign:
    """Signed incidence number [b : a].

    (-1)^i if a is b with its i-th vertex deleted (0-indexed), 0 whenever
    a is not a codimension-1 face of b.
    """
    b = as_face(b)
    a = as_face(a)
    if len(a) + 1 != len(b):
        return 0
    for i in range(len(b)):
        if b[:i] + b[i + 1:] == a:
            return -1 if i % 2 else 1
    return 0


class SimplicialComplex:
    """An abstract simplicial complex, closed under taking subsets.

    Build instances with :func:`build_complex` (or the graph helpers
    below); the constructor itself trusts its input to be closed.
    Instances are immutable, and every face listing is canonically
    ordered: by dimension, then lexicographically.
    """

    __slots__ = ("_faces", "_face_set", "_pairs", "_chains")

    def __init__(self, closed_faces):
        faces = set(closed_faces)
        by_dim = {}
        for f in faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self._faces = {k: tuple(sorted(v)) for k, v in sorted(by_dim.items())}
        self._face_set = frozenset(faces)
        self._pairs = None
        self._chains = None

    @property
    def dimension(self) -> int:
        """Largest face dimension, or -1 for the empty complex."""
        return max(self._faces, default=-1)

    def faces(self, k: int) -> tuple:
        """All k-dimensional faces, canonically ordered."""
        return self._faces.get(k, ())

    def all_faces(self) -> tuple:
        return tuple(f for k in sorted(self._faces) for f in self._faces[k])

    @property
    def vertices(self) -> tuple:
        return tuple(f[0] for f in self.faces(0))

    @property
    def edges(self) -> tuple:
        return self.faces(1)

    def __contains__(self, face) -> bool:
        return tuple(face) in self._face_set

    def __len__(self) -> int:
        return len(self._face_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._face_set == other._face_set

    def __repr__(self) -> str:
        counts = ", ".join(f"{len(v)}x{k}d" for k, v in self._faces.items())
        return f"SimplicialComplex({counts or 'empty'})"

    @property
    def is_graph(self) -> bool:
        return self.dimension <= 1

    def skeleton(self, k: int) -> "SimplicialComplex":
        """The closed subcomplex of all faces of dimension <= k."""
        if k < 0:
            raise ValueError(f"skeleton dimension must be non-negative, got {k}")
        return SimplicialComplex(f for f in self._face_set if len(f) - 1 <= k)

    def closed_subcomplex(self, generators) -> "SimplicialComplex":
        """Closure of the given faces inside this complex."""
        closed = set()
        for g in generators:
            face = as_face(g)
            if face not in self._face_set:
                raise ValueError(f"generator {face!r} is not a face of the complex")
            for k in range(1, len(face) + 1):
                closed.update(combinations(face, k))
        return SimplicialComplex(closed)

    def vertex_subcomplex(self, vertex_ids) -> "SimplicialComplex":
        """Closed subcomplex consisting of the given vertices alone."""
        return self.closed_subcomplex((v,) for v in vertex_ids)

    def vertex_degree(self, v) -> int:
        """Number of edges containing a vertex.  Only defined on graphs."""
        if self.dimension >= 2:
            raise ValueError("vertex degree is only defined on complexes of dimension <= 1")
        face = as_face(v if isinstance(v, tuple) else (v,))
        if face not in self._face_set:
            raise ValueError(f"{face!r} is not a vertex of the complex")
        vid = face[0]
        return sum(1 for e in self.faces(1) if vid in e)

    def inclusion_pairs(self) -> tuple:
        """Every proper face inclusion (a, b), a strictly inside b,
        enumerated deterministically."""
        if self._pairs is None:
            pairs = []
            for b in self.all_faces():
                for k in range(1, len(b)):
                    for a in combinations(b, k):
                        pairs.append((a, b))
            self._pairs = tuple(pairs)
        return self._pairs

    def inclusion_chains(self) -> tuple:
        """Every chain a < b < c of proper inclusions."""
        if self._chains is None:
            chains = []
            for c in self.all_faces():
                for kb in range(2, len(c)):
                    for b in combinations(c, kb):
                        for ka in range(1, len(b)):
                            for a in combinations(b, ka):
                                chains.append((a, b, c))
            self._chains = tuple(chains)
        return self._chains


def build_complex(faces, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Closure of the given faces as a SimplicialComplex.

    Faces may be given redundantly and in any order; each individual face
    must be ascending with distinct non-negative integer vertices.  The
    total face count of the closure is bounded by max_faces.
    """
    closed = set()
    for f in faces:
        face = as_face(f)
        # a single face closes to 2^len - 1 subsets; refuse before expanding
        if 2 ** len(face) - 1 > max_faces:
            raise ValueError(f"complex exceeds the configured bound of {max_faces} faces")
        for k in range(1, len(face) + 1):
            closed.update(combinations(face, k))
        if len(closed) > max_faces:
            raise ValueError(f"complex exceeds the configured bound of {max_faces} faces")
    return SimplicialComplex(closed)


def is_subcomplex(big: SimplicialComplex, small: SimplicialComplex) -> bool:
    return all(f in big for f in small.all_faces())


def path_graph(n: int) -> SimplicialComplex:
    """Path with vertices 0..n."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    if n == 0:
        return build_complex([(0,)])
    return build_complex((i, i + 1) for i in range(n))


def cycle_graph(n: int) -> SimplicialComplex:
    """Cycle with vertices 0..n-1; needs n >= 3 to stay simple."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return build_complex(edges)


def star_graph(leaves: int) -> SimplicialComplex:
    """Star with center 0 and leaves 1..leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return build_complex((0, i) for i in range(1, leaves + 1))


def complete_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    if n == 1:
        return build_complex([(0,)])
    return build_complex(combinations(range(n), 2))
