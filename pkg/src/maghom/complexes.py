"""Simplicial complexes, augmented face posets and their Hasse-diagram graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .chains import SparseIntMatrix
from .graph import Graph
from .homology import HomologyGroup
from .linalg import smith_normal_form

Face = tuple[int, ...]


class ComplexError(ValueError):
    pass


class SimplicialComplex:
    """Downward closure of a list of facets.  Faces are sorted vertex tuples;
    the empty face ``()`` is included."""

    __slots__ = ("facets", "faces", "dim", "vertices")

    def __init__(self, facets: Iterable[Iterable[int]]):
        fs = {tuple(sorted(set(int(v) for v in f))) for f in facets}
        fs.discard(())
        if not fs:
            raise ComplexError("complex needs at least one nonempty facet")
        # keep only maximal faces
        maximal = [f for f in fs if not any(len(g) > len(f) and set(f) <= set(g) for g in fs)]
        self.facets: tuple[Face, ...] = tuple(sorted(maximal, key=lambda f: (len(f), f)))
        faces: set[Face] = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                faces.update(combinations(f, r))
        self.faces: tuple[Face, ...] = tuple(sorted(faces, key=lambda f: (len(f), f)))
        self.dim = max(len(f) for f in self.facets) - 1
        self.vertices = tuple(sorted({v for f in self.facets for v in f}))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, facets={len(self.facets)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self.faces if len(f) == d + 1]

    def f_vector(self) -> list[int]:
        return [len(self.faces_of_dim(d)) for d in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))

    @property
    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets)

    def to_json(self) -> dict:
        return {"facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(data["facets"])
        except (KeyError, TypeError) as exc:
            raise ComplexError(f"malformed complex JSON: {exc}") from exc


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(facets)


# -- built-in complexes ------------------------------------------------------------

def simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex([range(m + 1)])


def sphere_boundary(m: int) -> SimplicialComplex:
    """Boundary of the (m+1)-simplex, an m-sphere."""
    return SimplicialComplex(combinations(range(m + 2), m + 1))


# 6-vertex projective plane: the antipodal quotient of the icosahedron.
RP2_FACETS: tuple[Face, ...] = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


def rp2() -> SimplicialComplex:
    return SimplicialComplex(RP2_FACETS)


BUILTIN = {
    "rp2": rp2,
    "simplex1": lambda: simplex(1),
    "simplex2": lambda: simplex(2),
    "simplex3": lambda: simplex(3),
    "sphere1": lambda: sphere_boundary(1),
    "sphere2": lambda: sphere_boundary(2),
    "sphere3": lambda: sphere_boundary(3),
}


# -- augmented face poset and the Hasse-diagram graph -----------------------------

@dataclass(frozen=True)
class AugmentedPoset:
    """Faces of K (the empty face is the bottom), plus an adjoined top when K
    has more than one facet.  ``elements[i]`` is a face tuple or ``None`` for
    the adjoined top; ``covers`` lists Hasse edges ``(lower, upper)``."""

    elements: tuple[Face | None, ...]
    covers: tuple[tuple[int, int], ...]
    bottom: int
    top: int
    top_adjoined: bool

    def graph(self) -> Graph:
        return Graph(len(self.elements), self.covers)

    def longest_chain(self) -> int:
        """Length (number of covers) of a longest bottom-to-top chain."""
        up: dict[int, list[int]] = {}
        for a, b in self.covers:
            up.setdefault(a, []).append(b)
        best = {self.top: 0}
        # elements are listed in increasing rank, so reverse order is topological
        for i in reversed(range(len(self.elements))):
            if i == self.top:
                continue
            nxt = [best[j] + 1 for j in up.get(i, []) if j in best]
            if nxt:
                best[i] = max(nxt)
        return best[self.bottom]


def augmented_poset(K: SimplicialComplex) -> AugmentedPoset:
    elements: list[Face | None] = list(K.faces)
    index = {f: i for i, f in enumerate(elements)}
    covers = []
    for f in K.faces:
        if f:
            for i in range(len(f)):
                covers.append((index[f[:i] + f[i + 1:]], index[f]))
    top_adjoined = len(K.facets) > 1
    if top_adjoined:
        elements.append(None)
        top = len(elements) - 1
        covers += [(index[f], top) for f in K.facets]
    else:
        top = index[K.facets[0]]
    return AugmentedPoset(tuple(elements), tuple(sorted(covers)), index[()], top, top_adjoined)


def ky_graph(K: SimplicialComplex) -> Graph:
    """Underlying graph of the Hasse diagram of the augmented face poset.

    Vertex numbering follows the poset: the empty face is 0, then faces by
    dimension and lexicographically, then the adjoined top (if any).
    """
    if not K.is_pure:
        raise ComplexError("Hasse-diagram construction needs a pure complex")
    return augmented_poset(K).graph()


def ky_bigrading_length(K: SimplicialComplex) -> int:
    """Distance from bottom to top in the Hasse graph."""
    P = augmented_poset(K)
    return P.graph().dist[P.bottom][P.top]


# -- stellar subdivision --------------------------------------------------------------

def pachner_subdivide(K: SimplicialComplex, facet: Sequence[int]) -> SimplicialComplex:
    """Replace a top-dimensional facet by the cone over its boundary
    (new apex = next free vertex index)."""
    f = tuple(sorted(facet))
    if f not in K.facets or len(f) != K.dim + 1:
        raise ComplexError(f"{f} is not a top-dimensional facet")
    apex = max(K.vertices) + 1
    new = [g for g in K.facets if g != f]
    new += [tuple(sorted(f[:i] + f[i + 1:] + (apex,))) for i in range(len(f))]
    return SimplicialComplex(new)


# -- reduced simplicial homology -----------------------------------------------------

def simplicial_boundary(K: SimplicialComplex, d: int) -> SparseIntMatrix:
    """Oriented boundary C_d -> C_{d-1}; d = 0 is the augmentation to C_{-1} = Z."""
    src = K.faces_of_dim(d)
    tgt = K.faces_of_dim(d - 1)
    index = {f: i for i, f in enumerate(tgt)}
    cols = []
    for f in src:
        col = {}
        for i in range(len(f)):
            col[index[f[:i] + f[i + 1:]]] = (-1) ** i
        cols.append(col)
    return SparseIntMatrix(len(tgt), len(src), cols)


def complex_homology(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    """Reduced integral homology in degrees 0..dim."""
    snf = {d: smith_normal_form(simplicial_boundary(K, d)) for d in range(K.dim + 2)}
    out = {}
    for d in range(K.dim + 1):
        nd = len(K.faces_of_dim(d))
        out[d] = HomologyGroup(nd - snf[d].rank - snf[d + 1].rank, snf[d + 1].torsion)
    return out
