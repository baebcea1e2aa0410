"""Simplices, face-closed complexes, boundary matrices, Betti numbers.

Simplices are finite sets of non-negative integer vertex ids kept in
canonical (strictly increasing) form.  A complex stores its simplices
grouped by dimension in lexicographic order, which fixes the row and
column bases of every boundary matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .gf2 import Gf2Matrix


@dataclass(frozen=True, order=True)
class Simplex:
    """A non-empty finite vertex set; an n-simplex has n+1 vertices."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(sorted(self.vertices))
        if not verts:
            raise ValueError("a simplex needs at least one vertex")
        for v in verts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex {v!r} is not a non-negative integer")
        if any(a == b for a, b in zip(verts, verts[1:])):
            raise ValueError(f"duplicate vertices in {verts}")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def face(self, i: int) -> Simplex:
        """The codimension-1 face obtained by dropping the i-th vertex."""
        if self.dim < 1:
            raise ValueError("a 0-simplex has no faces")
        if not 0 <= i <= self.dim:
            raise IndexError(f"face index {i} out of range 0..{self.dim}")
        return Simplex(self.vertices[:i] + self.vertices[i + 1 :])

    def faces(self) -> tuple[Simplex, ...]:
        """All codimension-1 faces, in vertex-drop order."""
        return tuple(self.face(i) for i in range(self.dim + 1))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.vertices) + ")"


def is_complex(simplices: Iterable[Simplex]) -> bool:
    """True iff every non-empty proper subset of every member is a member."""
    return _missing_face(frozenset(simplices)) is None


def _missing_face(simplices: frozenset[Simplex]) -> Simplex | None:
    """A witness subset absent from the set, or None if face-closed."""
    for s in simplices:
        for size in range(1, len(s)):
            for verts in combinations(s.vertices, size):
                candidate = Simplex(verts)
                if candidate not in simplices:
                    return candidate
    return None


class SimplicialComplex:
    """A face-closed set of simplices with per-dimension ordered bases.

    Immutable after construction; all query methods are pure, so
    instances may be freely shared between threads.
    """

    def __init__(self, simplices: Iterable[Simplex]):
        members = frozenset(simplices)
        missing = _missing_face(members)
        if missing is not None:
            raise ValueError(f"not face-closed: missing face {missing}")
        self._simplices = members
        top = max((s.dim for s in members), default=-1)
        by_dim: list[list[Simplex]] = [[] for _ in range(top + 1)]
        for s in members:
            by_dim[s.dim].append(s)
        self._by_dim = tuple(tuple(sorted(group)) for group in by_dim)

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    @property
    def dim(self) -> int:
        """Top dimension; -1 for the empty complex."""
        return len(self._by_dim) - 1

    def n_simplices(self, n: int) -> tuple[Simplex, ...]:
        """The n-simplices in lexicographic order (the standard basis)."""
        if n < 0:
            raise ValueError(f"dimension must be >= 0, got {n}")
        if n >= len(self._by_dim):
            return ()
        return self._by_dim[n]

    def boundary_matrix(self, n: int) -> Gf2Matrix:
        """Matrix of the degree-n differential in the standard bases.

        Shape is |S_{n-1}| x |S_n|; entry (r, k) is 1 iff the r-th
        (n-1)-simplex is a face of the k-th n-simplex.  For n = 0 the
        row count is 0 (there is nothing below the vertices).
        """
        if n < 0:
            raise ValueError(f"dimension must be >= 0, got {n}")
        cols = self.n_simplices(n)
        if n == 0:
            return Gf2Matrix.zero(0, len(cols))
        rows = self.n_simplices(n - 1)
        row_of = {s: i for i, s in enumerate(rows)}
        bits = [0] * len(rows)
        for k, s in enumerate(cols):
            for f in s.faces():
                bits[row_of[f]] |= 1 << k
        return Gf2Matrix(len(rows), len(cols), tuple(bits))

    def betti(self, n: int) -> int:
        """The n-th Betti number: |S_n| - rank(D_n) - rank(D_{n+1})."""
        ns = len(self.n_simplices(n))
        return ns - self.boundary_matrix(n).rank() - self.boundary_matrix(n + 1).rank()

    def __contains__(self, s: Simplex) -> bool:
        return s in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        """Deterministic iteration: by dimension, lexicographic within."""
        for group in self._by_dim:
            yield from group

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self._simplices)} simplices, dim {self.dim})"

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self._simplices <= other._simplices


def closure_of_facets(facets: Iterable[Simplex]) -> SimplicialComplex:
    """Smallest face-closed complex containing every given facet.

    The union of the (non-empty) powersets of the facets; duplicate or
    dominated facets are absorbed.  Idempotent: feeding a complex's own
    simplices back in reproduces the complex.
    """
    members: set[Simplex] = set()
    for facet in facets:
        for size in range(1, len(facet) + 1):
            for verts in combinations(facet.vertices, size):
                members.add(Simplex(verts))
    return SimplicialComplex(members)
