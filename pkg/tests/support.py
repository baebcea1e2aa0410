"""Shared test helpers: naive references and random input builders.

Everything here is deliberately written in the most obvious way
possible (lists of ints, textbook elimination, union-find) so the
package's bit-packed implementations are tested against independent
logic rather than against themselves.
"""

from __future__ import annotations

import random

from phcalc import Filtration, Simplex, SimplicialComplex, closure_of_facets
from phcalc.gf2 import Gf2Matrix


def naive_rank(rows: list[list[int]]) -> int:
    """Textbook Gaussian elimination over GF(2) on nested lists."""
    work = [list(r) for r in rows]
    n_cols = len(work[0]) if work else 0
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                work[r] = [a ^ b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def matrix_from_lists(rows: list[list[int]], cols: int | None = None) -> Gf2Matrix:
    return Gf2Matrix.from_rows(rows, cols=cols)


def random_lists(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    return [[rng.randrange(2) for _ in range(cols)] for _ in range(rows)]


def component_count(complex_: SimplicialComplex) -> int:
    """Union-find count of connected components: an independent beta_0."""
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for simplex in complex_.n_simplices(0):
        parent[simplex.vertices[0]] = simplex.vertices[0]
    for edge in complex_.n_simplices(1):
        a, b = (find(v) for v in edge.vertices)
        if a != b:
            parent[a] = b
    return sum(1 for v in parent if find(v) == v)


def random_facets(
    rng: random.Random, vertices: int, count: int, max_size: int = 4
) -> list[Simplex]:
    """Random facets of mixed sizes 1..max_size on {0, ..., vertices-1}."""
    facets = []
    for _ in range(count):
        size = rng.randint(1, min(max_size, vertices))
        facets.append(Simplex(tuple(rng.sample(range(vertices), size))))
    return facets


def random_complex(
    rng: random.Random, vertices: int = 8, count: int = 5, max_size: int = 4
) -> SimplicialComplex:
    return closure_of_facets(random_facets(rng, vertices, count, max_size))


def random_filtration(
    rng: random.Random,
    vertices: int = 7,
    count: int = 4,
    levels: int = 3,
    max_size: int = 3,
) -> Filtration:
    """Cumulative random filtration with mixed facet sizes."""
    drawn = [
        (facet, rng.randrange(levels))
        for facet in random_facets(rng, vertices, count, max_size)
    ]
    per_level = [
        [facet for facet, at in drawn if at <= j] for j in range(levels)
    ]
    return Filtration.from_level_facets(per_level)
