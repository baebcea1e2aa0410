"""Fixtures: the diabolo complex and its six-level filtration.

The diabolo (two triangle outlines joined at a vertex, one of them
filled) is small enough to verify by hand yet exercises every code
path: multiple components, two independent cycles, a cycle killed by
a 2-simplex, and a merge of components.
"""

from __future__ import annotations

import pytest

from phcalc import Filtration, Simplex, closure_of_facets

DIABOLO_FACETS = ((2, 3), (3, 4), (3, 5), (4, 5), (0, 1, 2))

DIABOLO_LEVELS = (
    ((0,), (1,), (2,)),
    ((0, 1), (0, 2), (1, 2)),
    ((0, 1), (0, 2), (1, 2), (3,), (4,), (5,)),
    ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)),
    ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)),
    ((0, 1, 2), (2, 3), (3, 4), (3, 5), (4, 5)),
)


@pytest.fixture
def diabolo():
    return closure_of_facets([Simplex(f) for f in DIABOLO_FACETS])


@pytest.fixture
def diabolo_filtration():
    return Filtration.from_level_facets(
        [[Simplex(f) for f in level] for level in DIABOLO_LEVELS]
    )


@pytest.fixture
def diabolo_json():
    levels = ",\n    ".join(
        "[" + ", ".join("[" + ",".join(map(str, f)) + "]" for f in level) + "]"
        for level in DIABOLO_LEVELS
    )
    return '{\n  "name": "diabolo",\n  "levels": [\n    ' + levels + "\n  ]\n}\n"
