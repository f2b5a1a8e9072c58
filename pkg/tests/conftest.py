from __future__ import annotations

from itertools import combinations

import pytest

from relsr.complexes import build_complex

RP2_FACETS = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
              [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]]


def boundary_k(n: int):
    return build_complex([list(c) for c in combinations(range(1, n + 1), n - 1)])


@pytest.fixture
def rp2():
    """Six-vertex triangulation of the real projective plane."""
    return build_complex(RP2_FACETS)


@pytest.fixture
def sphere2():
    """Boundary of the tetrahedron on {1, 2, 3, 4}."""
    return boundary_k(4)


@pytest.fixture
def bowtie():
    return build_complex([[1, 2, 3], [1, 4, 5]])
