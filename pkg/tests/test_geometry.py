from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from relsr.complexes import RelativeComplex, fh_vectors, is_full
from relsr.generators import generic_segments, random_family, random_simplicial_polytope
from relsr.geometry import (
    GeneralPositionError,
    PolytopeFamily,
    cayley_complex,
    check_relative_general_position,
    convex_hull,
    cyclic_polytope,
    exhaustive_facets,
    family_from_points,
    minkowski_sum,
    mixed_faces,
    perturb,
    radon_nonface_search,
)
from relsr.homology import betti, is_buchsbaum, is_cohen_macaulay

TRIANGLE = [[0, 0], [1, 0], [0, 1]]


# -- hulls ------------------------------------------------------------------------------


@pytest.mark.parametrize("d,n,f", [(4, 6, (6, 15, 18, 9)), (2, 5, (5, 5)), (3, 5, (5, 9, 6)),
                                   (5, 9, (9, 36, 74, 75, 30))])
def test_cyclic_polytope_f_vectors(d, n, f):
    assert cyclic_polytope(d, n).f_vector() == f


def test_cyclic_polytope_hull_matches_exhaustive_search():
    p = cyclic_polytope(5, 9)
    assert set(p.facet_vertex_sets()) == exhaustive_facets(p.vertices)


def test_cyclic_polytope_is_neighborly():
    p = cyclic_polytope(4, 8)
    assert p.f_vector()[1] == 28  # every pair of vertices spans an edge


def test_square_center_is_dropped():
    p = convex_hull([[0, 0], [2, 0], [0, 2], [2, 2], [1, 1]])
    assert p.n_vertices == 4
    assert (Fraction(1), Fraction(1)) not in p.vertices


def test_simplex_face_lattice_is_boolean():
    p = convex_hull([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert p.f_vector() == (4, 6, 4)
    assert len(p.face_lattice) == 2**4  # every vertex subset, including the empty face and P itself
    assert sorted(p.face_lattice.values()).count(-1) == 1


def test_cube():
    cube = convex_hull([[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1)])
    assert cube.f_vector() == (8, 12, 6)
    assert not cube.is_simplicial


def test_lower_dimensional_hull():
    p = convex_hull([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]])
    assert p.dim == 2 and p.f_vector()[:2] == (4, 4)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 4))
def test_hull_idempotence(seed, d):
    p = random_simplicial_polytope(d, d + 3, seed)
    q = convex_hull(p.vertices)
    assert q.vertices == p.vertices
    assert q.face_lattice == p.face_lattice


# -- Minkowski sums --------------------------------------------------------------------------


def test_two_generic_triangles_make_a_hexagon():
    fam = family_from_points([TRIANGLE, [[0, 0], [-1, 0], [0, -1]]])
    ms = minkowski_sum(fam)
    assert ms.f_vector() == (6, 6)
    assert check_relative_general_position(fam)
    assert mixed_faces(fam) == (0, 0)


def test_point_summand_translates():
    tri = convex_hull(TRIANGLE)
    fam = family_from_points([TRIANGLE, [["3/2", "-7"]]])
    ms = minkowski_sum(fam)
    assert ms.polytope.f_vector() == tri.f_vector()
    assert check_relative_general_position(fam)
    assert mixed_faces(fam) == (0, 0)


def test_three_segments_make_a_hexagon():
    fam = generic_segments(3, 2, seed=0)
    assert minkowski_sum(fam).f_vector() == (6, 6)


def test_identical_triangles_are_not_generic():
    fam = family_from_points([TRIANGLE, TRIANGLE])
    assert not check_relative_general_position(fam)
    with pytest.raises(GeneralPositionError):
        mixed_faces(fam)
    for seed in range(3):
        assert check_relative_general_position(perturb(fam, seed=seed))


def test_perturb_keeps_generic_families_generic():
    fam = random_family(3, [4, 5], seed=1)
    assert check_relative_general_position(perturb(fam, seed=9))


def test_two_generic_segments_have_no_mixed_proper_faces():
    fam = generic_segments(2, 2, seed=3)
    assert minkowski_sum(fam).f_vector() == (4, 4)
    assert mixed_faces(fam) == (0, 0)


@pytest.mark.parametrize("seed", range(4))
def test_mixed_facets_of_two_tetrahedra_by_inclusion_exclusion(seed):
    fam = random_family(3, [4, 4], seed=seed)
    sums = {S: minkowski_sum(fam.sub(S)).f_vector(3) for S in [(0,), (1,), (0, 1)]}
    ie = sums[(0, 1)][2] - sums[(0,)][2] - sums[(1,)][2]
    assert mixed_faces(fam)[2] == ie


@pytest.mark.parametrize("seed", range(4))
def test_flat_summands_contribute_two_parallel_facets(seed):
    # A triangle in R^3 shows up twice on the boundary of the sum (as the top and
    # bottom translate), so subtracting f_2(triangle) = 1 per summand overcounts.
    fam = random_family(3, [3, 3], seed=seed)
    f_sum = minkowski_sum(fam).f_vector(3)
    assert mixed_faces(fam)[2] == f_sum[2] - 2 - 2


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_face_dimensions_are_subadditive(seed):
    fam = random_family(2, [3, 4], seed=seed)
    ms = minkowski_sum(fam)
    lattice = ms.polytope.face_lattice
    assert all(lattice[mask] <= sum(ms.component_dims(mask)) for mask in ms.decomposition)


# -- Cayley complexes -------------------------------------------------------------------------


def _face_numbers(rc):
    f = [0] * (int(rc.dim) + 2)
    for face in rc.faces:
        f[len(face)] += 1
    return f


def test_cayley_fiber_identity_for_two_triangles():
    fam = family_from_points([TRIANGLE, [[0, 0], [-1, 0], [0, -1]]])
    data = cayley_complex(fam)
    f = _face_numbers(data.relative)  # entry i counts faces with i vertices
    assert f == [0, 0, 6, 6]


def test_single_summand_cayley_complex_is_its_boundary():
    p = random_simplicial_polytope(3, 6, seed=0)
    data = cayley_complex(PolytopeFamily((p,), 3))
    assert data.complex.f_counts() == p.boundary_complex().f_counts()
    assert data.relative.gamma.is_empty_complex


@pytest.mark.parametrize("d,counts,seed", [(2, [4, 5], 0), (3, [4, 5], 1), (2, [3, 3, 4], 2), (3, [4, 4, 4], 3)])
def test_cayley_properties(d, counts, seed):
    fam = random_family(d, counts, seed=seed)
    data = cayley_complex(fam)
    m = len(counts)
    f = _face_numbers(data.relative)
    fs = minkowski_sum(fam).f_vector(d)
    assert [f[k + m] if k + m < len(f) else 0 for k in range(d)] == list(fs)
    for S, sub in data.sub_complexes.items():
        if S:
            assert is_full(data.complex, sub)
    rc = data.relative
    assert is_buchsbaum(rc)
    b = betti(rc)
    assert [b[i] for i in range(-1, d + m - 1)] == [int(i == m - 1) + int(i == d + m - 2) for i in range(-1, d + m - 1)]
    full = frozenset(range(m))
    for v in data.complex.vertices:
        cover = [data.sub_complexes[full - {i}] for i in range(m) if (v,) in data.sub_complexes[full - {i}].faces]
        from relsr.complexes import union

        assert is_cohen_macaulay(RelativeComplex(data.complex, union(*cover)))


def test_three_pentagons_glue_to_a_torus():
    fam = random_family(2, [5, 5, 5], seed=0)
    data = cayley_complex(fam)
    b = betti(data.relative.gamma)
    assert (b[0], b[1], b[2]) == (0, 2, 1)


def test_radon_search_finds_small_nonface():
    fam = family_from_points([TRIANGLE, [[0, 0], [-1, 0], [0, -1]]])
    size = radon_nonface_search(fam)
    assert size is not None and size <= (2 + 2 + 1) // 2


@pytest.mark.parametrize("seed", range(4))
def test_radon_search_on_pure_families(seed):
    fam = random_family(3, [5, 5], seed=seed)
    size = radon_nonface_search(fam)
    assert size is not None and size <= (3 + 2 + 1) // 2


def test_radon_search_not_applicable_to_simplices():
    fam = random_family(2, [2, 2], seed=1)  # two segments: sum of vertex counts = d + m
    with pytest.raises(ValueError):
        radon_nonface_search(fam)


@pytest.mark.parametrize("seed", range(3))
def test_segment_summand_breaks_the_buchsbaum_property(seed):
    # the manifold-with-boundary structure of T° needs full-dimensional summands
    fam = random_family(4, [2, 6], seed=seed)
    assert not is_buchsbaum(cayley_complex(fam).relative)
    assert is_buchsbaum(cayley_complex(random_family(4, [5, 6], seed=seed)).relative)
