from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import boundary_k
from relsr.bounds import arrangement_bound
from relsr.complexes import (
    Arrangement,
    RelativeComplex,
    binom,
    build_complex,
    fh_vectors,
    hilbert_numerator,
    is_full,
    relative_star,
    simplex,
    star,
    union,
)
from relsr.face_algebra import (
    GradedModule,
    NotFullError,
    SchenzelMismatchError,
    UncertifiedSystemError,
    LinearSystem,
    boundary_complex,
    certify,
    combinatorial_hilbert,
    generic_lsop,
    monotone_quotient_check,
    nerve_bound,
    nerve_ideal_dims,
    quotient_dims,
    regular_sequence_identity,
    reverse_iso_check,
    schenzel_decompose,
)
from relsr.generators import random_ball, random_family, random_sphere
from relsr.geometry import cayley_complex
from relsr.homology import NotBuchsbaumError, h_top, is_cohen_macaulay
from relsr.linalg import GF2, QQ, FieldSpec, dense_rank


def _facet_ranks(theta, delta):
    return {f: dense_rank([theta.column(v) for v in f], theta.field) for f in delta.facets}


# -- linear systems --------------------------------------------------------------------


def test_lsop_on_tetrahedron_boundary(sphere2):
    theta = generic_lsop(sphere2, 4, seed=0)
    assert certify(theta, sphere2)
    assert set(_facet_ranks(theta, sphere2).values()) == {3}
    theta3 = generic_lsop(sphere2, 3, seed=0)
    assert set(_facet_ranks(theta3, sphere2).values()) == {3}


def test_empty_system_is_valid(sphere2):
    theta = generic_lsop(sphere2, 0)
    assert theta.length == 0 and certify(theta, sphere2)


def test_isolated_vertex_rank_is_capped():
    delta = build_complex([[1, 2], [3]])
    theta = generic_lsop(delta, 2, seed=4)
    ranks = _facet_ranks(theta, delta)
    assert ranks[(3,)] == 1 and ranks[(1, 2)] == 2


def test_lsop_is_seeded(rp2):
    assert generic_lsop(rp2, 3, seed=5) == generic_lsop(rp2, 3, seed=5)
    assert generic_lsop(rp2, 3, seed=5).theta != generic_lsop(rp2, 3, seed=6).theta


def test_lsop_over_gf2_exists_for_rp2(rp2):
    theta = generic_lsop(rp2, 3, seed=0, field=GF2)
    assert theta.field == GF2 and certify(theta, rp2)


def test_uncertified_system_is_refused(sphere2):
    bad = LinearSystem(((1, 1, 1, 1),) * 3, sphere2.vertices, 0)
    assert not certify(bad, sphere2)
    with pytest.raises(UncertifiedSystemError):
        quotient_dims(GradedModule(RelativeComplex(sphere2), 3), bad)


# -- quotients ----------------------------------------------------------------------------


@pytest.mark.parametrize("n,length", [(4, 2), (5, 3), (5, 2)])
def test_polynomial_ring_quotient(n, length):
    delta = simplex(range(1, n + 1))
    theta = generic_lsop(delta, length, seed=1)
    dims = quotient_dims(GradedModule(RelativeComplex(delta), 4), theta)
    assert dims == tuple(binom(n - length + k - 1, k) for k in range(5))


def test_module_dimensions_match_face_counts(rp2):
    rc = RelativeComplex(rp2)
    assert GradedModule(rc, 5).dims() == combinatorial_hilbert(rc, 5)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 4))
def test_regular_sequence_identity_on_spheres(seed, d):
    s = random_sphere(d, d + 2, seed)
    theta = generic_lsop(s, d, seed)
    assert regular_sequence_identity(RelativeComplex(s), theta, d + 1)


@pytest.mark.parametrize("seed", range(3))
def test_regular_sequence_identity_on_ball_modulo_boundary(seed):
    ball = random_ball(3, 5, 2, seed)
    rc = RelativeComplex(ball, boundary_complex(ball))
    assert is_cohen_macaulay(rc)
    theta = generic_lsop(rc, 3, seed)
    assert regular_sequence_identity(rc, theta, 4)


def test_quotient_is_seed_independent_on_buchsbaum(rp2):
    rc = RelativeComplex(rp2)
    for field in (QQ, GF2):
        dims = {quotient_dims(GradedModule(rc, 3), generic_lsop(rc, 3, s, field)) for s in range(3)}
        assert len(dims) == 1


def test_regular_sequence_identity_fails_without_cm(rp2):
    # over GF(2) the projective plane is not CM and the quotient sees h^alg
    theta = generic_lsop(rp2, 3, seed=0, field=GF2)
    assert not regular_sequence_identity(RelativeComplex(rp2), theta, 3)


# -- Schenzel ----------------------------------------------------------------------------


def test_schenzel_on_sphere(sphere2):
    res = schenzel_decompose(sphere2)
    assert res.h == res.h_alg == (1, 1, 1, 1)
    assert res.h_top == (0, 0, 0, 0)


@pytest.mark.parametrize("seed", [0, 1, 2, 7])
def test_schenzel_on_rp2_over_gf2(rp2, seed):
    res = schenzel_decompose(rp2, GF2, seed)
    assert (res.h, res.h_alg, res.h_top, res.ok) == ((1, 3, 6, 0), (1, 3, 6, 1), (0, 0, 0, -1), True)


def test_schenzel_on_rp2_over_rationals(rp2):
    res = schenzel_decompose(rp2, QQ, 3)
    assert res.h_top == (0, 0, 0, 0) and res.h_alg == res.h


@pytest.mark.parametrize("field", [QQ, GF2, FieldSpec(3)], ids=str)
@pytest.mark.parametrize("d,counts,seed", [(2, [3, 4], 0), (2, [3, 3], 2), (3, [4, 4], 1)])
def test_schenzel_on_relative_cayley_complexes(field, d, counts, seed):
    rc = cayley_complex(random_family(d, counts, seed=seed)).relative
    res = schenzel_decompose(rc, field, seed)
    assert res.ok
    assert res.h_top == h_top(rc, field)


def test_schenzel_refuses_non_buchsbaum(bowtie):
    with pytest.raises(NotBuchsbaumError):
        schenzel_decompose(bowtie)


# -- nerve ideals -------------------------------------------------------------------------------


@pytest.mark.parametrize("seed", range(3))
def test_nerve_bound_for_ball_boundary(seed):
    ball = random_ball(3, 5 + seed, 2, seed)
    bd = boundary_complex(ball)
    arr = Arrangement(ball, (bd,))
    n, nb = len(ball.vertices), len(bd.vertices)
    rc = RelativeComplex(ball, bd)
    alg = quotient_dims(GradedModule(rc, 3), generic_lsop(rc, 3, seed))
    for k in range(4):
        bound = nerve_bound(ball, arr, k)
        assert bound == binom(n - 3 + k - 1, k) - binom(nb - 3 + k - 1, k)
        assert alg[k] <= bound


def _disjoint_edges(s, count):
    edges, used = [], set()
    for e in sorted(f for f in s.faces if len(f) == 2):
        if used.isdisjoint(e):
            edges.append(simplex(e))
            used.update(e)
        if len(edges) == count:
            break
    return edges


@pytest.mark.parametrize("seed,count", [(0, 2), (1, 3), (2, 2), (3, 3)])
def test_arrangement_bound_two_routes(seed, count):
    """Closed form against the nerve-ideal count plus the topological part computed from homology."""
    s = random_sphere(3, 8, seed)
    members = _disjoint_edges(s, count)
    assert len(members) == count
    arr = Arrangement(s, tuple(members))
    assert arr.is_full
    rc = RelativeComplex(s, union(*members))
    top = h_top(rc)
    h = fh_vectors(rc).h
    alg = quotient_dims(GradedModule(rc, 3), generic_lsop(rc, 3, seed))
    for k in range(4):
        closed = arrangement_bound(len(s.vertices), [2] * count, 3, k)
        via_nerve = nerve_bound(s, arr, k) + top[k]
        assert closed == via_nerve
        assert alg[k] <= nerve_bound(s, arr, k)
        assert h[k] <= closed


def test_nerve_ideal_dims_count_non_supported_monomials():
    delta = build_complex([[1, 2, 3]])
    arr = Arrangement(delta, (simplex([1, 2]), simplex([2, 3])))
    # monomials divisible by x1*x3: x1x3 in degree 2; x1^2x3, x1x2x3, x1x3^2 in degree 3
    assert nerve_ideal_dims(arr, 2) == 1
    assert nerve_ideal_dims(arr, 3) == 3


def test_universally_cm_mcmullen_step_on_cayley_complexes():
    for d, counts, seed in [(2, [3, 4], 0), (2, [4, 4], 3), (3, [4, 4], 1)]:
        data = cayley_complex(random_family(d, counts, seed=seed))
        m = len(counts)
        full = frozenset(range(m))
        T = data.complex
        arr = Arrangement(T, tuple(data.sub_complexes[full - {i}] for i in range(m)))
        assert arr.is_full
        G = arr.support
        rc = RelativeComplex(T, G)
        D = int(T.dim) + 1
        h = fh_vectors(rc).h
        extra = [0] * (D + 1)
        for v in T.vertices:
            Gv = arr.at_vertex(v).support
            assert is_cohen_macaulay(RelativeComplex(T, Gv))
            hv = hilbert_numerator(RelativeComplex(G, Gv), D, D)
            for k in range(D + 1):
                extra[k] += hv[k]
        for k in range(D):
            assert (k + 1) * h[k + 1] <= (len(T.vertices) - D + k) * h[k] + extra[k]


# -- monotonicity and reverse isoperimetry -----------------------------------------------------


def test_monotone_quotients_for_stars(sphere2):
    rc = RelativeComplex(sphere2)
    theta = generic_lsop(sphere2, 3, seed=2)
    for k in range(4):
        assert monotone_quotient_check(rc, star(sphere2, (1,)), theta, k)
        assert monotone_quotient_check(rc, sphere2, theta, k)


def test_single_facet_quotient_is_at_most_one(rp2):
    rc = RelativeComplex(rp2)
    theta = generic_lsop(rp2, 3, seed=0)
    facet = simplex(rp2.facets[0])
    dims = quotient_dims(GradedModule(RelativeComplex(facet), 3, theta.variables), theta, check=False)
    assert all(x in (0, 1) for x in dims)
    assert all(monotone_quotient_check(rc, facet, theta, k) for k in range(4))


def test_simplex_boundary_is_not_full():
    with pytest.raises(NotFullError):
        reverse_iso_check(simplex([1, 2, 3, 4]))


def test_cone_over_cycle():
    cone = build_complex([[0, i, i % 5 + 1] for i in range(1, 6)])
    assert is_full(cone, boundary_complex(cone))
    assert reverse_iso_check(cone)


def test_path_of_two_edges():
    path = build_complex([[1, 2], [2, 3]])
    inner = fh_vectors(RelativeComplex(path, boundary_complex(path)), 2).h
    outer = fh_vectors(boundary_complex(path), 1).h
    # interior faces {2}, {1,2}, {2,3}; boundary two points
    assert inner == (0, 1, 1) and outer == (1, 1)
    assert reverse_iso_check(path)
