"""Seeded random instances: polytopes, generic families, balls and relative complexes."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .complexes import RelativeComplex, SimplicialComplex, build_complex, from_faces, subsets
from .geometry import (
    PolytopeFamily,
    RationalPolytope,
    check_relative_general_position,
    convex_hull,
    cyclic_polytope,
    perturb,
)


class GenerationError(RuntimeError):
    pass


def _rng(seed: int | random.Random, tag: str) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(f"{tag}:{seed}")


def random_simplicial_polytope(d: int, n: int, seed: int | random.Random = 0, max_tries: int = 200) -> RationalPolytope:
    """A simplicial d-polytope with exactly n vertices.

    Points are lifted to the paraboloid x_d = |y|^2, so every sample is a
    vertex of the hull; general position is enforced by rejection.
    """
    if n < d + 1:
        raise ValueError("need n >= d + 1")
    rng = _rng(seed, "poly")
    span = max(3, n)
    for _ in range(max_tries):
        ys: set[tuple[int, ...]] = set()
        while len(ys) < n:
            ys.add(tuple(rng.randint(-span, span) for _ in range(d - 1)))
        pts = [[Fraction(c) for c in y] + [Fraction(sum(c * c for c in y))] for y in ys]
        if d == 1:
            pts = [[Fraction(rng.randint(-span, span))] for _ in range(n)]
        p = convex_hull(pts)
        if p.n_vertices == n and p.dim == d and p.is_simplicial:
            return p
    raise GenerationError("could not draw a simplicial polytope")


def random_simplex(d: int, k: int, seed: int | random.Random = 0) -> RationalPolytope:
    """A k-simplex (k + 1 affinely independent points) in R^d, k <= d."""
    rng = _rng(seed, "simplex")
    for _ in range(200):
        pts = [[Fraction(rng.randint(-9, 9)) for _ in range(d)] for _ in range(k + 1)]
        p = convex_hull(pts)
        if p.n_vertices == k + 1 and p.dim == k:
            return p
    raise GenerationError("could not draw a simplex")


def random_member(d: int, n: int, seed: int | random.Random = 0) -> RationalPolytope:
    """A simplicial polytope with n vertices if n > d, else an (n-1)-simplex."""
    if n >= d + 1:
        return random_simplicial_polytope(d, n, seed)
    return random_simplex(d, n - 1, seed)


def random_family(d: int, counts: list[int] | tuple[int, ...], seed: int = 0, max_tries: int = 30) -> PolytopeFamily:
    """A family in relatively general position with the given vertex counts."""
    rng = _rng(seed, "family")
    for _ in range(max_tries):
        members = tuple(random_member(d, n, rng) for n in counts)
        fam = PolytopeFamily(members, d)
        if check_relative_general_position(fam):
            return fam
        try:
            return perturb(fam, seed=rng.randint(0, 10**9))
        except Exception:
            continue
    raise GenerationError("could not draw a generic family")


def generic_segments(m: int, d: int, seed: int = 0) -> PolytopeFamily:
    """m segments from the origin in general position (a generic zonotope family)."""
    rng = _rng(seed, "segments")
    for _ in range(500):
        members = []
        for _ in range(m):
            v = [rng.randint(-9, 9) for _ in range(d)]
            members.append(convex_hull([[0] * d, v]))
        fam = PolytopeFamily(tuple(members), d)
        if all(p.n_vertices == 2 for p in fam.members) and check_relative_general_position(fam):
            return fam
    raise GenerationError("could not draw generic segments")


def random_sphere(d: int, n: int, seed: int = 0) -> SimplicialComplex:
    """Boundary complex of a random simplicial d-polytope: a (d-1)-sphere."""
    return random_simplicial_polytope(d, n, seed).boundary_complex()


def cyclic_sphere(d: int, n: int) -> SimplicialComplex:
    return cyclic_polytope(d, n).boundary_complex()


def _stellar(delta: SimplicialComplex, face: tuple[int, ...], new: int) -> SimplicialComplex:
    fs = set(face)
    facets = []
    for f in delta.facets:
        if fs <= set(f):
            rest = [v for v in f if v not in fs]
            for drop in face:
                facets.append(sorted(rest + [v for v in face if v != drop] + [new]))
        else:
            facets.append(list(f))
    return build_complex(facets)


def random_ball(d: int, n_boundary: int, extra: int, seed: int = 0) -> SimplicialComplex:
    """A (d-1)-ball with full boundary.

    Start from the cone over a random (d-2)-sphere (the boundary is full in the
    cone) and apply ``extra`` stellar subdivisions of interior faces, which
    keeps the boundary and its fullness.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    rng = _rng(seed, "ball")
    if d == 2:
        sphere = build_complex([[0], [1]])
    else:
        sphere = random_sphere(d - 1, n_boundary, rng)
    apex = max(sphere.vertices) + 1
    ball = build_complex([list(f) + [apex] for f in sphere.facets])
    boundary_vertices = set(sphere.vertices)
    nxt = apex + 1
    for _ in range(extra):
        interior = [f for f in ball.faces if len(f) >= 1 and not set(f) <= boundary_vertices]
        face = rng.choice(sorted(interior))
        ball = _stellar(ball, face, nxt)
        nxt += 1
    return ball


def random_pure_complex(d: int, n: int, n_facets: int, seed: int | random.Random = 0) -> SimplicialComplex:
    rng = _rng(seed, "pure")
    pool = list(combinations(range(n), d))
    rng.shuffle(pool)
    return build_complex([list(f) for f in pool[: max(1, min(n_facets, len(pool)))]])


def random_pure_relative(d: int, n: int, n_facets: int, seed: int = 0, max_tries: int = 100) -> RelativeComplex:
    """A pure (d-1)-dimensional relative complex (Δ, Γ), Γ spanned by random faces of Δ."""
    rng = _rng(seed, "relative")
    for _ in range(max_tries):
        delta = random_pure_complex(d, n, n_facets, rng)
        faces = sorted(f for f in delta.faces if 0 < len(f) < d)
        chosen = []
        for f in faces:
            if rng.random() < 0.15:
                chosen.append(f)
        if chosen:
            gamma = from_faces(g for f in chosen for g in subsets(f))
        else:
            gamma = build_complex([]) if rng.random() < 0.5 else from_faces([()])
        rc = RelativeComplex(delta, gamma)
        if not rc.is_void and not rc.gamma.faces >= rc.delta.faces and rc.is_pure:
            return rc
    raise GenerationError("could not draw a pure relative complex")
