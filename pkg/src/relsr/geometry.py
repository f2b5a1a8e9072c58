"""Exact rational polytopes, Minkowski sums and Cayley complexes.

Hulls are computed with the double description method on homogenized
integer vectors; every sidedness test is an exact integer dot product.
:func:`exhaustive_facets` keeps the naive supporting-hyperplane search
around as an independent check for small inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence

from .complexes import RelativeComplex, SimplicialComplex, build_complex, induced, union
from .linalg import int_rank, integer_nullvector, rref

Point = tuple[Fraction, ...]


class DegenerateInputError(ValueError):
    pass


class GeneralPositionError(ValueError):
    pass


class PerturbationError(RuntimeError):
    pass


def to_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _homogenize(p: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in p:
        den = _lcm(den, x.denominator)
    return [den] + [int(x * den) for x in p]


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return [x // g for x in vec] if g > 1 else vec


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _bits(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def affine_projection(points: Sequence[Point]) -> tuple[int, list[int]]:
    """Dimension of the affine hull and coordinates that embed it injectively."""
    if not points:
        raise DegenerateInputError("no points")
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if not diffs:
        return 0, []
    _, piv = rref(diffs)
    return len(piv), piv


def _double_description(hom: list[list[int]], dim: int) -> list[tuple[list[int], int]]:
    """Facet inequalities a (with a·x >= 0) and their zero sets, for full-dimensional input."""
    n = len(hom)
    basis: list[int] = []
    for i in range(n):
        if int_rank([hom[j] for j in basis + [i]]) == len(basis) + 1:
            basis.append(i)
            if len(basis) == dim + 1:
                break
    if len(basis) != dim + 1:
        raise DegenerateInputError("points are not full dimensional after projection")
    rays: list[tuple[list[int], int]] = []
    for j in range(dim + 1):
        others = [hom[basis[i]] for i in range(dim + 1) if i != j]
        r = integer_nullvector(others)
        assert r is not None
        if _dot(r, hom[basis[j]]) < 0:
            r = [-x for x in r]
        zmask = 0
        for i in range(dim + 1):
            if i != j:
                zmask |= 1 << basis[i]
        rays.append((r, zmask))
    done = set(basis)
    for q in range(n):
        if q in done:
            continue
        hq = hom[q]
        vals = [_dot(r, hq) for r, _ in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new: list[tuple[list[int], int]] = []
        for i, v in enumerate(vals):
            if v > 0:
                new.append(rays[i])
            elif v == 0:
                new.append((rays[i][0], rays[i][1] | (1 << q)))
        zsets = [z for _, z in rays]
        for i in pos:
            for j in neg:
                common = zsets[i] & zsets[j]
                if bin(common).count("1") < dim - 1:
                    continue
                if any((zsets[k] & common) == common for k in range(len(rays)) if k != i and k != j):
                    continue
                vi, vj = vals[i], vals[j]
                comb_ = [vi * b - vj * a for a, b in zip(rays[i][0], rays[j][0])]
                new.append((_primitive(comb_), common | (1 << q)))
        rays = new
        done.add(q)
    return rays


@dataclass(frozen=True)
class RationalPolytope:
    """Convex hull of exact rational points; only extreme points are stored.

    ``inequalities[j]`` is an integer vector a with a_0 + sum_i a_i x_{coords[i]} >= 0,
    tight exactly on the vertex set ``facets[j]`` (a bitmask of vertex indices).
    """

    vertices: tuple[Point, ...]
    dim_ambient: int
    dim: int
    coords: tuple[int, ...]
    facets: tuple[int, ...]
    inequalities: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def facet_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(_bits(f)) for f in self.facets]

    def outer_normal(self, j: int) -> tuple[int, ...]:
        """Outer normal of facet j as a functional on the ambient space."""
        w = [0] * self.dim_ambient
        for c, a in zip(self.coords, self.inequalities[j][1:]):
            w[c] = -a
        return tuple(w)

    @cached_property
    def face_lattice(self) -> dict[int, int]:
        """All faces (bitmask -> dimension), including the empty face and the polytope itself."""
        full = (1 << self.n_vertices) - 1
        lattice: dict[int, int] = {full: self.dim}
        if self.dim == 0:
            lattice[0] = -1
            return lattice
        queue = list(dict.fromkeys(self.facets))
        for f in queue:
            lattice.setdefault(f, self.dim - 1)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for f in self.facets:
                h = g & f
                if h not in lattice:
                    lattice[h] = -2
                    queue.append(h)
        hom = [_homogenize(v) for v in self.vertices]
        for mask, dimv in lattice.items():
            if dimv == -2:
                lattice[mask] = int_rank([hom[j] for j in _bits(mask)]) - 1 if mask else -1
        lattice[0] = -1
        return lattice

    def f_vector(self) -> tuple[int, ...]:
        """Numbers of proper faces f_0..f_{dim-1}."""
        f = [0] * self.dim
        for mask, k in self.face_lattice.items():
            if 0 <= k < self.dim:
                f[k] += 1
        return tuple(f)

    @property
    def is_simplicial(self) -> bool:
        return all(bin(f).count("1") == self.dim for f in self.facets)

    def boundary_complex(self, offset: int = 0) -> SimplicialComplex:
        if not self.is_simplicial:
            raise GeneralPositionError("boundary complex needs a simplicial polytope")
        return build_complex([[offset + j for j in _bits(f)] for f in self.facets])

    def argmax(self, w: Sequence[int | Fraction]) -> int:
        vals = [sum(Fraction(a) * x for a, x in zip(w, v)) for v in self.vertices]
        top = max(vals)
        mask = 0
        for j, x in enumerate(vals):
            if x == top:
                mask |= 1 << j
        return mask


def convex_hull(points: Iterable[Iterable]) -> RationalPolytope:
    pts = list(dict.fromkeys(to_point(p) for p in points))
    if not pts:
        raise DegenerateInputError("no points")
    amb = len(pts[0])
    if any(len(p) != amb for p in pts):
        raise DegenerateInputError("points of different dimensions")
    dim, coords = affine_projection(pts)
    if dim == 0:
        return RationalPolytope((pts[0],), amb, 0, (), (), ())
    proj = [[p[c] for c in coords] for p in pts]
    hom = [_homogenize(p) for p in proj]
    rays = _double_description(hom, dim)
    incid = [z for _, z in rays]
    verts = []
    for i in range(len(pts)):
        common = -1
        for z in incid:
            if z >> i & 1:
                common &= z
        if common != -1 and common == 1 << i:
            verts.append(i)
    remap = {old: new for new, old in enumerate(verts)}
    facets = []
    for z in incid:
        m = 0
        for old in _bits(z):
            if old in remap:
                m |= 1 << remap[old]
        facets.append(m)
    return RationalPolytope(
        tuple(pts[i] for i in verts), amb, dim, tuple(coords), tuple(facets), tuple(tuple(r) for r, _ in rays)
    )


def exhaustive_facets(points: Iterable[Iterable]) -> set[frozenset[int]]:
    """Facet vertex sets by trying every affinely independent dim-subset (small inputs only).

    Indices refer to the distinct input points in order of first appearance.
    """
    pts = list(dict.fromkeys(to_point(p) for p in points))
    dim, coords = affine_projection(pts)
    proj = [[p[c] for c in coords] for p in pts]
    hom = [_homogenize(p) for p in proj]
    out: set[frozenset[int]] = set()
    for sub in combinations(range(len(pts)), dim):
        a = integer_nullvector([hom[i] for i in sub])
        if a is None:
            continue
        vals = [_dot(a, h) for h in hom]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            out.add(frozenset(i for i, v in enumerate(vals) if v == 0))
    return out


def cyclic_polytope(d: int, n: int, parameters: Sequence | None = None) -> RationalPolytope:
    """Convex hull of n points on the moment curve t -> (t, t^2, ..., t^d)."""
    if n < d + 1 or d < 1:
        raise ValueError("need n >= d + 1 >= 2")
    ts = [Fraction(t) for t in (parameters if parameters is not None else range(1, n + 1))]
    if len(ts) != n:
        raise ValueError("need exactly n parameters")
    if len(set(ts)) != n:
        raise ValueError("duplicate parameters")
    return convex_hull([[t**i for i in range(1, d + 1)] for t in ts])


# -- families and Minkowski sums ------------------------------------------------


@dataclass(frozen=True)
class PolytopeFamily:
    members: tuple[RationalPolytope, ...]
    d: int

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("a family needs at least one member")
        if any(p.dim_ambient != self.d for p in self.members):
            raise ValueError("members live in different ambient spaces")

    @property
    def m(self) -> int:
        return len(self.members)

    @property
    def vertex_counts(self) -> tuple[int, ...]:
        return tuple(p.n_vertices for p in self.members)

    @property
    def is_pure(self) -> bool:
        return all(n >= self.d + 1 for n in self.vertex_counts)

    def sub(self, indices: Iterable[int]) -> PolytopeFamily:
        return PolytopeFamily(tuple(self.members[i] for i in indices), self.d)


def family_from_points(point_sets: Sequence[Sequence[Sequence]], d: int | None = None) -> PolytopeFamily:
    polys = tuple(convex_hull(ps) for ps in point_sets)
    return PolytopeFamily(polys, d if d is not None else polys[0].dim_ambient)


@dataclass(frozen=True)
class MinkowskiSum:
    polytope: RationalPolytope
    family: PolytopeFamily

    @cached_property
    def decomposition(self) -> dict[int, tuple[int, ...]]:
        """Proper face (bitmask) -> the summand faces (bitmasks), via a normal-cone functional."""
        poly = self.polytope
        out: dict[int, tuple[int, ...]] = {}
        for mask, k in poly.face_lattice.items():
            if not (0 <= k < poly.dim):
                continue
            w = [0] * poly.dim_ambient
            for j, f in enumerate(poly.facets):
                if f & mask == mask:
                    for c, x in enumerate(poly.outer_normal(j)):
                        w[c] += x
            out[mask] = tuple(p.argmax(w) for p in self.family.members)
        return out

    def component_dims(self, mask: int) -> tuple[int, ...]:
        return tuple(p.face_lattice[f] for p, f in zip(self.family.members, self.decomposition[mask]))

    def f_vector(self, pad_to: int | None = None) -> tuple[int, ...]:
        """Proper face numbers; with ``pad_to`` the sum itself is counted in its own dimension."""
        f = list(self.polytope.f_vector())
        if pad_to is not None:
            if len(f) < pad_to:
                f.append(1)
            f += [0] * (pad_to - len(f))
        return tuple(f)


def minkowski_sum(family: PolytopeFamily) -> MinkowskiSum:
    pts = []
    for combo in product(*(p.vertices for p in family.members)):
        pts.append(tuple(sum(xs) for xs in zip(*combo)))
    return MinkowskiSum(convex_hull(pts), family)


def check_relative_general_position(family: PolytopeFamily, msum: MinkowskiSum | None = None) -> bool:
    """dim F equals the sum of the dimensions of its summand faces, for every proper face F."""
    msum = msum or minkowski_sum(family)
    lattice = msum.polytope.face_lattice
    return all(lattice[mask] == sum(msum.component_dims(mask)) for mask in msum.decomposition)


def mixed_faces(family: PolytopeFamily, msum: MinkowskiSum | None = None) -> tuple[int, ...]:
    """Numbers of proper faces whose summand faces are all positive dimensional, by dimension."""
    msum = msum or minkowski_sum(family)
    if not check_relative_general_position(family, msum):
        raise GeneralPositionError("family is not in relatively general position")
    out = [0] * family.d
    lattice = msum.polytope.face_lattice
    for mask in msum.decomposition:
        if all(x > 0 for x in msum.component_dims(mask)):
            out[lattice[mask]] += 1
    return tuple(out)


def perturb(family: PolytopeFamily, seed: int = 0, magnitude: Fraction | int | str = Fraction(1, 100),
            max_tries: int = 24, denominator: int = 10**6) -> PolytopeFamily:
    """Jitter every vertex coordinate until all members are simplicial with unchanged vertex
    counts and the family is in relatively general position (halving the magnitude on failure)."""
    mag = Fraction(magnitude)
    if mag <= 0:
        raise ValueError("magnitude must be positive")
    rng = random.Random(f"perturb:{seed}")
    counts = family.vertex_counts
    for _ in range(max_tries):
        members = []
        for p in family.members:
            pts = [tuple(x + mag * Fraction(rng.randint(-denominator, denominator), denominator) for x in v)
                   for v in p.vertices]
            members.append(convex_hull(pts))
        fam = PolytopeFamily(tuple(members), family.d)
        ok = fam.vertex_counts == counts and all(
            q.is_simplicial or q.dim < family.d for q in fam.members
        )
        if ok and check_relative_general_position(fam):
            return fam
        mag /= 2
    raise PerturbationError("perturbation budget exhausted")


# -- Cayley polytopes and complexes ------------------------------------------------


def cayley_points(family: PolytopeFamily) -> tuple[list[Point], list[int]]:
    pts, labels = [], []
    m = family.m
    for i, p in enumerate(family.members):
        for v in p.vertices:
            pts.append(tuple(v) + tuple(Fraction(int(j == i)) for j in range(m)))
            labels.append(i)
    return pts, labels


def cayley_polytope(family: PolytopeFamily) -> tuple[RationalPolytope, list[int]]:
    """Cay(P_[m]) = conv(∪ P_i × e_i) with the summand label of every vertex."""
    pts, labels = cayley_points(family)
    poly = convex_hull(pts)
    index = {p: i for i, p in enumerate(pts)}
    vlabels = [labels[index[v]] for v in poly.vertices]
    if len(poly.vertices) != len(pts):
        raise DegenerateInputError("some summand vertex is not a vertex of the Cayley polytope")
    return poly, vlabels


@dataclass(frozen=True)
class CayleyData:
    family: PolytopeFamily
    cayley: RationalPolytope
    labels: tuple[int, ...]
    complex: SimplicialComplex
    sub_complexes: dict[frozenset[int], SimplicialComplex] = field(compare=False)
    relative: RelativeComplex = field(compare=False)

    def vertices_of(self, labels: Iterable[int]) -> list[int]:
        ls = set(labels)
        return [v for v, lab in enumerate(self.labels) if lab in ls]

    def sub_relative(self, s: Iterable[int]) -> RelativeComplex:
        """T°_S = (T_S, ∪_{i∈S} T_{S∖i}) for the label-induced subcomplexes."""
        S = frozenset(s)
        parts = [self.sub_complexes[S - {i}] for i in S]
        return RelativeComplex(self.sub_complexes[S], union(*parts) if parts else SimplicialComplex(()))


def cayley_complex(family: PolytopeFamily) -> CayleyData:
    """T_[m], generated by the facets of Cay(P_[m]) touching every summand label.

    Vertex ids are positions in the list of Cayley vertices (summand by summand).
    """
    cay, labels = cayley_polytope(family)
    m = family.m
    gens = []
    for f in cay.facets:
        vs = _bits(f)
        if len({labels[v] for v in vs}) == m:
            if len(vs) != cay.dim:
                raise GeneralPositionError("a facet touching all summands is not a simplex")
            gens.append(vs)
    t = build_complex(gens)
    subs: dict[frozenset[int], SimplicialComplex] = {}
    for r in range(m + 1):
        for S in combinations(range(m), r):
            subs[frozenset(S)] = induced(t, [v for v, lab in enumerate(labels) if lab in S])
    parts = [subs[frozenset(set(range(m)) - {i})] for i in range(m)]
    rel = RelativeComplex(t, union(*parts))
    return CayleyData(family, cay, tuple(labels), t, subs, rel)


def radon_nonface_search(family: PolytopeFamily) -> int | None:
    """Smallest vertex subset of size <= floor((d+m+1)/2) of Cay(P_[m]) lying in no facet."""
    d, m = family.d, family.m
    if sum(family.vertex_counts) <= d + m:
        raise ValueError("needs more than d + m vertices in total")
    cay, _ = cayley_polytope(family)
    bound = (d + m + 1) // 2
    n = cay.n_vertices
    for size in range(1, bound + 1):
        for sub in combinations(range(n), size):
            mask = sum(1 << i for i in sub)
            if not any(f & mask == mask for f in cay.facets):
                return size
    return None
