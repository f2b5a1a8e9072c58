"""Finite simplicial complexes and relative complexes.

Faces are strictly increasing tuples of non-negative integers.  A complex is
stored through its facets; the full face set is enumerated on demand and
cached.  Two degenerate complexes are kept apart on purpose: the *void*
complex has no faces at all, while the *empty* complex ``{()}`` contains
exactly the empty face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Face = tuple[int, ...]

VOID_DIM = -math.inf


class MalformedFaceError(ValueError):
    pass


class VoidComplexError(ValueError):
    pass


class NotSubcomplexError(ValueError):
    pass


class ShellingError(ValueError):
    def __init__(self, step: int, reason: str):
        super().__init__(f"shelling fails at step {step}: {reason}")
        self.step = step
        self.reason = reason


def binom(x: int, k: int) -> int:
    """Binomial coefficient C(x, k) for any integer x (zero for k < 0)."""
    if k < 0:
        return 0
    if x >= 0:
        return math.comb(x, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    pool = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    for f in pool:
        fs = frozenset(f)
        if any(fs <= g for g in kept_sets):
            continue
        kept.append(f)
        kept_sets.append(fs)
    return tuple(sorted(kept))


def _normalize(face: Iterable[int]) -> Face:
    vs = list(face)
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise MalformedFaceError(f"vertex ids must be non-negative integers, got {v!r}")
    t = tuple(sorted(vs))
    if len(set(t)) != len(t):
        raise MalformedFaceError(f"duplicate vertex in face {list(face)}")
    return t


def subsets(face: Face) -> Iterator[Face]:
    for r in range(len(face) + 1):
        yield from combinations(face, r)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets (pairwise incomparable)."""

    facets: tuple[Face, ...]

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == ((),)

    @cached_property
    def dim(self) -> float | int:
        if self.is_void:
            return VOID_DIM
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> frozenset[Face]:
        out: set[Face] = set()
        for f in self.facets:
            out.update(subsets(f))
        return frozenset(out)

    def __contains__(self, face: object) -> bool:
        return tuple(sorted(face)) in self.faces  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.faces)

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def f_counts(self) -> dict[int, int]:
        """Number of faces per dimension (dimension -1 is the empty face)."""
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
        return counts

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return all(f in other.faces for f in self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex({[list(f) for f in self.facets]})"


VOID = SimplicialComplex(())
EMPTY = SimplicialComplex(((),))


def build_complex(facet_lists: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by the given faces; ``[]`` is void, ``[[]]`` is ``{()}``."""
    raw = [_normalize(f) for f in facet_lists]
    if not raw:
        return VOID
    return SimplicialComplex(_maximal(raw))


def from_faces(faces: Iterable[Face]) -> SimplicialComplex:
    """Complex whose face set is the (assumed down-closed) collection given."""
    fs = list(faces)
    if not fs:
        return VOID
    return SimplicialComplex(_maximal(fs))


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return build_complex([list(vertices)])


def boundary_of_simplex(vertices: Sequence[int]) -> SimplicialComplex:
    vs = tuple(sorted(vertices))
    if not vs:
        return VOID
    return build_complex([list(c) for c in combinations(vs, len(vs) - 1)])


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    return build_complex([f for c in complexes for f in c.facets])


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return from_faces(a.faces & b.faces)


def induced(delta: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """The full subcomplex Δ ∩ K_W on the vertex set W."""
    if delta.is_void:
        return VOID
    w = set(vertex_set)
    return build_complex([[v for v in f if v in w] for f in delta.facets])


# -- local constructions on absolute complexes ---------------------------------


def link(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    s = tuple(sorted(sigma))
    if s not in delta.faces:
        return VOID
    ss = set(s)
    return build_complex([[v for v in f if v not in ss] for f in delta.facets if ss <= set(f)])


def star(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    s = tuple(sorted(sigma))
    if s not in delta.faces:
        return VOID
    ss = set(s)
    return build_complex([f for f in delta.facets if ss <= set(f)])


def deletion(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces of Δ not containing σ."""
    ss = set(sigma)
    if delta.is_void:
        return VOID
    if not ss:
        return VOID
    gens: list[Face] = []
    for f in delta.facets:
        if ss <= set(f):
            gens.extend(tuple(u for u in f if u != v) for v in ss)
        else:
            gens.append(f)
    return build_complex(gens)


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Faces of dimension < i (so ``skeleton(Δ, dim Δ + 1) == Δ``)."""
    if delta.is_void or i < 0:
        return VOID
    gens: list[Face] = []
    for f in delta.facets:
        if len(f) <= i:
            gens.append(f)
        else:
            gens.extend(combinations(f, i))
    return build_complex(gens)


# -- relative complexes -----------------------------------------------------------


@dataclass(frozen=True)
class RelativeComplex:
    """A pair (Δ, Γ) with Γ a subcomplex of Δ; its faces are Δ \\ Γ."""

    delta: SimplicialComplex
    gamma: SimplicialComplex = VOID

    def __post_init__(self) -> None:
        if not self.gamma.is_subcomplex_of(self.delta):
            raise NotSubcomplexError("gamma is not a subcomplex of delta")

    @cached_property
    def faces(self) -> frozenset[Face]:
        return self.delta.faces - self.gamma.faces

    @property
    def is_void(self) -> bool:
        return not self.faces

    @cached_property
    def dim(self) -> float | int:
        if self.is_void:
            return VOID_DIM
        return max(len(f) for f in self.faces) - 1

    @cached_property
    def facets(self) -> tuple[Face, ...]:
        g = self.gamma.faces
        return tuple(f for f in self.delta.facets if f not in g)

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.delta.vertices

    def __repr__(self) -> str:
        return f"RelativeComplex(delta={self.delta!r}, gamma={self.gamma!r})"


def as_relative(c: SimplicialComplex | RelativeComplex) -> RelativeComplex:
    return c if isinstance(c, RelativeComplex) else RelativeComplex(c, VOID)


def local_subcomplex(
    rc: SimplicialComplex | RelativeComplex, sigma: Iterable[int], kind: str, i: int | None = None
) -> RelativeComplex:
    """Link, star, deletion or skeleton of a relative complex, taken componentwise.

    ``kind`` is one of ``"link"``, ``"star"``, ``"deletion"``, ``"skeleton"``;
    the skeleton keeps the faces of dimension < ``i`` and ignores ``sigma``.
    """
    rc = as_relative(rc)
    s = tuple(sorted(sigma))
    if kind == "link":
        op = lambda c: link(c, s)  # noqa: E731
    elif kind == "star":
        op = lambda c: star(c, s)  # noqa: E731
    elif kind == "deletion":
        op = lambda c: deletion(c, s)  # noqa: E731
    elif kind == "skeleton":
        if i is None:
            raise ValueError("skeleton needs the dimension bound i")
        op = lambda c: skeleton(c, i)  # noqa: E731
    else:
        raise ValueError(f"unknown local subcomplex kind {kind!r}")
    return RelativeComplex(op(rc.delta), op(rc.gamma))


def relative_link(rc: RelativeComplex, sigma: Iterable[int]) -> RelativeComplex:
    return local_subcomplex(rc, sigma, "link")


def relative_star(rc: RelativeComplex, sigma: Iterable[int]) -> RelativeComplex:
    return local_subcomplex(rc, sigma, "star")


# -- f- and h-vectors ---------------------------------------------------------------


@dataclass(frozen=True)
class FHVectors:
    """Face numbers and their binomial transform in degree convention ``d``.

    ``f[i]`` is f_{i-1} (so ``f[0]`` counts the empty face), ``h[k]`` is h_k
    for 0 <= k <= d and ``g[k]`` is h_k - h_{k-1} with h_{-1} = 0.
    """

    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]

    @property
    def chi(self) -> int:
        """Reduced Euler characteristic, sum of (-1)^i f_i over i >= -1."""
        return sum((1 if i % 2 else -1) * x for i, x in enumerate(self.f))

    def f_at(self, i: int) -> int:
        j = i + 1
        return self.f[j] if 0 <= j < len(self.f) else 0

    def h_at(self, k: int) -> int:
        return self.h[k] if 0 <= k < len(self.h) else 0


def f_to_h(f: Sequence[int], d: int) -> tuple[int, ...]:
    """h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}; ``f[i]`` holds f_{i-1}."""
    return tuple(
        sum((-1) ** (k - i) * binom(d - i, k - i) * (f[i] if i < len(f) else 0) for i in range(k + 1))
        for k in range(d + 1)
    )


def h_to_f(h: Sequence[int], d: int) -> tuple[int, ...]:
    """Inverse of :func:`f_to_h`: f_{i-1} = sum_k C(d-k, i-k) h_k."""
    return tuple(
        sum(binom(d - k, i - k) * (h[k] if k < len(h) else 0) for k in range(i + 1)) for i in range(d + 1)
    )


def _f_of_faces(faces: Iterable[Face], d: int) -> list[int]:
    f = [0] * (d + 1)
    for face in faces:
        if len(face) > d:
            raise ValueError(f"face {face} exceeds degree convention d={d}")
        f[len(face)] += 1
    return f


def fh_vectors(
    rc: SimplicialComplex | RelativeComplex, d_override: int | None = None, *, allow_void: bool = False
) -> FHVectors:
    """f-, h- and g-vector of a (relative) complex.

    The degree ``d`` defaults to dim + 1.  A void input is rejected unless
    ``allow_void`` is set together with ``d_override`` (then all vectors vanish).
    """
    rc = as_relative(rc)
    if rc.is_void:
        if not (allow_void and d_override is not None):
            raise VoidComplexError("f- and h-vectors of the void complex are undefined")
        d = d_override
    else:
        d = int(rc.dim) + 1
        if d_override is not None:
            if d_override < d:
                raise ValueError(f"d_override={d_override} is below dim+1={d}")
            d = d_override
    f = _f_of_faces(rc.faces, d)
    h = f_to_h(f, d)
    g = tuple(h[k] - (h[k - 1] if k else 0) for k in range(d + 1))
    return FHVectors(d, tuple(f), h, g)


def hilbert_numerator(rc: SimplicialComplex | RelativeComplex, ell: int, max_degree: int) -> tuple[int, ...]:
    """Coefficients of (1 - t)^ell Hilb(M[rc], t) in degrees 0..max_degree."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    rc = as_relative(rc)
    counts: dict[int, int] = {}
    for face in rc.faces:
        counts[len(face)] = counts.get(len(face), 0) + 1
    return tuple(
        sum((-1) ** (i - k) * binom(ell - k, i - k) * counts.get(k, 0) for k in range(i + 1))
        for i in range(max_degree + 1)
    )


def local_h_sum(rc: RelativeComplex, k: int) -> int:
    """Sum over the vertices v of Δ of h_k(Lk(v, rc)) in degree convention d - 1."""
    d = int(rc.dim) + 1
    total = 0
    for v in rc.delta.vertices:
        lk = relative_link(rc, (v,))
        total += fh_vectors(lk, d - 1, allow_void=True).h_at(k)
    return total


# -- fullness ------------------------------------------------------------------------


def is_full(delta: SimplicialComplex, gamma: SimplicialComplex) -> bool:
    """Whether Γ = Δ ∩ K_{V(Γ)}."""
    if not gamma.is_subcomplex_of(delta):
        raise NotSubcomplexError("gamma is not a subcomplex of delta")
    if gamma.is_void:
        return delta.is_void
    return induced(delta, gamma.vertices).faces == gamma.faces


def is_full_by_stars(delta: SimplicialComplex, gamma: SimplicialComplex) -> bool:
    """Vertex-star test: St(v, Γ) = St(v, Δ) ∩ Γ for every vertex v of Γ."""
    if not gamma.is_subcomplex_of(delta):
        raise NotSubcomplexError("gamma is not a subcomplex of delta")
    if gamma.is_void:
        return delta.is_void
    if gamma.is_empty_complex:
        return not delta.vertices or all((v,) not in gamma.faces for v in delta.vertices)
    return all(star(gamma, (v,)).faces == star(delta, (v,)).faces & gamma.faces for v in gamma.vertices)


# -- arrangements, posets, nerves ---------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    ambient: SimplicialComplex
    members: tuple[SimplicialComplex, ...]

    def __post_init__(self) -> None:
        for g in self.members:
            if not g.is_subcomplex_of(self.ambient):
                raise NotSubcomplexError("arrangement member is not a subcomplex of the ambient complex")

    @cached_property
    def fullness_flags(self) -> tuple[bool, ...]:
        return tuple(is_full(self.ambient, g) for g in self.members)

    @property
    def is_full(self) -> bool:
        return all(self.fullness_flags)

    @cached_property
    def support(self) -> SimplicialComplex:
        return union(*self.members) if self.members else VOID

    def at_vertex(self, v: int) -> Arrangement:
        """The members that contain the vertex v."""
        return Arrangement(self.ambient, tuple(g for g in self.members if (v,) in g.faces))


@dataclass(frozen=True)
class IntersectionPoset:
    """Distinct intersections of arrangement members together with the ambient
    complex, ordered by reverse inclusion, with the Möbius function from the
    ambient complex (``elements[0]``)."""

    elements: tuple[SimplicialComplex, ...]
    mobius: tuple[int, ...]

    def below(self, i: int) -> list[int]:
        fi = self.elements[i].faces
        return [j for j, e in enumerate(self.elements) if j != i and fi < e.faces]


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    seen: dict[frozenset[Face], SimplicialComplex] = {arr.ambient.faces: arr.ambient}
    m = len(arr.members)
    for r in range(1, m + 1):
        for idx in combinations(range(m), r):
            faces = arr.members[idx[0]].faces
            for j in idx[1:]:
                faces = faces & arr.members[j].faces
            if faces not in seen:
                seen[faces] = from_faces(faces)
    rest = sorted((c for k, c in seen.items() if k != arr.ambient.faces), key=lambda c: -len(c.faces))
    elements = (arr.ambient, *rest)
    mu: list[int] = []
    for i, e in enumerate(elements):
        if i == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[j] for j in range(i) if e.faces < elements[j].faces))
    return IntersectionPoset(elements, tuple(mu))


def coarse_nerve(arr: Arrangement) -> SimplicialComplex:
    """Union of the full simplices on the vertex sets of the members."""
    gens = [g.vertices for g in arr.members if not g.is_void]
    return build_complex(gens) if gens else VOID


# -- shelling, Euler characteristics ----------------------------------------------


def verify_relative_shelling(
    rc: SimplicialComplex | RelativeComplex, facet_order: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], int]:
    """Check that ``facet_order`` (a build-up order of the facets of Δ outside Γ)
    is a relative shelling and return the h-vector it produces.

    Facet F_j is attached to (<F_1, .., F_{j-1}> ∪ Γ, Γ); going backwards this
    is the deletion step of F_j, which needs the part of the earlier complex
    inside F_j to be pure of codimension one.  The faces added by F_j then
    form an interval [σ, F_j] and h_{|σ|} grows by one.  Returns ``(h, d)``;
    raises :class:`ShellingError` naming the first failing step.
    """
    rc = as_relative(rc)
    order = [tuple(sorted(f)) for f in facet_order]
    if sorted(order) != sorted(rc.facets) or len(set(order)) != len(order):
        raise ShellingError(0, "order does not list exactly the facets of Δ outside Γ")
    if not rc.is_pure:
        raise ShellingError(0, "relative complex is not pure")
    d = int(rc.dim) + 1
    h = [0] * (d + 1)
    gamma = rc.gamma.faces
    current: set[Face] = set(gamma)
    for step, facet in enumerate(order, start=1):
        sub = set(subsets(facet))
        before = {t for t in sub if t in current and t not in gamma}
        if before:
            top = max(len(t) for t in before)
            maximal = [t for t in before if not any(set(t) < set(u) for u in before)]
            if top != len(facet) - 1 or any(len(t) != top for t in maximal):
                raise ShellingError(step, "intersection with earlier facets is not pure of codimension one")
        new = [t for t in sub if t not in current]
        minimal = [t for t in new if not any(set(u) < set(t) for u in new)]
        if len(minimal) != 1:
            raise ShellingError(step, "added faces have no unique minimal element")
        sigma = minimal[0]
        if len(new) != 2 ** (len(facet) - len(sigma)):
            raise ShellingError(step, "added faces do not form an interval")
        h[len(sigma)] += 1
        current |= sub
    return tuple(h), d


def reduced_euler(rc: SimplicialComplex | RelativeComplex) -> int:
    rc = as_relative(rc)
    return sum((1 if len(f) % 2 else -1) for f in rc.faces)


def is_eulerian(rc: SimplicialComplex | RelativeComplex, weak: bool = False) -> bool:
    """χ(Lk(σ, rc)) = (-1)^{dim Lk(σ, rc)} for all faces σ of rc (nonempty ones if weak)."""
    rc = as_relative(rc)
    if rc.is_void:
        return False
    if not weak and not rc.is_pure:
        return False
    for sigma in rc.faces:
        if weak and not sigma:
            continue
        lk = relative_link(rc, sigma)
        if lk.is_void:
            return False
        if reduced_euler(lk) != (1 if int(lk.dim) % 2 == 0 else -1):
            return False
    return True


def dehn_sommerville_rhs(rc: RelativeComplex, i: int) -> int:
    """Predicted h_{d-i}(rc) for weakly Eulerian rc: h_i(Δ) + (-1)^i C(d,i)((-1)^{d-1}χ - 1)."""
    fv = fh_vectors(rc)
    d = fv.d
    hd = fh_vectors(rc.delta, d).h_at(i)
    return hd + (-1) ** i * binom(d, i) * ((-1) ** (d - 1) * fv.chi - 1)
