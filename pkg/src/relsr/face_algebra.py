"""Degree-truncated face modules M[Δ, Γ] = I_Γ / I_Δ and their quotients by
linear systems of parameters."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .complexes import (
    Arrangement,
    Face,
    RelativeComplex,
    SimplicialComplex,
    VoidComplexError,
    as_relative,
    binom,
    coarse_nerve,
    fh_vectors,
    hilbert_numerator,
    intersection,
    intersection_poset,
    is_full,
    skeleton,
    build_complex,
)
from .homology import NotBuchsbaumError, betti, h_top, is_buchsbaum, is_cohen_macaulay
from .linalg import QQ, FieldSpec, dense_rank, sparse_rank

Monomial = tuple[int, ...]  # sorted multiset of variables

RATIONAL_BOX = 10**4
MAX_DRAWS = 32
NODE_BUDGET = 20_000


class DegenerateDrawError(RuntimeError):
    pass


class UncertifiedSystemError(ValueError):
    pass


class SchenzelMismatchError(AssertionError):
    pass


class NotABallError(ValueError):
    pass


class NotFullError(ValueError):
    pass


def _monomials_on(face: Face, k: int) -> list[Monomial]:
    """Degree-k monomials whose support is exactly ``face``."""
    s = len(face)
    if s == 0:
        return [()] if k == 0 else []
    if k < s:
        return []
    out = []
    for extra in combinations_with_replacement(face, k - s):
        out.append(tuple(sorted(face + extra)))
    return out


@dataclass(frozen=True)
class GradedModule:
    """Monomial basis of M[rc] in degrees 0..max_degree.

    ``variables`` fixes the polynomial ring; it defaults to the vertices of Δ
    and can be enlarged so that modules of subcomplexes live over one ring.
    """

    rc: RelativeComplex
    max_degree: int
    variables: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.variables:
            object.__setattr__(self, "variables", self.rc.delta.vertices)

    @property
    def n(self) -> int:
        return len(self.variables)

    @cached_property
    def basis(self) -> tuple[tuple[Monomial, ...], ...]:
        faces = sorted(self.rc.faces, key=lambda f: (len(f), f))
        out = []
        for k in range(self.max_degree + 1):
            out.append(tuple(m for f in faces for m in _monomials_on(f, k)))
        return tuple(out)

    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)


@dataclass(frozen=True)
class LinearSystem:
    """Linear forms θ_i; ``theta[i][j]`` is the coefficient of variable ``variables[j]``."""

    theta: tuple[tuple[int, ...], ...]
    variables: tuple[int, ...]
    seed: int
    field: FieldSpec = QQ
    certified_for: frozenset[Face] = frozenset()

    @property
    def length(self) -> int:
        return len(self.theta)

    def column(self, v: int) -> tuple[int, ...]:
        j = self.variables.index(v)
        return tuple(row[j] for row in self.theta)


def _facet_rank_ok(cols: list[tuple[int, ...]], length: int, field: FieldSpec) -> bool:
    if length == 0:
        return True
    return dense_rank(cols, field) == min(length, len(cols))


def certify(theta: LinearSystem, delta: SimplicialComplex) -> bool:
    """Facet-rank criterion: on every facet F the forms have rank min(length, |F|)."""
    if theta.length == 0:
        return True
    for f in delta.facets:
        if not _facet_rank_ok([theta.column(v) for v in f], theta.length, theta.field):
            return False
    return True


def _candidates(rng: random.Random, length: int, field: FieldSpec) -> list[tuple[int, ...]]:
    if field.is_rational:
        return [tuple(rng.randint(-RATIONAL_BOX, RATIONAL_BOX) for _ in range(length)) for _ in range(4)]
    p = field.p
    if p**length <= 256:
        vecs = []
        for code in range(1, p**length):
            vec, c = [], code
            for _ in range(length):
                vec.append(c % p)
                c //= p
            vecs.append(tuple(vec))
        rng.shuffle(vecs)
        return vecs
    return [tuple(rng.randrange(p) for _ in range(length)) for _ in range(16)]


def _search(
    rng: random.Random, delta: SimplicialComplex, variables: tuple[int, ...], length: int, field: FieldSpec
) -> dict[int, tuple[int, ...]] | None:
    facets_of = {v: [f for f in delta.facets if v in f] for v in variables}
    order = list(variables)
    chosen: dict[int, tuple[int, ...]] = {}
    nodes = 0

    def consistent(v: int) -> bool:
        for f in facets_of[v]:
            assigned = [chosen[u] for u in f if u in chosen]
            if len(assigned) == len(f):
                if not _facet_rank_ok(assigned, length, field):
                    return False
            elif len(f) <= length and dense_rank(assigned, field) < len(assigned):
                # columns of a small facet must end up independent
                return False
        return True

    def place(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for cand in _candidates(rng, length, field):
            nodes += 1
            if nodes > NODE_BUDGET:
                return False
            chosen[v] = cand
            if consistent(v) and place(i + 1):
                return True
            del chosen[v]
        return False

    return dict(chosen) if place(0) else None


def generic_lsop(
    rc: SimplicialComplex | RelativeComplex, length: int, seed: int = 0, field: FieldSpec = QQ
) -> LinearSystem:
    """A seeded, certified (partial) linear system of parameters for k[Δ].

    Coefficients are drawn vertex by vertex (integers from a box over ℚ, field
    elements over GF(p)); a draw that breaks the facet-rank criterion is
    replaced, with backtracking, which matters over very small fields where a
    uniform draw is rarely valid.
    """
    rc = as_relative(rc)
    delta = rc.delta
    if delta.is_void:
        raise VoidComplexError("no linear system for the void complex")
    variables = delta.vertices
    if length < 0 or length > len(variables):
        raise ValueError(f"length must lie in 0..{len(variables)}")
    if length == 0:
        return LinearSystem((), variables, seed, field, frozenset(delta.facets))
    for attempt in range(MAX_DRAWS):
        rng = random.Random(f"lsop:{seed}:{attempt}")
        chosen = _search(rng, delta, variables, length, field)
        if chosen is None:
            continue
        theta = tuple(tuple(chosen[v][i] for v in variables) for i in range(length))
        sys_ = LinearSystem(theta, variables, seed, field, frozenset(delta.facets))
        if certify(sys_, delta):
            return sys_
    raise DegenerateDrawError(f"no certified system of length {length} after {MAX_DRAWS} draws")


def quotient_dims(module: GradedModule, theta: LinearSystem, check: bool = True) -> tuple[int, ...]:
    """dim (M / ΘM)_k for k = 0..max_degree by exact elimination, degree by degree."""
    if check and not certify(theta, module.rc.delta):
        raise UncertifiedSystemError("linear system fails the facet-rank criterion")
    delta_faces = module.rc.delta.faces
    col = {v: theta.variables.index(v) for v in module.variables if v in theta.variables}
    dims = []
    prev: tuple[Monomial, ...] = ()
    for k, basis in enumerate(module.basis):
        if k == 0:
            dims.append(len(basis))
            prev = basis
            continue
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for mono in prev:
            supp = set(mono)
            for form in theta.theta:
                row: dict[int, int] = {}
                for v in module.variables:
                    c = form[col[v]] if v in col else 0
                    if not c:
                        continue
                    if v not in supp and tuple(sorted(supp | {v})) not in delta_faces:
                        continue
                    target = index[tuple(sorted(mono + (v,)))]
                    row[target] = row.get(target, 0) + c
                if row:
                    rows.append(row)
        dims.append(len(basis) - sparse_rank(rows, theta.field))
        prev = basis
    return tuple(dims)


@dataclass(frozen=True)
class SchenzelResult:
    h: tuple[int, ...]
    h_alg: tuple[int, ...]
    h_top: tuple[int, ...]
    seed: int

    @property
    def ok(self) -> bool:
        return all(a == b + c for a, b, c in zip(self.h, self.h_alg, self.h_top))


def schenzel_decompose(
    rc: SimplicialComplex | RelativeComplex, field: FieldSpec = QQ, seed: int = 0
) -> SchenzelResult:
    """Compute h, h^alg and h^top independently and insist that h = h^alg + h^top."""
    rc = as_relative(rc)
    if not is_buchsbaum(rc, field):
        raise NotBuchsbaumError("Schenzel decomposition needs a Buchsbaum relative complex")
    d = int(rc.dim) + 1
    h = fh_vectors(rc).h
    top = h_top(rc, field, check=False)
    theta = generic_lsop(rc, d, seed, field)
    alg = quotient_dims(GradedModule(rc, d), theta)
    res = SchenzelResult(h, alg, top, seed)
    if not res.ok:
        raise SchenzelMismatchError(f"h={h} but h_alg={alg}, h_top={top}")
    return res


def nerve_ideal_dims(arr: Arrangement, k: int) -> int:
    """dim of the nerve ideal in degree k via Möbius inversion on the intersection poset."""
    poset = intersection_poset(arr)
    return sum(mu * binom(len(p.vertices) + k - 1, k) for p, mu in zip(poset.elements, poset.mobius))


def nerve_bound(
    delta: SimplicialComplex, arr: Arrangement, k: int, field: FieldSpec = QQ, *, check: bool = True
) -> int:
    """Closed-form dim (N / ΘN)_k for the nerve ideal N of a full arrangement.

    The value is sum_p μ(p) C(f_0(p) - d + k - 1, k) minus the correction
    C(d, k) sum_{i<k} (-1)^(k-i) β̃_{i-2}(𝔑) coming from the coarse nerve 𝔑;
    it bounds h^alg_k of (Δ, ∪G).
    """
    if not arr.is_full:
        raise NotFullError("nerve bound needs a full arrangement")
    d = int(delta.dim) + 1
    nerve = coarse_nerve(arr)
    nerve_sk = skeleton(nerve, d)
    if check:
        n_vertices = delta.vertices
        ambient = skeleton(build_complex([list(n_vertices)]), d)
        if not nerve_sk.is_subcomplex_of(ambient) or not is_buchsbaum(RelativeComplex(ambient, nerve_sk), field):
            raise NotBuchsbaumError("skeleton pair of the coarse nerve is not Buchsbaum")
    poset = intersection_poset(arr)
    main = sum(mu * binom(len(p.vertices) - d + k - 1, k) for p, mu in zip(poset.elements, poset.mobius))
    b = betti(nerve_sk, field) if not nerve_sk.is_void else None
    corr = 0
    if b is not None:
        corr = binom(d, k) * sum((-1) ** (k - i) * b[i - 2] for i in range(k))
    return main - corr


def monotone_quotient_check(
    rc: SimplicialComplex | RelativeComplex, sub_delta: SimplicialComplex, theta: LinearSystem, k: int
) -> bool:
    """dim (M[rc'] / ΘM[rc'])_k <= dim (M[rc] / ΘM[rc])_k for rc' = (Δ', Γ ∩ Δ')."""
    rc = as_relative(rc)
    sub = RelativeComplex(sub_delta, intersection(rc.gamma, sub_delta) if not rc.gamma.is_void else rc.gamma)
    big = quotient_dims(GradedModule(rc, k, theta.variables), theta, check=False)[k]
    small = quotient_dims(GradedModule(sub, k, theta.variables), theta, check=False)[k]
    return small <= big


def boundary_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by codimension-one faces lying in exactly one facet."""
    count: dict[Face, int] = {}
    for f in delta.facets:
        for r in combinations(f, len(f) - 1):
            count[r] = count.get(r, 0) + 1
    return build_complex([list(r) for r, c in count.items() if c == 1])


def check_ball(delta: SimplicialComplex, field: FieldSpec = QQ) -> SimplicialComplex:
    """Return ∂Δ after checking that Δ looks like a homology ball."""
    if delta.is_void or not delta.is_pure or int(delta.dim) < 1:
        raise NotABallError("need a pure complex of dimension >= 1")
    count: dict[Face, int] = {}
    for f in delta.facets:
        for r in combinations(f, len(f) - 1):
            count[r] = count.get(r, 0) + 1
    if any(c > 2 for c in count.values()):
        raise NotABallError("some ridge lies in more than two facets")
    bd = boundary_complex(delta)
    if bd.is_void:
        raise NotABallError("no boundary")
    if not is_cohen_macaulay(delta, field) or any(betti(delta, field).reduced_betti):
        raise NotABallError("not an acyclic Cohen-Macaulay complex")
    rel = betti(RelativeComplex(delta, bd), field)
    expected = [0] * len(rel.reduced_betti)
    expected[-1] = 1
    if list(rel.reduced_betti) != expected:
        raise NotABallError("relative homology of (Δ, ∂Δ) is not that of a ball")
    return bd


def reverse_iso_check(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """h_k(Δ, ∂Δ) >= h_{k-1}(∂Δ) for every k, for a ball whose boundary is full."""
    bd = check_ball(delta, field)
    if not is_full(delta, bd):
        raise NotFullError("boundary is not a full subcomplex")
    d = int(delta.dim) + 1
    inner = fh_vectors(RelativeComplex(delta, bd), d).h
    outer = fh_vectors(bd, d - 1).h
    return all(inner[k] >= (outer[k - 1] if 1 <= k <= len(outer) else 0) for k in range(d + 1))


def regular_sequence_identity(rc: RelativeComplex, theta: LinearSystem, max_degree: int) -> bool:
    """For CM rc: (1 - t)^d Hilb(M, t) agrees with Hilb(M / ΘM, t) up to max_degree."""
    lhs = hilbert_numerator(rc, theta.length, max_degree)
    rhs = quotient_dims(GradedModule(rc, max_degree, theta.variables), theta)
    return tuple(lhs) == tuple(rhs)


def combinatorial_hilbert(rc: RelativeComplex, max_degree: int) -> tuple[int, ...]:
    """dim M_k = sum over faces σ of C(k-1, |σ|-1) (and 1 in degree 0 for the empty face)."""
    out = []
    for k in range(max_degree + 1):
        total = 0
        for f in rc.faces:
            s = len(f)
            total += (1 if k == 0 else 0) if s == 0 else (binom(k - 1, s - 1) if k >= s else 0)
        out.append(total)
    return tuple(out)


def restrict_system(theta: LinearSystem, variables: Sequence[int]) -> LinearSystem:
    idx = [theta.variables.index(v) for v in variables]
    return LinearSystem(tuple(tuple(row[j] for j in idx) for row in theta.theta), tuple(variables), theta.seed, theta.field)
