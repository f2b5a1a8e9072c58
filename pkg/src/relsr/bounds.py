"""Upper-bound functions for spheres, balls, arrangements and Minkowski sums.

The Minkowski part revolves around :class:`BoundTable`: for every subfamily S
of a family with vertex counts ``alpha`` it stores the renormalized h-numbers
h̃_j(T°_S) of a neighborly-type extremal family, j = 0..D_S with
D_S = ξ(α_S) + |S| - 1.  Everything else (h-bounds of T_S, f-bounds of the
Minkowski sum, mixed bounds) is derived from the table.

Conventions used throughout:

* ξ(α_S) = min(d, |α_S| - |S|) is the dimension of the partial sum.
* h̃_j(T°_S) = h_j(T°_S) + (-1)^(j-|S|+1) C(D_S, j); as power series
  h̃_S(t) = h_S(t) + (-1)^(|S|-1) (1-t)^(D_S).
* A subfamily is *deficient* when ξ(α_S) < d.  Its relative Cayley complex
  consists of the faces of a simplex on |α_S| vertices that meet every label
  class, so its h̃-numbers are known in closed form at every index (the series
  does not terminate at D_S because the simplex itself is a face).
* Table values at negative indices are 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .complexes import (
    Face,
    RelativeComplex,
    SimplicialComplex,
    binom,
    fh_vectors,
    h_to_f,
)
from .homology import BettiTable

Subset = frozenset[int]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _subsets(ground: Iterable[int], *, nonempty: bool = True, proper_of: Subset | None = None) -> list[Subset]:
    g = sorted(ground)
    out = []
    for r in range(1 if nonempty else 0, len(g) + 1):
        for c in combinations(g, r):
            s = frozenset(c)
            if proper_of is not None and s == proper_of:
                continue
            out.append(s)
    return out


# -- spheres, balls, manifolds, arrangements ---------------------------------------


def ubt_h_bound(n: int, d: int, k: int) -> int:
    """Upper bound C(n-d+k-1, k) for h_k of a Cohen-Macaulay (d-1)-complex on n vertices."""
    if not 0 <= k <= d:
        raise ValueError("need 0 <= k <= d")
    if n < d:
        raise ValueError("need n >= d")
    return binom(n - d + k - 1, k)


def iso_ball_bounds(m: int, n: int, d: int, k: int, variant: str = "full") -> int:
    """Bound on h_k(Δ, ∂Δ) for a (d-1)-ball with m interior and n boundary vertices.

    ``variant="glbc"`` assumes the generalized lower bound inequalities for
    ∂Δ; ``variant="full"`` assumes ∂Δ is a full subcomplex of Δ.
    """
    if variant not in ("glbc", "full"):
        raise ValueError("variant must be 'glbc' or 'full'")
    if 2 * k > d:
        return binom(m + n - 1 - k, d - k)
    value = binom(m + n - d + k - 1, k)
    if variant == "full":
        value -= binom(n - d + k - 1, k)
    return value


def topological_term(d: int, k: int, betti: BettiTable) -> int:
    """C(d, k) Σ_{i<k} (-1)^(k-i) β̃_{i-1}."""
    return binom(d, k) * sum(_sign(k - i) * betti[i - 1] for i in range(k))


def manifold_iso_bound(m: int, n: int, d: int, k: int, betti: BettiTable) -> int:
    """Bound on h_k(M, B) for a manifold M with a full (d-2)-submanifold B of ∂M."""
    return binom(m + n - d + k - 1, k) - binom(n - d + k - 1, k) + topological_term(d, k, betti)


def union_mobius(m: int, ell: int, size: int) -> int:
    """Möbius value μ(Δ, Γ_U), |U| = size, in the poset of unions of at most ``ell``
    of m pairwise disjoint members (size 0 is the empty complex)."""
    return -sum(_sign(j) * binom(m - size, j) for j in range(ell - size + 1))


def arrangement_bound(f0_ambient: int, member_f0: Sequence[int], d: int, k: int, ell: int | None = None) -> int:
    """Bound on h_k(Δ, ∪Γ_i) for pairwise disjoint codimension-one CM members of a
    CM (d-1)-complex Δ.

    Without ``ell`` the members form a full arrangement.  With ``ell`` every
    union of at most ``ell`` members is assumed full; the bound is then the
    nerve-ideal count over the poset of such unions, plus the topological part
    of (Δ, ∪Γ_i) (β̃_1 = m - 1), minus the Betti correction of the coarse nerve,
    which is homotopy equivalent to the (ell-1)-skeleton of an (m-1)-simplex.
    """
    m = len(member_f0)
    if ell is None:
        ell = 1
    if ell < 1:
        raise ValueError("ell must be positive")
    ell = min(ell, m) if m else 1
    total = binom(f0_ambient - d + k - 1, k)
    for size in range(0, ell + 1):
        mu = union_mobius(m, ell, size)
        if not mu:
            continue
        for U in combinations(range(m), size):
            total += mu * binom(sum(member_f0[i] for i in U) - d + k - 1, k)
    if m and k >= 3:
        total += _sign(k) * (m - 1) * binom(d, k)
    if m and k >= ell + 2:
        total += _sign(k + ell) * binom(m - 1, ell) * binom(d, k)
    return total


def two_summand_bound(n1: int, n2: int, d: int, k: int) -> int:
    """Bound on h_{k+1}(T°) for two simplicial d-polytopes with n1, n2 vertices."""
    offset = _sign(k + 1) * binom(d + 1, k + 1)
    if k + 1 <= (d + 1) // 2:
        return (binom(n1 + n2 - d + k - 1, k + 1) - binom(n1 - d + k - 1, k + 1)
                - binom(n2 - d + k - 1, k + 1) + offset)
    return binom(n1 + n2 - k - 2, d - k) + offset


# -- the c-functions -------------------------------------------------------------------


def c_prime(k: int, m: int, d: int) -> int:
    """2k + 2m - 1 - d, i.e. the value with k + m - 1 = (d + c' - 1)/2."""
    return 2 * k + 2 * m - 1 - d


def c_value(k: int, m: int, d: int) -> int:
    """c'(k, m, d) clamped to the range [1, m]."""
    return min(m, max(c_prime(k, m, d), 1))


# -- the bound table -------------------------------------------------------------------


def xi(alpha_s: Iterable[int], d: int) -> int:
    """Dimension min(d, |α_S| - |S|) of a generic partial sum (0 for S = ∅)."""
    a = list(alpha_s)
    if not a:
        return 0
    return min(d, sum(a) - len(a))


def initial_term(alpha_s: Sequence[int], e: int, j: int) -> int:
    """Σ_{∅≠R⊆S} (-1)^{|S|-|R|} C(|α_R| - e + k - 1, j), with k = j - |S| + 1."""
    s = len(alpha_s)
    k = j - s + 1
    total = 0
    for r in range(1, s + 1):
        for R in combinations(range(s), r):
            total += _sign(s - r) * binom(sum(alpha_s[i] for i in R) - e + k - 1, j)
    return total


def ds_correction(alpha_s: Sequence[int], d: int, j: int) -> int:
    """Correction in h(T_S)_{D-j} = h̃_j(T°_S) + correction, at index j.

    It collects the deficient proper subfamilies R (ξ(α_R) < ξ(α_S)):
    Σ_R (-1)^{|S|-1+|R|} [t^j] (1-t)^{D_S - |α_R|}.  It depends on α only.
    """
    s = len(alpha_s)
    e = xi(alpha_s, d)
    D = e + s - 1
    total = 0
    for r in range(1, s):
        for R in combinations(range(s), r):
            sub = [alpha_s[i] for i in R]
            if xi(sub, d) < e:
                total += _sign(s - 1 + r) * _sign(j) * binom(D - sum(sub), j)
    return total


def _conv(ell: int, values: Sequence[int], j: int) -> int:
    """[t^j] (1 - t)^ell · Σ_i values[i] t^i (values beyond the list are 0)."""
    return sum(_sign(t) * binom(ell, t) * values[j - t] for t in range(min(ell, j) + 1) if j - t < len(values))


@dataclass(frozen=True)
class BoundTable:
    """h̃-bounds of every subfamily, plus what is derived from them.

    ``values[S][j]`` is the bound for h̃_j(T°_S), j = 0..D_S; ``h_bounds[S]``
    holds the resulting bounds for h_j(T_S) (the table version of the Cayley
    complex itself).  Deficient entries are exact.
    """

    alpha: tuple[int, ...]
    d: int
    mode: str
    values: dict[Subset, tuple[int, ...]] = field(compare=False)
    h_bounds: dict[Subset, tuple[int, ...]] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.alpha)

    @property
    def full(self) -> Subset:
        return frozenset(range(self.m))

    def alpha_of(self, S: Iterable[int]) -> list[int]:
        return [self.alpha[i] for i in sorted(S)]

    def e(self, S: Iterable[int]) -> int:
        return xi(self.alpha_of(S), self.d)

    def D(self, S: Iterable[int]) -> int:
        S = frozenset(S)
        return self.e(S) + len(S) - 1

    def is_deficient(self, S: Iterable[int]) -> bool:
        return self.e(S) < self.d

    def htilde(self, S: Iterable[int], j: int) -> int:
        """Table value h̃_j for the subfamily S (0 at negative indices; deficient
        subfamilies are evaluated in closed form at any index)."""
        S = frozenset(S)
        if j < 0 or not S:
            return 0
        if self.is_deficient(S):
            return deficient_htilde(self.alpha_of(S), j)
        vals = self.values[S]
        return vals[j] if j < len(vals) else 0

    def htilde_series(self, S: Iterable[int], length: int) -> list[int]:
        return [self.htilde(S, j) for j in range(length)]

    def gtilde(self, S: Iterable[int], ell: int, j: int) -> int:
        """g̃^⟨ℓ⟩_j = Σ_i (-1)^i C(ℓ, i) h̃_{j-i}."""
        return sum(_sign(i) * binom(ell, i) * self.htilde(S, j - i) for i in range(ell + 1))

    def h_offset(self, S: Iterable[int], j: int) -> int:
        """h̃_j - h_j = (-1)^(j-|S|+1) C(D_S, j)."""
        S = frozenset(S)
        return _sign(j - len(S) + 1) * binom(self.D(S), j)

    def h_tcirc(self, S: Iterable[int] | None = None) -> tuple[int, ...]:
        """Bounds for h_j(T°_S), j = 0..D_S."""
        S = self.full if S is None else frozenset(S)
        return tuple(self.htilde(S, j) - self.h_offset(S, j) for j in range(self.D(S) + 1))

    def f_tcirc(self, S: Iterable[int] | None = None) -> tuple[int, ...]:
        """Bounds for the face numbers of T°_S; entry i counts faces with i vertices."""
        S = self.full if S is None else frozenset(S)
        if self.is_deficient(S):
            a = self.alpha_of(S)
            return tuple(_label_complete(a, i) for i in range(sum(a) + 1))
        return h_to_f(self.h_tcirc(S), self.D(S))

    def nb_f(self, S: Iterable[int] | None = None) -> tuple[int, ...]:
        """Bounds f_k(|P_S|), k = 0..d-1; a lower dimensional sum counts itself once."""
        S = self.full if S is None else frozenset(S)
        f = self.f_tcirc(S)
        s = len(S)
        return tuple(f[k + s] if k + s < len(f) else 0 for k in range(self.d))


def _label_complete(alpha_s: Sequence[int], size: int) -> int:
    """Number of vertex sets of the given size meeting every label class."""
    s = len(alpha_s)
    return sum(
        _sign(s - r) * binom(sum(alpha_s[i] for i in R), size)
        for r in range(0, s + 1)
        for R in combinations(range(s), r)
    )


def deficient_htilde(alpha_s: Sequence[int], j: int) -> int:
    """h̃_j of the label-complete part of a simplex on |α_S| vertices.

    As a series this is Σ_{∅≠R⊆S} (-1)^{|S|-|R|} (1-t)^{D_S - |α_R|} with
    D_S = |α_S| - 1, which is the initial-terms expression with e = ξ(α_S).
    """
    return initial_term(alpha_s, xi(alpha_s, 10**9), j)


class InconsistentTableError(AssertionError):
    pass


def _build(alpha: Sequence[int], d: int, mode: str) -> BoundTable:
    alpha = tuple(int(a) for a in alpha)
    if not alpha:
        raise ValueError("need at least one summand")
    if any(a < 1 for a in alpha):
        raise ValueError("vertex counts must be positive")
    if d < 1:
        raise ValueError("d must be positive")
    m = len(alpha)
    values: dict[Subset, tuple[int, ...]] = {}
    h_bounds: dict[Subset, tuple[int, ...]] = {}
    table = BoundTable(alpha, d, mode, values, h_bounds)
    for S in sorted(_subsets(range(m)), key=lambda s: (len(s), sorted(s))):
        a = table.alpha_of(S)
        s = len(S)
        e = table.e(S)
        D = e + s - 1
        if e < d:
            values[S] = tuple(deficient_htilde(a, j) for j in range(D + 1))
            h_bounds[S] = tuple(_linear(table, S, j) for j in range(D + 1))
            continue
        vals = [0] * (D + 1)
        half = D // 2
        for j in range(half + 1):
            vals[j] = initial_term(a, e, j)
        values[S] = tuple(vals)
        for j in range(half + 1, D + 1):
            # h(T_S)_{D-j} only involves h̃_S below index D - j < j and smaller subfamilies
            vals[j] = _linear(table, S, D - j) - ds_correction(a, d, j)
            values[S] = tuple(vals)
        h_bounds[S] = tuple(_linear(table, S, j) for j in range(D + 1))
    problems = check_table(table)
    if problems:
        raise InconsistentTableError("; ".join(problems[:5]))
    return table


def _linear(table: BoundTable, S: Subset, j: int) -> int:
    """Linearity: h(T_S)_j = Σ_{∅≠R⊆S} g̃^⟨ℓ_R⟩_j(T°_R), ℓ_R = |S| - |R| + ξ_S - ξ_R."""
    s, e = len(S), table.e(S)
    total = 0
    for R in _subsets(S):
        ell = s - len(R) + e - table.e(R)
        total += table.gtilde(R, ell, j)
    return total


def mubt_table(alpha: Sequence[int], d: int) -> BoundTable:
    """Table for a pure family (all α_i ≥ d + 1); other vectors go to :func:`nu_table`."""
    if any(a < d + 1 for a in alpha):
        return nu_table(alpha, d)
    return _build(alpha, d, "mubt")


def nu_table(alpha: Sequence[int], d: int) -> BoundTable:
    """Table for arbitrary positive vertex counts."""
    return _build(alpha, d, "nu")


def bound_table(alpha: Sequence[int], d: int, mode: str | None = None) -> BoundTable:
    if mode is None:
        mode = "mubt" if all(a >= d + 1 for a in alpha) else "nu"
    if mode == "mubt":
        if any(a < d + 1 for a in alpha):
            raise ValueError("mubt mode needs every vertex count >= d + 1")
        return mubt_table(alpha, d)
    if mode == "nu":
        return nu_table(alpha, d)
    raise ValueError(f"unknown mode {mode!r}")


def check_table(table: BoundTable, max_ell: int | None = None) -> list[str]:
    """Re-evaluate the defining conditions on a table; returns the violations.

    (a) g̃^⟨ℓ⟩ = g̃^⟨ℓ-1⟩ - shifted g̃^⟨ℓ-1⟩; (b) the stored h-bounds equal the
    linear combination of the h̃ series (evaluated through explicit
    polynomial products); (c) the Dehn-Sommerville relation with its
    correction term at every index of every full-dimensional subfamily;
    (d) the initial terms on the lower half (at every index for deficient
    subfamilies, whose entries are exact); and h̃_0 = (-1)^{|S|-1}.
    """
    bad: list[str] = []
    d = table.d
    for S in _subsets(range(table.m)):
        s, e, D = len(S), table.e(S), table.D(S)
        a = table.alpha_of(S)
        if table.htilde(S, 0) != _sign(s - 1):
            bad.append(f"S={sorted(S)}: h̃_0 != (-1)^(|S|-1)")
        top = max_ell if max_ell is not None else D + 1
        for ell in range(1, top + 1):
            for j in range(D + 1):
                lhs = table.gtilde(S, ell, j)
                rhs = table.gtilde(S, ell - 1, j) - table.gtilde(S, ell - 1, j - 1)
                if lhs != rhs:
                    bad.append(f"(a) S={sorted(S)} ell={ell} j={j}")
        hb = table.h_bounds[S]
        for j in range(D + 1):
            lin = 0
            for R in _subsets(S):
                ell = s - len(R) + e - table.e(R)
                lin += _conv(ell, table.htilde_series(R, j + 1), j)
            if lin != hb[j]:
                bad.append(f"(b) S={sorted(S)} j={j}: {hb[j]} != {lin}")
        for j in range(D + 1 if e == d else 0):
            if hb[D - j] != table.htilde(S, j) + ds_correction(a, d, j):
                bad.append(f"(c) S={sorted(S)} j={j}")
        last = D if e < d else D // 2
        for j in range(last + 1):
            if table.htilde(S, j) != initial_term(a, e, j):
                bad.append(f"(d) S={sorted(S)} j={j}")
    return bad


# -- f-vector bounds -------------------------------------------------------------------


def nb_f_bound(alpha: Sequence[int], d: int) -> tuple[int, ...]:
    """Bounds on f_0..f_{d-1} of a Minkowski sum with the given vertex counts."""
    return nu_table(alpha, d).nb_f()


def trivial_f_bound(alpha: Sequence[int], k: int) -> int:
    """Σ over α' with 1 ≤ α'_i ≤ α_i and |α'| = k + m of Π C(α_i, α'_i)."""
    m = len(alpha)

    def count(i: int, left: int) -> int:
        if i == m:
            return 1 if left == 0 else 0
        return sum(binom(alpha[i], x) * count(i + 1, left - x) for x in range(1, min(alpha[i], left) + 1))

    return count(0, k + m)


def mixed_h(h_of: dict[Subset, Sequence[int]], m: int, d: int) -> dict[int, int]:
    """h^mix_{i+m-1} = Σ_S (-1)^{m-|S|} h_{i+|S|-1}(T°_S) for -m+1 <= i <= d.

    ``h_of[S]`` holds h(T°_S) (or a bound for it) in degree d + |S| - 1.
    """
    out = {}
    for i in range(-m + 1, d + 1):
        total = 0
        for S, h in h_of.items():
            if not S:
                continue
            j = i + len(S) - 1
            if 0 <= j < len(h):
                total += _sign(m - len(S)) * h[j]
        out[i] = total
    return out


def mixed_f_from_h(hmix: dict[int, int], d: int) -> tuple[int, ...]:
    """Σ_i C(d - i, k + 1 - i) h^mix_{i+m-1} for k = 0..d-1; equals the inclusion-exclusion
    Σ_S (-1)^{m-|S|} f_k(|P_S|)."""
    return tuple(sum(binom(d - i, k + 1 - i) * v for i, v in hmix.items()) for k in range(d))


@dataclass(frozen=True)
class MixedBounds:
    h_mix: dict[int, int]
    f_mix: tuple[int, ...]
    facet_claim_applies: bool


def mixed_bounds(alpha: Sequence[int], d: int, table: BoundTable | None = None) -> MixedBounds:
    """Mixed h- and f-bounds from the table; the mixed-facet claim needs 0 < m < d."""
    table = table or nu_table(alpha, d)
    m = table.m
    h_of = {S: table.h_tcirc(S) for S in _subsets(range(m))}
    hm = mixed_h(h_of, m, d)
    return MixedBounds(hm, mixed_f_from_h(hm, d), 0 < m < d)


# -- recursive identities on concrete h̃ data -------------------------------------------


def recursive_decomposition(htilde: dict[Subset, Sequence[int]], m: int, d: int, k: int) -> Fraction:
    """The pairing of the stratification identity, evaluated at index k + m - 1.

    ``htilde[S]`` holds h̃(T°_S) for every nonempty S (the empty family
    contributes 0).  Valid for k + m - 1 <= (d + m - 1)/2 on pure families.
    """

    def ht(S: Subset, j: int) -> int:
        if not S or j < 0:
            return 0
        v = htilde[S]
        return v[j] if j < len(v) else 0

    c = c_value(k, m, d)
    total = Fraction(0)
    subsets_by_size: dict[int, list[Subset]] = {}
    for S in _subsets(range(m), nonempty=False):
        subsets_by_size.setdefault(len(S), []).append(S)

    def covered(S: Subset) -> list[Subset]:
        return [S - {i} for i in S]

    for j in range(m // 2 + 1):
        for s in range(c - 2 * j + 1, m - 2 * j + 1):
            for S in subsets_by_size.get(s, []):
                inner = sum(ht(R, k + m - 2 - 2 * j) for R in covered(S))
                total += binom(m - s, 2 * j) * (ht(S, k + m - 1 - 2 * j) - Fraction(inner, 2 * j + 1))
        s = c - 2 * j
        if s < 0:
            continue
        for S in subsets_by_size.get(s, []):
            inner = sum(ht(R, k + m - 2 - 2 * j) for R in covered(S))
            coeff = Fraction(m - s, (m - s + 1) * (2 * j + 1))
            total += binom(m - s - 1, 2 * j) * (ht(S, k + m - 1 - 2 * j) - coeff * inner)
    return total


# -- verification against a concrete family ---------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    tight: tuple[int, ...] = ()


@dataclass(frozen=True)
class FamilyReport:
    alpha: tuple[int, ...]
    d: int
    checks: tuple[CheckResult, ...]
    mixed_nonface_dim: int | None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def by_name(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def smallest_mixed_nonface(t: SimplicialComplex, labels: Sequence[int], m: int, max_size: int) -> int | None:
    """Dimension of the smallest minimal non-face of T whose vertices carry all m labels."""
    faces = t.faces
    verts = sorted(t.vertices)
    for size in range(m, max_size + 1):
        for c in combinations(verts, size):
            if len({labels[v] for v in c}) < m or c in faces:
                continue
            if all(c[:i] + c[i + 1:] in faces for i in range(size)):
                return size - 1
    return None


def _face_counts(rel: RelativeComplex) -> list[int]:
    """Entry i counts the faces of rel with i vertices."""
    f: list[int] = []
    for face in rel.faces:
        while len(f) <= len(face):
            f.append(0)
        f[len(face)] += 1
    return f or [0]


def _h_series(f: Sequence[int], D: int, j: int) -> int:
    """[t^j] Σ_i f_{i-1} t^i (1-t)^{D-i}, with generalized binomials for i > D."""
    return sum(_sign(j - i) * binom(D - i, j - i) * f[i] for i in range(min(j, len(f) - 1) + 1))


def verify_family(family, table: BoundTable | None = None) -> FamilyReport:
    """Run the Minkowski-sum checks on a concrete generic family in R^d."""
    from .geometry import cayley_complex, check_relative_general_position, minkowski_sum, mixed_faces

    d, m = family.d, family.m
    alpha = tuple(family.vertex_counts)
    if not check_relative_general_position(family):
        raise ValueError("family is not in relatively general position")
    data = cayley_complex(family)
    table = table or nu_table(alpha, d)
    pure = all(a >= d + 1 for a in alpha)
    e_full = table.e(table.full)
    D = e_full + m - 1
    checks: list[CheckResult] = []

    subs = _subsets(range(m))
    f_of: dict[Subset, list[int]] = {}
    h_of: dict[Subset, tuple[int, ...]] = {}
    ht_of: dict[Subset, list[int]] = {}
    for S in subs:
        rel = data.sub_relative(S)
        DS = table.D(S)
        f = _face_counts(rel)
        f_of[S] = f
        h_of[S] = tuple(_h_series(f, DS, j) for j in range(DS + 1))
        ht_of[S] = [_h_series(f, DS, j) + table.h_offset(S, j) for j in range(D + 2)]
    hT = fh_vectors(data.complex, D).h

    def hT_at(j: int) -> int:
        return hT[j] if 0 <= j < len(hT) else 0

    full = table.full
    f0 = {S: len(data.vertices_of(S)) for S in subs}

    # (i) small-h bound via the non-face count
    viol, tight = [], []
    if pure:
        for k in range(-m + 1, d + 1):
            j = k + m - 1
            bound = sum(_sign(m - len(S)) * binom(f0.get(S, 0) - d + k - 1, j)
                        for S in _subsets(range(m), nonempty=False))
            val = h_of[full][j]
            if 2 * j <= D:
                if val > bound:
                    viol.append(j)
                elif val == bound:
                    tight.append(j)
        checks.append(CheckResult("minkh", not viol, f"violations at {viol}" if viol else "", tuple(tight)))

    # (ii) one-step inequality relating g_j to non-faces of the subfamilies
    if pure and m >= 1:
        viol, tight = [], []
        rest = {i: full - {i} for i in range(m)}

        def g_of(S: Subset, j: int) -> int:
            if not S:
                return 0 if j != 0 else 1
            h = h_of[S]
            a = h[j] if 0 <= j < len(h) else 0
            b = h[j - 1] if 0 <= j - 1 < len(h) else 0
            return a - b

        for k in range(-m + 1, d + 1):
            j = k + m
            if 2 * (j - 1) > D - 1:
                break
            lhs = j * g_of(full, j)
            rhs = (f0[full] - d - m) * h_of[full][j - 1] + sum(
                f0[frozenset({i})] * g_of(rest[i], j - 1) for i in range(m))
            if lhs > rhs:
                viol.append(j)
            elif lhs == rhs:
                tight.append(j)
        checks.append(CheckResult("minkit", not viol, f"violations at {viol}" if viol else "", tuple(tight)))

    # (iii) Dehn-Sommerville duality of the Cayley complex
    a_full = list(alpha)
    bad = [j for j in range(D + 1) if hT_at(D - j) != ht_of[full][j] + ds_correction(a_full, d, j)]
    checks.append(CheckResult("dsm", not bad, f"mismatch at {bad}" if bad else ""))

    # (iv) stratification identity
    bad = []
    for j in range(D + 1):
        total = 0
        for S in subs:
            ell = m - len(S) + e_full - table.e(S)
            total += _conv(ell, ht_of[S][: j + 1], j)
        if total != hT_at(j):
            bad.append(j)
    checks.append(CheckResult("stratification", not bad, f"mismatch at {bad}" if bad else ""))

    # (v) the pairing identity of the recursive decomposition (pure families)
    if pure:
        bad = []
        for k in range(-m + 1, d + 1):
            if 2 * (k + m - 1) > D:
                break
            if recursive_decomposition(ht_of, m, d, k) != hT_at(k + m - 1):
                bad.append(k + m - 1)
        checks.append(CheckResult("recursive", not bad, f"mismatch at {bad}" if bad else ""))

    # (vi) the weighted inequality with the parameter delta at its extreme values
    if pure:
        deltas = [Fraction(0), Fraction(1)] + ([Fraction(d + 1, d - 1)] if d > 1 else [])
        viol, tight = [], []
        cov = [full - {i} for i in range(m)] if m > 1 else []

        def gt(S: Subset, j: int, src) -> int:
            return src(S, j) - src(S, j - 1)

        def obs(S: Subset, j: int) -> int:
            return ht_of[S][j] if S and 0 <= j < len(ht_of[S]) else 0

        for k in range(-m + 1, d + 1):
            j = k + m - 1
            if 2 * j > D or j < 1:
                continue
            for delta in deltas:
                lhs = gt(full, j, obs) - delta * sum(gt(S, j - 1, obs) for S in cov)
                rhs = gt(full, j, table.htilde) - delta * sum(gt(S, j - 1, table.htilde) for S in cov)
                if lhs > rhs:
                    viol.append((j, str(delta)))
                elif lhs == rhs and delta == 0:
                    tight.append(j)
        checks.append(CheckResult("cenm", not viol, f"violations at {viol}" if viol else "", tuple(tight)))

    # (vii) domination by the table
    viol, tight = [], []
    for j in range(D + 1):
        if 2 * j > D:
            break
        val, bound = ht_of[full][j], table.htilde(full, j)
        if val > bound:
            viol.append(("h~", j))
        elif val == bound:
            tight.append(j)
        if 2 * j < D and hT_at(j) > table.h_bounds[full][j]:
            viol.append(("h", j))
    checks.append(CheckResult("table", not viol, f"violations at {viol}" if viol else "", tuple(tight)))

    # (viii) mixed identities (pure collections)
    if pure:
        sums = {S: minkowski_sum(family.sub(sorted(S))) for S in subs}
        ie = [sum(_sign(m - len(S)) * sums[S].f_vector()[k] for S in subs) for k in range(d)]
        hm = mixed_h(h_of, m, d)
        fmix = mixed_faces(family, sums[full])
        via_h = mixed_f_from_h(hm, d)
        bound = mixed_bounds(alpha, d, table).f_mix
        ok = (list(via_h) == ie and all(x <= y for x, y in zip(fmix, ie)) and fmix[d - 1] == ie[d - 1]
              and fmix[d - 1] <= bound[d - 1])
        checks.append(CheckResult("mixed", ok, "" if ok else f"f_mix={fmix} ie={ie} via_h={list(via_h)}",
                                  (d - 1,) if fmix[d - 1] == bound[d - 1] else ()))

    diag = smallest_mixed_nonface(data.complex, data.labels, m, min(len(data.labels), (D + 1) // 2 + 1))
    return FamilyReport(alpha, d, tuple(checks), diag)
