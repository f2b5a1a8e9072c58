"""Reduced relative homology and the topological predicates built on it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .complexes import (
    Arrangement,
    Face,
    RelativeComplex,
    VOID,
    SimplicialComplex,
    VoidComplexError,
    as_relative,
    binom,
    intersection,
    link,
    relative_link,
    skeleton,
)
from .linalg import QQ, FieldSpec, sparse_rank


class NotBuchsbaumError(ValueError):
    pass


class NotPureError(ValueError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """``reduced_betti[i + 1]`` is the reduced Betti number in dimension i >= -1."""

    reduced_betti: tuple[int, ...]
    field: FieldSpec

    def __getitem__(self, i: int) -> int:
        j = i + 1
        return self.reduced_betti[j] if 0 <= j < len(self.reduced_betti) else 0

    @property
    def top(self) -> int:
        return len(self.reduced_betti) - 2

    def euler(self) -> int:
        return sum((1 if j % 2 else -1) * b for j, b in enumerate(self.reduced_betti))


def _betti_of_faces(faces: frozenset[Face], field: FieldSpec) -> tuple[int, ...]:
    if not faces:
        return ()
    top = max(len(f) for f in faces)
    by_size: list[list[Face]] = [[] for _ in range(top + 1)]
    for f in faces:
        by_size[len(f)].append(f)
    index = [{f: i for i, f in enumerate(sorted(fs))} for fs in by_size]
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        rows = []
        lower = index[s - 1]
        for f in by_size[s]:
            row = {}
            for j in range(s):
                g = f[:j] + f[j + 1 :]
                col = lower.get(g)
                if col is not None:
                    row[col] = -1 if j % 2 else 1
            if row:
                rows.append(row)
        ranks[s] = sparse_rank(rows, field)
    return tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1))


@lru_cache(maxsize=200_000)
def _cached_betti(faces: frozenset[Face], field: FieldSpec) -> tuple[int, ...]:
    return _betti_of_faces(faces, field)


def betti(rc: SimplicialComplex | RelativeComplex, field: FieldSpec = QQ) -> BettiTable:
    """Reduced Betti numbers of H̃(Δ, Γ; k), from boundary-matrix ranks."""
    rc = as_relative(rc)
    if rc.is_void:
        raise VoidComplexError("homology of the void complex is not defined here")
    return BettiTable(_cached_betti(rc.faces, field), field)


def _betti_or_zero(rc: RelativeComplex, field: FieldSpec) -> BettiTable:
    if rc.is_void:
        return BettiTable((), field)
    return BettiTable(_cached_betti(rc.faces, field), field)


def is_acyclic_up_to(rc: RelativeComplex, top: int, field: FieldSpec = QQ) -> bool:
    """Whether H̃_i(rc) = 0 for all i <= top."""
    b = _betti_or_zero(rc, field)
    return all(b[i] == 0 for i in range(-1, top + 1))


def _link_is_cm(lk: RelativeComplex, field: FieldSpec) -> bool:
    if lk.is_void:
        return True
    b = betti(lk, field)
    return all(b[i] == 0 for i in range(-1, int(lk.dim)))


def is_cohen_macaulay(rc: SimplicialComplex | RelativeComplex, field: FieldSpec = QQ) -> bool:
    """Reisner's test: every link Lk(σ, rc), σ ∈ Δ, has homology only in its top dimension."""
    rc = as_relative(rc)
    if rc.is_void:
        raise VoidComplexError("Cohen-Macaulayness of the void complex is not defined here")
    for sigma in sorted(rc.delta.faces, key=len):
        if not _link_is_cm(relative_link(rc, sigma), field):
            return False
    return True


def is_buchsbaum(rc: SimplicialComplex | RelativeComplex, field: FieldSpec = QQ) -> bool:
    """Pure, and the link of every vertex of Δ is Cohen-Macaulay."""
    rc = as_relative(rc)
    if rc.is_void:
        raise VoidComplexError("Buchsbaumness of the void complex is not defined here")
    if not rc.is_pure:
        raise NotPureError("Buchsbaum test needs a pure relative complex")
    for sigma in sorted(rc.delta.faces, key=len):
        if sigma and not _link_is_cm(relative_link(rc, sigma), field):
            return False
    return True


def local_cohomology_hilbert(
    rc: SimplicialComplex | RelativeComplex, field: FieldSpec, i: int, min_degree: int | None = None
) -> dict[int, int]:
    """Coarse Hilbert function of H^i_m(M[rc]) on degrees min_degree..0 (Hochster's formula).

    A face σ of Δ contributes β̃_{i-|σ|-1}(Lk(σ, rc)) once for every exponent
    vector α <= 0 with support exactly σ; there are C(-j-1, |σ|-1) of them in
    degree j <= -|σ| when σ is nonempty (none above), and the empty face sits in degree 0 only.
    """
    rc = as_relative(rc)
    if rc.is_void:
        raise VoidComplexError("local cohomology of the void complex is not defined here")
    if min_degree is None:
        min_degree = -(int(rc.dim) + 2)
    out = {j: 0 for j in range(min_degree, 1)}
    for sigma in rc.delta.faces:
        b = _betti_or_zero(relative_link(rc, sigma), field)[i - len(sigma) - 1]
        if not b:
            continue
        s = len(sigma)
        for j in out:
            mult = (1 if j == 0 else 0) if s == 0 else (binom(-j - 1, s - 1) if -j >= s else 0)
            out[j] += b * mult
    return out


def h_top(rc: SimplicialComplex | RelativeComplex, field: FieldSpec = QQ, *, check: bool = True) -> tuple[int, ...]:
    """Topological part of the Schenzel decomposition."""
    rc = as_relative(rc)
    if check and not is_buchsbaum(rc, field):
        raise NotBuchsbaumError("h_top needs a Buchsbaum relative complex")
    d = int(rc.dim) + 1
    b = betti(rc, field)
    return tuple(binom(d, k) * sum((-1) ** (k - i) * b[i - 1] for i in range(k)) for k in range(d + 1))


def _good(delta: SimplicialComplex, members: list[SimplicialComplex], ell: int, field: FieldSpec) -> bool:
    for t in range(1, len(members) + 1):
        if ell - t < -1:
            break
        for idx in combinations(range(len(members)), t):
            common = members[idx[0]]
            for j in idx[1:]:
                common = intersection(common, members[j])
            common = intersection(delta, common)
            if not common.vertices:
                # members that do not meet leave the reduced homology of Δ (nerve-lemma convention)
                common = VOID
            if not is_acyclic_up_to(RelativeComplex(delta, common), ell - t, field):
                return False
    return True


def cover_quality(
    delta: SimplicialComplex, arr: Arrangement, ell: int, field: FieldSpec = QQ
) -> tuple[bool, bool]:
    """(ℓ-good, ℓ-magnificent) for the members of ``arr`` inside Δ.

    Restricting to a link means intersecting each member with Lk(σ, Δ).
    """
    members = list(arr.members)
    good = _good(delta, members, ell, field)
    magnificent = good
    if magnificent:
        for sigma in sorted(delta.faces, key=len):
            if not sigma:
                continue
            lk = link(delta, sigma)
            restricted = [intersection(g, lk) for g in members]
            if not _good(lk, restricted, ell - (len(sigma) - 1) - 1, field):
                magnificent = False
                break
    return good, magnificent


def skeleton_pair(rc: RelativeComplex, i: int) -> RelativeComplex:
    return RelativeComplex(skeleton(rc.delta, i), skeleton(rc.gamma, i))
