"""Exact linear algebra over ℚ and prime fields.

Sparse matrices are lists of rows, each row a ``{column: value}`` dict with
integer entries.  Over ℚ the elimination is fraction free (rows are kept
primitive), over GF(p) everything is reduced mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

SparseRow = dict[int, int]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p == 0``) or GF(p)."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t == "f2":
            return cls(2)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        raise ValueError(f"unknown field {text!r} (expected q, f2 or fp:<p>)")

    def __str__(self) -> str:
        return "q" if self.p == 0 else ("f2" if self.p == 2 else f"fp:{self.p}")


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _rank_rational(rows: list[SparseRow]) -> int:
    pivots: dict[int, SparseRow] = {}
    rank = 0
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(r)
                rank += 1
                break
            a, b = piv[col], r[col]
            new: SparseRow = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    return rank


def _rank_mod_p(rows: list[SparseRow], p: int) -> int:
    pivots: dict[int, SparseRow] = {}
    rank = 0
    for row in rows:
        r = {k: v % p for k, v in row.items() if v % p}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            b = r[col]
            for k, v in piv.items():
                nv = (r.get(k, 0) - b * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def sparse_rank(rows: Iterable[SparseRow], field: FieldSpec = QQ) -> int:
    """Rank of an integer sparse matrix over the given field."""
    rs = list(rows)
    if field.is_rational:
        return _rank_rational(rs)
    return _rank_mod_p(rs, field.p)


def dense_rank(matrix: Sequence[Sequence[int | Fraction]], field: FieldSpec = QQ) -> int:
    rows: list[SparseRow] = []
    for row in matrix:
        if field.is_rational:
            den = 1
            for x in row:
                if isinstance(x, Fraction):
                    den = den * x.denominator // gcd(den, x.denominator)
            rows.append({j: int(x * den) for j, x in enumerate(row) if x})
        else:
            rows.append({j: int(x) % field.p for j, x in enumerate(row) if int(x) % field.p})
    return sparse_rank(rows, field)


# -- dense rational helpers (geometry) ----------------------------------------------


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns over ℚ."""
    a = [[Fraction(x) for x in row] for row in matrix]
    if not a:
        return [], []
    n_cols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def int_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank of a small dense integer matrix (fraction-free elimination)."""
    a = [list(row) for row in matrix if any(row)]
    if not a:
        return 0
    n_cols = len(a[0])
    rank = 0
    for c in range(n_cols):
        p = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[rank], a[p] = a[p], a[rank]
        piv = a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][c]:
                x, y = piv[c], a[i][c]
                a[i] = [x * u - y * v for u, v in zip(a[i], piv)]
        rank += 1
        if rank == len(a):
            break
    return rank


def integer_nullvector(matrix: Sequence[Sequence[int]]) -> list[int] | None:
    """A primitive integer vector spanning the kernel of a corank-one matrix, else None."""
    n = len(matrix[0])
    red, piv = rref([[Fraction(x) for x in row] for row in matrix])
    free = [c for c in range(n) if c not in piv]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [Fraction(0)] * n
    vec[fc] = Fraction(1)
    for row, pc in zip(red, piv):
        vec[pc] = -row[fc]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]
