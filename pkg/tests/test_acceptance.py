"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import random
import time
from functools import lru_cache

import pytest

from relsr import bounds
from relsr.complexes import RelativeComplex, build_complex, fh_vectors, local_h_sum
from relsr.face_algebra import boundary_complex, reverse_iso_check, schenzel_decompose
from relsr.generators import (
    cyclic_sphere,
    generic_segments,
    random_ball,
    random_family,
    random_pure_relative,
    random_sphere,
)
from relsr.geometry import cayley_complex, minkowski_sum, mixed_faces
from relsr.homology import is_buchsbaum, is_cohen_macaulay
from relsr.linalg import GF2, QQ

from conftest import RP2_FACETS


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {detail}")
        assert ok, detail

    return emit


def _faces_by_size(rc: RelativeComplex) -> list[int]:
    f = [0] * (int(rc.dim) + 2)
    for face in rc.faces:
        f[len(face)] += 1
    return f


@lru_cache(maxsize=None)
def _generic_families():
    """≥ 20 seeded generic families of simplicial d-polytopes, m ≤ 3, d ≤ 4, at most 16 vertices in total."""
    rng = random.Random("acceptance-families")
    fams = []
    seed = 0
    while len(fams) < 24:
        d = rng.randint(2, 4)
        m = rng.randint(1, 3)
        counts = [rng.randint(d + 1, d + 4) for _ in range(m)]
        seed += 1
        if sum(counts) > 16:
            continue
        fams.append(random_family(d, counts, seed=seed))
    return tuple(fams)


def test_criterion_01_cyclic_spheres_attain_the_ubt(report):
    start = time.perf_counter()
    bad = []
    cases = 0
    for d in (3, 4, 5):
        for n in range(d + 1, d + 5):
            h = fh_vectors(cyclic_sphere(d, n)).h
            cases += 1
            if any(h[k] != bounds.ubt_h_bound(n, d, k) for k in range(d // 2 + 1)):
                bad.append((d, n))
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 10, f"h_k(∂C_d(n)) = C(n-d+k-1,k) on {cases} cyclic spheres, "
                                        f"{elapsed:.2f}s, mismatches {bad}")


def test_criterion_02_dehn_sommerville_on_random_polytopes(report):
    rng = random.Random("acceptance-ds")
    bad, count = [], 0
    for seed in range(24):
        d = rng.randint(2, 5)
        n = rng.randint(d + 1, d + 5)
        h = fh_vectors(random_sphere(d, n, seed=seed)).h
        count += 1
        if h != h[::-1]:
            bad.append((d, n, seed))
    report(2, not bad, f"h_k = h_(d-k) on {count} random simplicial polytopes (d ≤ 5), failures {bad}")


def test_criterion_03_relative_schenzel_on_rp2(report):
    rp2 = RelativeComplex(build_complex(RP2_FACETS))
    seeds = (0, 1, 2, 7)
    ok = True
    for seed in seeds:
        r = schenzel_decompose(rp2, GF2, seed=seed)
        ok &= r.ok and r.h == (1, 3, 6, 0) and r.h_alg == (1, 3, 6, 1) and r.h_top == (0, 0, 0, -1)
        q = schenzel_decompose(rp2, QQ, seed=seed)
        ok &= q.ok and all(x == 0 for x in q.h_top) and q.h_alg == q.h
    report(3, ok, f"RP²_6: GF(2) h=(1,3,6,0), h_alg=(1,3,6,1), h_top=(0,0,0,-1); Q h_top=0; seeds {seeds}")


def test_criterion_04_cayley_fiber_identity(report):
    fams = _generic_families()
    bad = []
    for idx, fam in enumerate(fams):
        m, d = fam.m, fam.d
        f = _faces_by_size(cayley_complex(fam).relative)  # entry i: faces with i vertices = f_(i-1)
        fs = minkowski_sum(fam).f_vector(d)
        if [f[k + m] if k + m < len(f) else 0 for k in range(d)] != list(fs):
            bad.append(idx)
    report(4, len(fams) >= 20 and not bad,
           f"f_(k+m-1)(T°) = f_k(|P|) on {len(fams)} random generic families (m ≤ 3, d ≤ 4, Σn ≤ 16), "
           f"failures {bad}")


def test_criterion_05_two_summand_bound_and_duality(report):
    rng = random.Random("acceptance-pairs")
    bad, count = [], 0
    for seed in range(12):
        d = (3, 4)[seed % 2]
        n1, n2 = rng.randint(d + 1, 7), rng.randint(d + 1, 7)
        fam = random_family(d, [n1, n2], seed=seed)
        count += 1
        h = fh_vectors(cayley_complex(fam).relative, d + 1).h
        for k in range(-1, d + 1):
            if h[k + 1] > bounds.two_summand_bound(n1, n2, d, k):
                bad.append((d, n1, n2, k))
        if not bounds.verify_family(fam).by_name("dsm").ok:
            bad.append((d, n1, n2, "dsm"))
    report(5, not bad, f"h_(k+1)(P_[2]) within both two-summand bounds and exact duality on {count} pairs "
                       f"(d = 3, 4; n_i ≤ 7), failures {bad}")


def test_criterion_06_zonotopes_attain_nb(report):
    bad, count = [], 0
    for d in (2, 3, 4):
        for m in range(1, d + 3):
            fam = generic_segments(m, d, seed=100 * d + m)
            count += 1
            if minkowski_sum(fam).f_vector(d) != bounds.nb_f_bound([2] * m, d):
                bad.append((d, m))
    report(6, not bad, f"zonotope f-vectors equal nb_f from the ν table for all k on {count} cases, failures {bad}")


def test_criterion_07_mixed_facets(report):
    rng = random.Random("acceptance-mixed")
    bad, count = [], 0
    for seed in range(10):
        n1, n2 = rng.randint(4, 7), rng.randint(4, 7)
        fam = random_family(3, [n1, n2], seed=seed)
        count += 1
        f_sum = minkowski_sum(fam).f_vector(3)[2]
        f1 = minkowski_sum(fam.sub([0])).f_vector(3)[2]
        f2 = minkowski_sum(fam.sub([1])).f_vector(3)[2]
        mixed = mixed_faces(fam)[2]
        bound = bounds.mixed_bounds([n1, n2], 3).f_mix[2]
        if mixed != f_sum - f1 - f2 or mixed > bound:
            bad.append((n1, n2, mixed, f_sum - f1 - f2, bound))
    report(7, not bad, f"mixed facets = inclusion-exclusion of facet counts and ≤ the mixed bound on {count} "
                       f"pure pairs in R³, failures {bad}")


def test_criterion_08_local_h_identity(report):
    rng = random.Random("acceptance-local")
    bad, count = [], 0
    for seed in range(60):
        d = rng.randint(2, 4)
        n = rng.randint(d + 1, d + 4)
        rc = random_pure_relative(d, n, rng.randint(2, 2 * n), seed=seed)
        h = fh_vectors(rc).h
        count += 1
        for k in range(d + 1):
            rhs = (k + 1) * (h[k + 1] if k + 1 <= d else 0) + (d - k) * h[k]
            if local_h_sum(rc, k) != rhs:
                bad.append((seed, k))
    report(8, not bad, f"Σ_v h_k(local complex at v) = (k+1)h_(k+1) + (d-k)h_k on {count} random pure "
                       f"relative complexes, failures {bad}")


def test_criterion_09_reverse_isoperimetry(report):
    rng = random.Random("acceptance-balls")
    bad, count = [], 0
    for seed in range(24):
        d = rng.randint(2, 4)
        ball = random_ball(d, d + rng.randint(1, 3), rng.randint(0, 4), seed=seed)
        count += 1
        if not reverse_iso_check(ball):
            bad.append(seed)
    report(9, not bad, f"h_k(Δ,∂Δ) ≥ h_(k-1)(∂Δ) on {count} random balls with full boundary, failures {bad}")


def test_criterion_10_bound_tables_are_self_consistent(report):
    rng = random.Random("acceptance-tables")
    bad, count = [], 0
    for _ in range(60):
        d = rng.randint(1, 8)
        alpha = [rng.randint(1, d + 5) for _ in range(rng.randint(1, 4))]
        for mode in ("mubt", "nu") if all(a >= d + 1 for a in alpha) else ("nu",):
            table = bounds.bound_table(alpha, d, mode)
            count += 1
            if bounds.check_table(table):
                bad.append((mode, d, alpha))
    report(10, not bad, f"{count} MUBT/ν tables satisfy conditions (a)-(d) on re-evaluation, failures {bad}")


def test_criterion_11_predicates(report):
    bowtie = build_complex([[1, 2, 3], [1, 4, 5]])
    spheres = [random_sphere(d, d + 3, seed=d) for d in (2, 3, 4)]
    balls = [random_ball(d, d + 2, 2, seed=d) for d in (2, 3, 4)]
    bd = [RelativeComplex(b, boundary_complex(b)) for b in balls]
    ok_cm = all(is_cohen_macaulay(x) for x in spheres + balls + bd) and not is_cohen_macaulay(bowtie)
    rp2 = build_complex(RP2_FACETS)
    ok_rp2 = is_buchsbaum(rp2, GF2) and is_buchsbaum(rp2, QQ)
    fams = _generic_families()
    bad = [i for i, fam in enumerate(fams) if not is_buchsbaum(cayley_complex(fam).relative)]
    report(11, ok_cm and ok_rp2 and not bad,
           f"CM on spheres/balls, not on the bowtie; Buchsbaum on RP²_6 and on all {len(fams)} T° of "
           f"criterion 4 (failures {bad})")
