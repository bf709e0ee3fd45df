"""Acceptance gate: one test per numbered criterion, exact values only.

Run with -v to get a single pass/fail line per criterion.
"""

from fractions import Fraction
from math import comb

from ortho_lab import colouring, families, graphs, search, spectral
from ortho_lab.colouring import Verdict
from ortho_lab.graphs import adjacent_bits, omega, y_quotient


def test_criterion_1_spectral_formulas():
    assert spectral.least_eigenvalue(4) == -2
    assert spectral.least_eigenvalue(8) == -10
    assert spectral.least_eigenvalue(12) == -84
    assert spectral.least_eigenvalue(16) == -858
    for n in range(4, 65, 4):
        assert spectral.ratio_bound(omega(n)).bound == Fraction(1 << n, n)
    assert spectral.ratio_bound(y_quotient(8)).bound == 8
    assert spectral.ratio_bound(y_quotient(16)).bound == 1024


def test_criterion_2_eigenspace_columns_exact():
    rep4 = spectral.verify_tau_eigenspace(4)
    assert rep4.ok and rep4.columns_checked == 12 and rep4.max_defect == 0
    rep8 = spectral.verify_tau_eigenspace(8)
    assert rep8.ok and rep8.columns_checked == 56 and rep8.max_defect == 0


def test_criterion_3_gram_identities_and_spectra():
    for n in (8, 12, 16):
        rep = spectral.gram_identities(n)
        assert rep.ok, (n, rep)
        assert rep.product_all_minus_one
        assert rep.incidence_gram_diagonal == n - 1
        assert rep.incidence_gram_off_diagonal == 1
        assert rep.neighbourhood_row_sum == -n // 2
    s8 = spectral.neighbourhood_gram_spectrum(8)
    assert tuple(s8.eigenvalues) == (40, 96, 0)
    assert s8.multiplicities == (1, 20, 7)
    assert s8.trace == 1960
    assert s8.ok
    s16 = spectral.neighbourhood_gram_spectrum(16)
    assert tuple(s16.eigenvalues) == (6864, 14784, 0)
    assert s16.multiplicities == (1, 104, 15)
    assert s16.trace == 1544400
    assert s16.ok


def test_criterion_4_kernel_rank_ledger():
    for n in (8, 16):
        red = search.kernel_reduce(n)
        assert red.incidence_rank == n
        assert red.neighbourhood_rank == comb(n, 2) - (n - 1)
        assert red.neighbourhood_product_zero
        assert red.echelon.rank == n
        assert red.kernel_dim == n


def test_criterion_5_search_reproduction():
    out8 = search.enumerate_candidates(8)
    assert len(out8.certificates) == 8
    for cert in out8.certificates:
        assert cert.size == 8
        assert search.check_independent([v.bits for v in cert.vertices], y_quotient(8))
        assert cert.eigenspace_member
    oracle = sorted(tuple(s) for s in search.exhaustive_tight_sets(8))
    got = sorted(tuple(v.bits for v in c.vertices) for c in out8.certificates)
    assert got == oracle

    out16 = search.enumerate_candidates(16, jobs=8)
    assert out16.candidates_total == 65536
    assert len(out16.certificates) == 0


def test_criterion_6_colourings():
    cert8 = colouring.omega_colouring(8)
    assert cert8.palette_size == 8
    assert sorted(len(cls) for cls in cert8.classes) == [32] * 8
    assert colouring.verify_colouring(cert8)
    colour = {}
    for ci, cls in enumerate(cert8.classes):
        for v in cls:
            colour[v.bits] = ci
    edges = 0
    for u in range(256):
        for v in range(u + 1, 256):
            if adjacent_bits(u, v, 8):
                edges += 1
                assert colour[u] != colour[v]
    assert edges == 8960

    cert4 = colouring.omega_colouring(4)
    assert cert4.palette_size == 4
    assert colouring.verify_colouring(cert4)
    psi_edges = list(graphs.psi_edges(4))
    assert len(psi_edges) == 48
    colour4 = {}
    for ci, cls in enumerate(cert4.classes):
        for v in cls:
            colour4[v.bits] = ci
    assert all(colour4[u] != colour4[v] for u, v in psi_edges)


def test_criterion_7_families():
    f8 = families.initial_segment_family(8)
    assert f8.size == 8 and f8.independent and f8.maximal and f8.meets_ratio_bound
    f16 = families.initial_segment_family(16)
    assert f16.size == 576 and f16.independent and f16.maximal

    assert families.symdiff_transform_check(8).ok
    assert families.symdiff_transform_check(16).ok

    assert families.small_odd_family(8).size == 8
    assert families.small_odd_family(12).size == 67
    assert families.small_odd_family(16).size == 576

    lifted = families.lift_to_omega(f16)
    assert lifted.size == 2304
    assert lifted.kind == omega(16)


def test_criterion_8_recursive_edge_table():
    assert graphs.psi_edge_count(4) == 48
    assert graphs.psi_edge_count(8) == 2816
    assert graphs.psi_edge_count(16) == 9109504
    rows = graphs.psi_stats(6)
    by_n = {r.n: r for r in rows}
    assert by_n[4].ratio == 1
    assert by_n[8].ratio == Fraction(11, 35)
    assert by_n[16].ratio == Fraction(139, 6435)
    ratios = [r.ratio for r in rows if r.n >= 4]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_criterion_9_chromatic_verdict_sweep():
    for n in range(1, 65):
        rep = colouring.chi_status(n)
        if n in (1, 2, 4, 8):
            assert rep.verdict is Verdict.EQUALS_N, n
        elif n % 4 == 0:
            assert rep.verdict is Verdict.GREATER_THAN_N, n
        else:
            assert rep.verdict is Verdict.LESS_THAN_N, n
