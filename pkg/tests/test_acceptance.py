"""Acceptance gate: one check per shipped guarantee, one printed
PASS/FAIL line each.  Run with -s (or -v) to see the lines as they go;
without -s pytest shows them for failing tests only.
"""

import math
import time
from fractions import Fraction

import numpy as np

from detsense import (
    as_unit_columns,
    bipolar_matrix,
    build_code_spec,
    coherence,
    correlate_all,
    correlation_cost,
    delta_bound_check,
    devore_matrix,
    gamma_root,
    gaussian_baseline,
    johnson_bound,
    kappa,
    measure,
    omp,
    ooc_family,
    reconstruction_snr_db,
    recovery_sweep,
    shift_group_partition,
    tau,
    ternary_matrix,
    SparseSignal,
)
from detsense.recovery import SUCCESS_SNR_DB


def report(num, ok, detail):
    print(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}",
          flush=True)
    assert ok, f"acceptance check {num} failed: {detail}"


def test_acceptance_01_parity_check_degrees():
    started = time.perf_counter()
    degrees = {pair: build_code_spec(*pair).dimension
               for pair in ((4, 3), (6, 3), (8, 3), (10, 3))}
    spec43 = build_code_spec(4, 3)
    elapsed = time.perf_counter() - started
    expected = {(4, 3): 5, (6, 3): 7, (8, 3): 13, (10, 3): 26}
    ok = (degrees == expected
          and spec43.parity_check.bits == 0b110101   # x^5+x^4+x^2+1
          and spec43.modulus.bits == 0b10011         # x^4+x+1
          and elapsed < 1.0)
    report(1, ok, f"degrees {degrees}, h(4,3)={spec43.parity_check}, "
                  f"modulus={spec43.modulus}, {elapsed:.3f}s")


def test_acceptance_02_bipolar_63x512():
    started = time.perf_counter()
    matrix = bipolar_matrix(6, 2)
    cert = coherence(matrix)   # full 512^2 Gram inside
    keys = {matrix.entries[:, j].tobytes() for j in range(matrix.cols)}
    shift_closed = all(
        np.roll(matrix.entries[:, j], 1).tobytes() in keys
        for j in range(matrix.cols))
    complement_free = all(
        (-matrix.entries[:, j]).tobytes() not in keys
        for j in range(matrix.cols))
    elapsed = time.perf_counter() - started
    ok = (matrix.rows == 63 and matrix.cols == 512
          and cert.max_inner == 9
          and cert.coherence == Fraction(1, 7)
          and cert.rip_order_max == 7
          and cert.delta_table[7] == Fraction(6, 7)
          and shift_closed and complement_free
          and elapsed < 10.0)
    report(2, ok, f"63x512 max_inner={cert.max_inner} "
                  f"mu={cert.coherence} order={cert.rip_order_max} "
                  f"delta7={cert.delta_table.get(7)} "
                  f"shift_closed={shift_closed} "
                  f"complement_free={complement_free} {elapsed:.2f}s")


def test_acceptance_03_devore_64x512():
    matrix = devore_matrix(8, 2)
    cert = coherence(matrix)
    weights = np.unique(matrix.norm_squares)
    bound = johnson_bound(64, 8, 2)
    ok = (matrix.rows == 64 and matrix.cols == 512
          and weights.tolist() == [8]
          and cert.coherence == Fraction(1, 4)
          and matrix.cols <= bound == 720)
    report(3, ok, f"64x512 weight={weights.tolist()} mu={cert.coherence} "
                  f"cols=512 <= johnson={bound}")


def test_acceptance_04_ternary_49x2744():
    matrix = ternary_matrix(devore_matrix(7, 2), bipolar_matrix(3, 1))
    n_x = 8
    gram = matrix.entries.astype(np.float64)
    gram = np.abs(gram.T @ gram)
    same_max = 0
    for i in range(343):
        block = gram[i * n_x:(i + 1) * n_x, i * n_x:(i + 1) * n_x]
        off = block - np.diag(np.diag(block))
        same_max = max(same_max, int(round(off.max())))
        gram[i * n_x:(i + 1) * n_x, i * n_x:(i + 1) * n_x] = 0.0
    cross_max = int(round(gram.max()))
    cert = coherence(matrix)
    norms_ok = np.unique(matrix.norm_squares).tolist() == [7]
    order_ok = (cert.rip_order_max >= 4 if cert.coherence < Fraction(1, 3)
                else cert.rip_order_max == 3)
    ok = (matrix.rows == 49 and matrix.cols == 2744 and norms_ok
          and same_max <= 3 and cross_max <= 2 and order_ok)
    report(4, ok, f"49x2744 norms=7 same_pattern_max={same_max} "
                  f"cross_pattern_max={cross_max} measured mu="
                  f"{cert.coherence} order={cert.rip_order_max}")


def test_acceptance_05_pn_7x7():
    matrix = bipolar_matrix(3, 3)
    entries = matrix.entries.astype(np.int64)
    gram = entries.T @ entries
    off = gram[~np.eye(7, dtype=bool)]
    pairs_exact = (np.abs(off) == 1).all() and (np.diag(gram) == 7).all()
    ok = matrix.rows == 7 and matrix.cols == 7 and bool(pairs_exact)
    report(5, ok, f"7x7, all distinct-pair |inner|/norm = 1/7 exactly: "
                  f"{bool(pairs_exact)}")


def test_acceptance_06_omp_exact_recovery(bipolar_6_2):
    started = time.perf_counter()
    rng = np.random.default_rng(20250819)
    failures = 0
    stray_picks = 0
    for _ in range(500):
        support = tuple(sorted(rng.choice(512, size=3, replace=False)
                               .tolist()))
        sig = SparseSignal(512, support, rng.standard_normal(3))
        trace = omp(bipolar_6_2, None, measure(bipolar_6_2, sig), 3)
        snr = reconstruction_snr_db(sig.to_dense(),
                                    trace.estimate.to_dense())
        if snr < SUCCESS_SNR_DB:
            failures += 1
        if not set(trace.selected) <= set(support):
            stray_picks += 1
    elapsed = time.perf_counter() - started
    ok = failures == 0 and stray_picks == 0 and elapsed < 30.0
    report(6, ok, f"500 noiseless 3-sparse trials: {failures} recovery "
                  f"failures, {stray_picks} out-of-support picks, "
                  f"{elapsed:.1f}s")


def test_acceptance_07_k4_success(bipolar_6_2, devore_8_2):
    rate_b = recovery_sweep(bipolar_6_2, None, [4], trials=200,
                            seed=42).values[0]
    rate_d = recovery_sweep(devore_8_2, None, [4], trials=200,
                            seed=43).values[0]
    ok = rate_b == 1.0 and rate_d == 1.0
    report(7, ok, f"k=4, 200 trials: 63x512 rate {rate_b:.2f}, "
                  f"64x512 rate {rate_d:.2f}")


def test_acceptance_08_fast_correlation_oracle(bipolar_6_2):
    partition = shift_group_partition(bipolar_6_2)
    rng = np.random.default_rng(8088)
    worst = 0.0
    for _ in range(1000):
        residual = rng.standard_normal(63)
        direct = correlate_all(bipolar_6_2, None, residual)
        fast = correlate_all(bipolar_6_2, partition, residual, fast=True)
        scale = max(1.0, float(np.abs(direct).max()))
        worst = max(worst, float(np.abs(fast - direct).max()) / scale)
    traces_match = True
    for _ in range(60):
        y = rng.standard_normal(63)
        if (omp(bipolar_6_2, None, y, 5).selected
                != omp(bipolar_6_2, partition, y, 5, fast=True).selected):
            traces_match = False
            break
    cost = correlation_cost(1023, [1023])
    ok = worst <= 1e-9 and traces_match
    report(8, ok, f"1000 residuals, worst relative gap {worst:.2e}; "
                  f"trace agreement {traces_match}; m=1023 multiplication "
                  f"counts direct={cost.direct_multiplications} "
                  f"fast={cost.fast_total} ratio={cost.ratio:.2f}")


def test_acceptance_09_combinatorics():
    def linear_count(a, b):
        v = np.arange(1 << b, dtype=np.uint64)
        keep = np.ones(v.size, dtype=bool)
        for s in range(1, min(a + 1, b)):
            keep &= ((v >> np.uint64(s)) & v) == 0
        return int(keep.sum())

    kappa_ok = all(kappa(a, b) == linear_count(a, b)
                   for a in range(1, 7) for b in range(1, 21))
    sandwich_ok = all(
        kappa(a, b - a) <= tau(a, b) <= kappa(a, b)
        for a in range(1, 7) for b in range(a, 25))
    dims_ok = all(
        build_code_spec(mt, i).dimension == tau(i, mt)
        for mt in range(2, 13) for i in range(1, mt + 1))
    golden = (1 + math.sqrt(5)) / 2
    golden_ok = abs(gamma_root(1) - golden) <= 1e-9
    g5 = gamma_root(5)
    g5_ok = 1.284 <= g5 <= 1.286
    delta_ok = all(delta_bound_check(a).satisfied for a in range(2, 101))
    lemma = delta_bound_check(2)
    lemma_ok = (abs(lemma.objective_minimum - 0.18) <= 0.01
                and abs(lemma.objective_argmin - 11.53) <= 0.05)
    ok = (kappa_ok and sandwich_ok and dims_ok and golden_ok and g5_ok
          and delta_ok and lemma_ok)
    report(9, ok, f"kappa=brute {kappa_ok}; sandwich {sandwich_ok}; "
                  f"dim=tau(m<=12) {dims_ok}; golden {golden_ok}; "
                  f"gamma5={g5:.4f} in [1.284,1.286] {g5_ok}; "
                  f"delta>a^0.7 on [2,100] {delta_ok}; lemma min "
                  f"{lemma.objective_minimum:.4f} at "
                  f"{lemma.objective_argmin:.3f} {lemma_ok}")


def test_acceptance_10_ooc(ooc_1):
    family = ooc_family(1)
    weights = [len(s) for s in family.supports]
    # exhaustive correlation check, independent of the constructor's own
    def correlation(s1, s2, shift):
        rotated = {(t + shift) % 15 for t in s2}
        return len(set(s1) & rotated)

    corr_ok = all(
        correlation(family.supports[i], family.supports[j], shift) <= 2
        for i in range(2) for j in range(2) for shift in range(15)
        if not (i == j and shift == 0))
    cert = coherence(ooc_1)
    ok = (len(family.supports) == 2 and weights == [5, 5] and corr_ok
          and cert.rip_order_max == 3
          and cert.delta_table[3] == Fraction(4, 5))
    report(10, ok, f"a=1: {len(family.supports)} supports, weights "
                   f"{weights}, exhaustive correlations <= 2: {corr_ok}; "
                   f"certificate order {cert.rip_order_max}, delta3 = "
                   f"{cert.delta_table[3]}")


def test_acceptance_trend_vs_gaussian(bipolar_6_2):
    ks = [4, 8, 12, 16, 20]
    det = recovery_sweep(bipolar_6_2, None, ks, trials=1000, seed=1234)
    gs = recovery_sweep(gaussian_baseline(64, 512, seed=7), None, ks,
                        trials=1000, seed=1234)
    margins = [d - g for d, g in zip(det.values, gs.values)]
    ok = all(margin >= -0.05 for margin in margins)
    pairs = " ".join(f"k={k}:{d:.3f}/{g:.3f}"
                     for k, d, g in zip(ks, det.values, gs.values))
    report("trend", ok, f"1000 trials, deterministic/gaussian rates "
                        f"{pairs}; min margin {min(margins):+.3f}")
