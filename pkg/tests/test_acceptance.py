"""Acceptance gate: nine end-to-end criteria with pinned tolerances.

Each test prints one PASS/FAIL line (bypassing capture) so a full run
reads as a checklist.  Criteria whose target values the statistic cannot
reach are left to fail honestly; the printed diagnostics carry the
measured values.
"""

import json
import math
import time

import numpy as np

from cauchygof import (
    KernelMode,
    StudyConfig,
    TableStore,
    ajel_test,
    chisq1_sf,
    cm_stat,
    delta_star,
    gh_stat,
    jel_test,
    kl_stat,
    ks_stat,
    leave_one_out_deltas,
    ma_stat,
    pseudo_values,
    run_study,
    solve_lambda,
    za_stat,
    zb_stat,
    zc_stat,
)
from cauchygof.cli import main as cli_main
from cauchygof.datasets import dax_returns_path
from cauchygof.distributions import sample_distribution, standard_cauchy
from cauchygof.seeding import derive_rep_seed

import oracles

MODES = (KernelMode.LITERAL, KernelMode.SYM3, KernelMode.SYM6)


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")


def test_criterion_1_small_sample_oracle_equivalence(capsys):
    """delta_star matches brute-force triple enumeration to 1e-12 and the
    leave-one-out deltas equal per-i recomputation exactly, on 200 random
    samples with n <= 12, all kernel modes."""
    t0 = time.time()
    rng = np.random.default_rng(20260814)
    worst = 0.0
    for k in range(200):
        n = int(rng.integers(4, 13))
        x = np.asarray(sample_distribution(standard_cauchy(), n, int(rng.integers(2**63))).values)
        mode = MODES[k % 3]
        d = delta_star(x, mode)
        ref = oracles.brute_delta(list(x), mode.value)
        worst = max(worst, abs(d - ref))
        assert abs(d - ref) <= 1e-12
        loo = leave_one_out_deltas(x, mode)
        naive = np.array([delta_star(np.delete(x, i), mode) for i in range(n)])
        assert np.array_equal(loo, naive)
    elapsed = time.time() - t0
    ok = worst <= 1e-12 and elapsed < 10.0
    report(capsys, 1, ok,
           f"200 samples, 3 modes: max |delta - brute force| = {worst:.2e} "
           f"(tol 1e-12), leave-one-out exact, {elapsed:.1f}s (budget 10s)")
    assert ok


def test_criterion_2_pseudo_value_mean_identity(capsys):
    """mean of the jackknife pseudo-values reproduces the U-statistic to
    1e-10 relative (absolute floor 1e-12 when the statistic is near zero)
    on 1,000 random samples with n in 5..50."""
    t0 = time.time()
    rng = np.random.default_rng(57721566)
    worst = 0.0
    for k in range(1000):
        n = int(rng.integers(5, 51))
        x = sample_distribution(standard_cauchy(), n, int(rng.integers(2**63)))
        pv = pseudo_values(x, MODES[k % 3])
        err = abs(float(np.mean(pv.values)) - pv.delta)
        tol = max(1e-10 * abs(pv.delta), 1e-12)
        worst = max(worst, err / tol)
        assert err <= tol
    elapsed = time.time() - t0
    ok = worst <= 1.0 and elapsed < 30.0
    report(capsys, 2, ok,
           f"1000 samples n in 5..50: worst error/tolerance = {worst:.3f} "
           f"(rel 1e-10, abs floor 1e-12), {elapsed:.1f}s (budget 30s)")
    assert ok


def test_criterion_3_el_solver_properties(capsys):
    """On 1,000 mixed-sign vectors the multiplier satisfies |g| < 1e-10 and
    every positivity constraint; the two-point closed form v = [-1, 2]
    gives lambda = 0.25 and -2 log R = 0.23557 within 1e-5."""
    t0 = time.time()
    rng = np.random.default_rng(16180339)
    worst_g = 0.0
    for _ in range(1000):
        m = int(rng.integers(4, 60))
        v = rng.normal(scale=float(rng.uniform(0.01, 10.0)), size=m)
        while not (v.min() < 0.0 < v.max()):
            v = rng.normal(scale=1.0, size=m)
        lam = solve_lambda(v)
        w = 1.0 + lam * v
        assert np.all(w > 0.0)
        g = abs(float(np.mean(v / w)))
        worst_g = max(worst_g, g)
        assert g < 1e-10
    lam_two = solve_lambda(np.array([-1.0, 2.0]))
    neg2 = 2.0 * float(np.sum(np.log1p(lam_two * np.array([-1.0, 2.0]))))
    ok_closed = abs(lam_two - 0.25) <= 1e-9 and abs(neg2 - 0.23557) <= 1e-5
    elapsed = time.time() - t0
    ok = worst_g < 1e-10 and ok_closed and elapsed < 5.0
    report(capsys, 3, ok,
           f"1000 vectors: max |g(lambda)| = {worst_g:.2e} (tol 1e-10), "
           f"constraints hold; [-1,2] -> lambda={lam_two:.6f} (want 0.25), "
           f"-2logR={neg2:.6f} (want 0.23557 +/- 1e-5), {elapsed:.1f}s (budget 5s)")
    assert ok


def test_criterion_4_wilks_calibration(capsys):
    """Null -2 log R at n=100 over 2,000 seeded replications is within
    Kolmogorov distance 0.05 of chi-squared(1), and the adjusted test never
    reports an infeasible constraint set."""
    null = standard_cauchy()
    jel_stats = []
    jel_hulls = 0
    ajel_hulls = 0
    for r in range(2000):
        x = sample_distribution(null, 100, derive_rep_seed(271828, 1, r))
        j = jel_test(x)
        if j.hull_ok:
            jel_stats.append(j.neg2_log_ratio)
        else:
            jel_hulls += 1
        if not ajel_test(x).hull_ok:
            ajel_hulls += 1
    dist = oracles.ks_distance(jel_stats, lambda q: 1.0 - chisq1_sf(q))
    ok = dist < 0.05 and ajel_hulls == 0
    report(capsys, 4, ok,
           f"KS distance of 2000 null statistics to chi2(1) = {dist:.4f} "
           f"(tol 0.05); JEL hull violations = {jel_hulls}, "
           f"AJEL hull violations = {ajel_hulls} (must be 0)")
    assert ok


def test_criterion_5_null_size_levels(capsys):
    """JEL empirical size at alpha = 0.05 with 2,000 replications lies in
    0.047 +/- 0.02 at n=60 and 0.051 +/- 0.02 at n=100 (reference value
    plus three combined Monte Carlo standard errors)."""
    config = StudyConfig(sizes=(60, 100), reps=2000, tests=("jel",),
                         master_seed=1729)
    rows = {r.n: r for r in run_study(config).rows}
    targets = {60: 0.047, 100: 0.051}
    parts = []
    ok = True
    for n, target in targets.items():
        got = rows[n].proportion
        inside = abs(got - target) <= 0.02
        ok = ok and inside
        parts.append(f"n={n}: {got:.4f} in {target} +/- 0.02"
                     f"{'' if inside else ' VIOLATED'}")
    report(capsys, 5, ok, "; ".join(parts))
    assert ok


def test_criterion_6_power_and_competitor_size(capsys):
    """JEL power: >= 0.99 against U(0,1) and G(2,1) at n=40, and within
    0.968 +/- 0.03 against t3 at n=100, all at 1,000 replications.  The
    nine Monte-Carlo-calibrated tests hold their nominal size at n=40
    within three combined standard errors."""
    store = TableStore()
    reps = 1000
    asym = StudyConfig(alternatives=("uniform:0,1", "gamma:2,1"), sizes=(40,),
                       reps=reps, tests=("jel",), master_seed=1729)
    powers = {r.alternative: r.proportion for r in run_study(asym, store).rows}
    sym = StudyConfig(alternatives=("student_t:3",), sizes=(100,),
                      reps=reps, tests=("jel",), master_seed=1729)
    (t3_row,) = run_study(sym, store).rows
    t3_power = t3_row.proportion

    classical = ("ks", "cm", "ma", "za", "zb", "zc", "gh", "kl", "he")
    table_B = 2000
    size_config = StudyConfig(sizes=(40,), reps=reps, tests=classical,
                              master_seed=1729, table_B=table_B)
    band = 3.0 * math.sqrt(0.05 * 0.95 * (1.0 / reps + 1.0 / table_B))
    size_rows = run_study(size_config, store).rows
    size_ok = all(abs(r.proportion - 0.05) <= band for r in size_rows)
    worst_size = max(size_rows, key=lambda r: abs(r.proportion - 0.05))

    uniform_ok = powers["uniform:0,1"] >= 0.99
    gamma_ok = powers["gamma:2,1"] >= 0.99
    t3_ok = abs(t3_power - 0.968) <= 0.03
    t3_note = "" if t3_ok else (
        " VIOLATED: the kernel mean is exactly zero for every distribution"
        " symmetric about 0, so the test has size-level power there and the"
        " 0.968 target at t3 is not reachable by this statistic"
    )
    ok = uniform_ok and gamma_ok and t3_ok and size_ok
    report(capsys, 6, ok,
           f"power U(0,1) n=40 = {powers['uniform:0,1']:.3f} (need >= 0.99); "
           f"power G(2,1) n=40 = {powers['gamma:2,1']:.3f} (need >= 0.99); "
           f"power t3 n=100 = {t3_power:.3f} (need 0.968 +/- 0.03){t3_note}; "
           f"competitor sizes at n=40 all in 0.05 +/- {band:.4f}: {size_ok} "
           f"(worst {worst_size.test} = {worst_size.proportion:.4f})")
    assert ok


def test_criterion_7_bundled_dataset_statistic_window(capsys, tmp_path):
    """Running the CLI battery on the bundled index returns across the
    three kernel modes and raw/standardized preprocessing, some
    configuration should give a JEL statistic within 0.05 of 0.3206 with
    p within 0.01 of 0.5711; the per-mode values are printed either way."""
    path = str(dax_returns_path())
    results = []
    for mode in ("literal", "sym3", "sym6"):
        for std in ("off", "on"):
            out = tmp_path / f"report_{mode}_{std}.json"
            code = cli_main(["test", path, "--tests", "jel", "--mode", mode,
                             "--standardize", std, "--out", str(out)])
            assert code == 0
            doc = json.loads(out.read_text())
            o = doc["outcomes"][0]
            results.append((mode, std, o["statistic"], o["p_value"]))
    matches = [
        (mode, std, stat, p)
        for mode, std, stat, p in results
        if abs(stat - 0.3206) <= 0.05 and abs(p - 0.5711) <= 0.01
    ]
    lines = ", ".join(
        f"{mode}/{'std' if std == 'on' else 'raw'}: stat={stat:.4f} p={p:.4f}"
        for mode, std, stat, p in results
    )
    ok = bool(matches)
    detail = (
        f"matched configuration {matches[0][0]}/{matches[0][1]}" if ok
        else "no configuration reaches stat 0.3206 +/- 0.05 with p 0.5711 +/- 0.01"
    )
    report(capsys, 7, ok, f"{detail}; measured: {lines}")
    assert ok, f"per-configuration values: {lines}"


def test_criterion_8_hand_value_suite(capsys):
    """Every statistic reproduces its hand-computed value on the tiny
    samples {0} and {-1, 0, 1} (GH on {0} and {0, 1}, KL on {0, 1}) to
    1e-6."""
    cases = [
        ("ks {0}", ks_stat([0.0]), 0.5),
        ("ks {-1,0,1}", ks_stat([-1.0, 0.0, 1.0]), 0.25),
        ("cm {0}", cm_stat([0.0]), 0.08333333),
        ("cm {-1,0,1}", cm_stat([-1.0, 0.0, 1.0]), 0.04166667),
        ("ma {0}", ma_stat([0.0]), 0.38629436),
        ("ma {-1,0,1}", ma_stat([-1.0, 0.0, 1.0]), 0.26943084),
        ("za {0}", za_stat([0.0]), 2.77258872),
        ("za {-1,0,1}", za_stat([-1.0, 0.0, 1.0]), 3.18396002),
        ("zb {0}", zb_stat([0.0]), 0.0),
        ("zb {-1,0,1}", zb_stat([-1.0, 0.0, 1.0]), 2.41389792),
        ("zc {0}", zc_stat([0.0]), 0.0),
        ("zc {-1,0,1}", zc_stat([-1.0, 0.0, 1.0]), 0.06066874),
        ("gh {0}", gh_stat([0.0], 5.0), 0.01904762),
        ("gh {0,1}", gh_stat([0.0, 1.0], 5.0), 0.04072864),
        ("kl {0,1}", kl_stat([0.0, 1.0], m=1), 4.44288294),
    ]
    worst = max(abs(got - want) for _, got, want in cases)
    ok = worst <= 1e-6
    bad = [name for name, got, want in cases if abs(got - want) > 1e-6]
    report(capsys, 8, ok,
           f"{len(cases)} hand values, max |error| = {worst:.2e} (tol 1e-6)"
           + (f"; failing: {bad}" if bad else ""))
    assert ok


def test_criterion_9_threaded_study_determinism(capsys, tmp_path):
    """The study CLI writes byte-identical CSV with 1, 4, and 8 worker
    threads at a fixed master seed."""
    blobs = {}
    for threads in (1, 4, 8):
        prefix = tmp_path / f"t{threads}"
        code = cli_main([
            "simulate", "--sizes", "8,12", "--reps", "120",
            "--tests", "jel,ajel,ks", "--B", "100", "--seed", "31",
            "--threads", str(threads), "--out-prefix", str(prefix),
        ])
        assert code == 0
        blobs[threads] = (tmp_path / f"t{threads}.csv").read_bytes()
    ok = blobs[1] == blobs[4] == blobs[8]
    report(capsys, 9, ok,
           f"CSV bytes at 1/4/8 threads: {len(blobs[1])} bytes, "
           f"identical = {ok}")
    assert ok
