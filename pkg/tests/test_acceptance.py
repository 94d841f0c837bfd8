"""Acceptance criteria, one test per criterion.

Every test records a PASS/FAIL line that pytest prints in an
"acceptance criteria" section at the end of the run.
"""

import time

import numpy as np
import pytest

from wsnga import (
    EQ2,
    EQ3,
    GAParams,
    LifetimeConfig,
    NetworkConfig,
    RadioModel,
    decode,
    evolve,
    exhaustive_best,
    generate_deployment,
    lifetime_summary,
    mutate,
    repair,
    roulette_select,
    run_lifetime,
    single_point_crossover,
)
from wsnga.cli import lifetime_seed, main
from wsnga.ga import roulette_probabilities

SEEDS = range(5)
TABLE1 = GAParams(population_size=100, crossover_rate=0.8, mutation_rate=0.3, generations=200)
RADIO = RadioModel()


@pytest.fixture(scope="module")
def table1_runs():
    """Eq. 2 and Eq. 3 runs on the default 200-node field, five seeds each."""
    runs = {}
    for kind in (EQ2, EQ3):
        params = GAParams(**{**TABLE1.__dict__, "fitness_kind": kind})
        for seed in SEEDS:
            dep = generate_deployment(NetworkConfig(seed=seed))
            t0 = time.perf_counter()
            res = evolve(dep, RADIO, params, seed=[seed, 1])
            runs[kind.name, seed] = (res, time.perf_counter() - t0)
    return runs


def test_c1_elitist_monotonicity(table1_runs, report):
    bad, slow = [], []
    for (kind, seed), (res, elapsed) in table1_runs.items():
        best = [m.best_F for m in res.metrics]
        if len(best) != 201 or any(b < a for a, b in zip(best, best[1:])):
            bad.append((kind, seed))
        if elapsed >= 120:
            slow.append((kind, seed, elapsed))
    worst = max(e for _, e in table1_runs.values())
    ok = not bad and not slow
    report(1, ok, f"best F non-decreasing in {10 - len(bad)}/10 runs (eq2+eq3 x 5 seeds); slowest run {worst:.1f}s (<120s)")
    assert ok, (bad, slow)


def test_c2_head_count_collapse(table1_runs, report):
    passed, detail = 0, []
    for seed in SEEDS:
        res, _ = table1_runs["eq2", seed]
        first, last = res.metrics[0].best_TCH, res.metrics[200].best_TCH
        passed += last <= 40 and last <= 0.5 * first
        detail.append(f"{first}->{last}")
    ok = passed >= 4
    report(2, ok, f"eq2 best TCH gen0->gen200 {', '.join(detail)}; {passed}/5 reach <=40 and <=50% (need 4)")
    assert ok


def test_c3_distance_and_energy_fall(table1_runs, report):
    bad = []
    for (kind, seed), (res, _) in table1_runs.items():
        m0, m = res.metrics[0], res.metrics[200]
        if not (m.best_RCSD < m0.best_RCSD and m.best_E < m0.best_E):
            bad.append((kind, seed))
    ok = not bad
    report(3, ok, f"best RCSD and best E fall from gen 0 to gen 200 in {10 - len(bad)}/10 runs")
    assert ok, bad


def test_c4_oracle_equivalence(report):
    t0 = time.perf_counter()
    dep = generate_deployment(NetworkConfig(node_count=10, seed=7))
    _, opt = exhaustive_best(dep, RADIO, EQ3)
    params = GAParams(population_size=50, generations=300, fitness_kind=EQ3)
    hits, above = 0, 0
    for seed in range(20):
        f = evolve(dep, RADIO, params, seed=[seed, 1]).breakdown.F
        hits += bool(np.isclose(f, opt.F, rtol=1e-12, atol=0))
        above += f > opt.F * (1 + 1e-12)
    elapsed = time.perf_counter() - t0
    ok = hits >= 18 and above == 0 and elapsed < 60
    report(4, ok, f"GA hit the exhaustive optimum in {hits}/20 seeds (need 18), {above} above it, {elapsed:.1f}s (<60s)")
    assert ok


def test_c5_leach_comparison(report):
    ratios, ga_first, leach_first = [], [], []
    for seed in SEEDS:
        dep = generate_deployment(NetworkConfig(seed=seed))
        s = {}
        for proto in ("ga", "leach"):
            run = run_lifetime(dep, RADIO, LifetimeConfig(total_rounds=1100, protocol=proto), lifetime_seed(seed))
            s[proto] = lifetime_summary(run.records, dep.node_count)
        ratios.append(s["ga"]["total_energy_J"] / s["leach"]["total_energy_J"])
        ga_first.append(s["ga"]["first_death_round"])
        leach_first.append(s["leach"]["first_death_round"])

    def later_or_equal(g, l):
        if g == "survived":
            return True
        return l != "survived" and g >= l

    longer = sum(later_or_equal(g, l) for g, l in zip(ga_first, leach_first))
    energy_ok = all(r <= 0.9 for r in ratios)
    ok = energy_ok and longer >= 4
    report(
        5,
        ok,
        "GA/LEACH energy ratios " + ", ".join(f"{r:.3f}" for r in ratios) + " (each <=0.9); "
        f"first death GA {ga_first} vs LEACH {leach_first}: GA later/equal in {longer}/5 (need 4)",
    )
    assert ok


def _snapshot(d):
    return {p.relative_to(d).as_posix(): p.read_bytes() for p in sorted(d.rglob("*")) if p.is_file()}


def test_c6_determinism(tmp_path, capsys, report):
    small = ["--n", "25", "--seed", "42"]
    commands = {
        "deploy": ["deploy", *small],
        "evolve": ["evolve", *small, "--generations", "20", "--population", "20", "--links"],
        "lifetime-ga": ["lifetime", *small, "--protocol", "ga", "--rounds", "60", "--generations", "10"],
        "lifetime-leach": ["lifetime", *small, "--protocol", "leach", "--rounds", "300"],
        "compare": ["compare", *small, "--seeds", "2", "--rounds", "40", "--generations", "5"],
        "oracle": ["oracle", "--n", "10", "--seed", "42"],
    }
    mismatched = []
    for name, argv in commands.items():
        outs = []
        for rep in ("a", "b"):
            out = tmp_path / name / rep
            assert main([*argv, "--out", str(out)]) == 0
            outs.append((_snapshot(out) if out.exists() else {}, capsys.readouterr().out.replace(str(out), "OUT")))
        if outs[0] != outs[1]:
            mismatched.append(name)
    for rep in ("a", "b"):
        src = tmp_path / "evolve" / "a" / "metrics.csv"
        assert main(["plot", "--csv", str(src), "--out", str(tmp_path / "plot" / rep)]) == 0
    if _snapshot(tmp_path / "plot" / "a") != _snapshot(tmp_path / "plot" / "b"):
        mismatched.append("plot")
    ok = not mismatched
    report(6, ok, f"{len(commands) + 1 - len(mismatched)}/{len(commands) + 1} subcommands byte-identical on rerun")
    assert ok, mismatched


def test_c7_invariant_suites(report):
    rng = np.random.default_rng(77)
    checks = {}

    ok = True
    for _ in range(100):
        n = int(rng.integers(2, 60))
        dep = generate_deployment(NetworkConfig(node_count=n, seed=int(rng.integers(2**32))))
        dep = dep.with_energies(np.where(rng.random(n) < 0.2, 0.0, 0.5))
        if not dep.alive.any():
            continue
        a = decode(repair(rng.random(n) < rng.random(), dep), dep)
        members = set(a.member_of)
        ok &= members | a.head_ids == set(np.flatnonzero(dep.alive).tolist()) and not members & a.head_ids
    checks["decode partition"] = ok

    fit = np.array([0.5, 1.5, 2.0, 3.0, 3.0])
    draws = roulette_select(fit, rng, 50_000).ravel()
    freq = np.bincount(draws, minlength=5) / draws.size
    checks["roulette +/-0.01 over 1e5 draws"] = bool(np.all(np.abs(freq - roulette_probabilities(fit)) <= 0.01))

    ok = True
    for _ in range(200):
        n = int(rng.integers(2, 100))
        a, b = rng.random(n) < 0.5, rng.random(n) < 0.5
        c1, c2 = single_point_crossover(a, b, rng.random(), rng)
        ok &= bool(((c1 == a) | (c1 == b)).all() and ((c2 == a) | (c2 == b)).all())
        ok &= bool((c1.astype(int) + c2 == a.astype(int) + b).all())
    checks["crossover conservation"] = ok

    ok = True
    for _ in range(100):
        bits = rng.random(int(rng.integers(1, 100))) < 0.5
        ok &= bool((mutate(bits, 0.0, rng) == bits).all() and (mutate(bits, 1.0, rng) == ~bits).all())
    checks["mutation rate 0/1"] = ok

    closure, monotone = True, True
    for i in range(6):
        n = int(rng.integers(5, 30))
        dep = generate_deployment(NetworkConfig(node_count=n, seed=i))
        dep = dep.with_energies(rng.uniform(0.001, 0.03, n))
        proto = "ga" if i % 2 else "leach"
        cfg = LifetimeConfig(total_rounds=300, rounds_per_configuration=9, protocol=proto, ga=GAParams(population_size=16, generations=10))
        run = run_lifetime(dep, RADIO, cfg, seed=i)
        total = run.records[-1].cumulative_energy
        closure &= abs(run.spent_per_node.sum() - total) <= 1e-9 * total
        closure &= abs((dep.energies - run.final.energies).sum() - total) <= 1e-9 * total
        alive = [r.alive_count for r in run.records]
        monotone &= all(x >= y for x, y in zip(alive, alive[1:]))
    checks["energy ledger closure (1e-9 rel)"] = bool(closure)
    checks["alive count non-increasing"] = bool(monotone)

    failed = [k for k, v in checks.items() if not v]
    ok = not failed
    report(7, ok, f"{len(checks) - len(failed)}/{len(checks)} invariant suites green" + (f"; failed: {failed}" if failed else ""))
    assert ok, failed
