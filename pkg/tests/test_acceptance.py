"""Acceptance gate: one test (and one printed PASS/FAIL line) per criterion.

Campaign-based criteria read deterministic, disk-cached campaign reports (see
acceptance_util.cached_fuzz); the first run computes them, which takes a few
hours of CPU.  Run ``python3 tests/acceptance_util.py`` ahead of time to warm
the cache.
"""

import hashlib
import json
import random
import statistics

from dgfuzz.engine import CampaignConfig, fuzz
from dgfuzz.executor import run_target
from dgfuzz.graph import derive_endpoints, make_graph, serialize
from dgfuzz.mutants import MutantId
from dgfuzz.outputs import compare_outputs
from dgfuzz.targets import IMPLS, PROBLEMS, TargetInput, profile_for
from dgfuzz.targets.oracle import brute_force_oracle, _simple_cycles_weights
from dgfuzz.targets.spf import bellman_ford, goldberg_radzik

from acceptance_util import (
    cached_fuzz,
    detection_ms,
    five_minute_config,
    kill_config,
    soundness_config,
)


def _verdict(capsys, criterion: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\nACCEPTANCE CRITERION {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_differential_soundness(capsys):
    """100k-exec algo campaigns (seeds 1-3) on correct pairs: 0 bugs, <10 min."""
    worst_ms = 0
    total_bugs = 0
    for problem in PROBLEMS:
        for seed in (1, 2, 3):
            rep = cached_fuzz(soundness_config(problem, seed))
            assert rep["total_execs"] == 100_000
            total_bugs += len(rep["bugs"])
            worst_ms = max(worst_ms, rep["elapsed_ms"])
    ok = total_bugs == 0 and worst_ms < 600_000
    _verdict(capsys, 1, ok,
             f"27 campaigns, {total_bugs} bugs, slowest {worst_ms / 1000:.0f}s")


def _random_graph(p, rng, max_n=7, max_m=16):
    n = rng.randint(1, max_n)
    cands = []
    for u in range(n):
        for v in range(u if p.allow_self_loops else u + 1, n):
            if p.require_bipartite and (u + v) % 2 == 0:
                continue
            if p.directed and u != v and rng.random() < 0.5:
                cands.append((v, u))
            else:
                cands.append((u, v))
    rng.shuffle(cands)
    m = rng.randint(0, min(len(cands), max_m))
    edges = [
        (u, v, rng.randint(p.weight_min, p.weight_max) if p.weighted else 1)
        for u, v in cands[:m]
    ]
    return make_graph(p.directed, n, edges, allow_self_loops=p.allow_self_loops)


def test_criterion_2_oracle_equivalence(capsys):
    """2,000 random small graphs per implementation match the brute-force oracle."""
    mismatches = []
    checked = 0
    for problem in PROBLEMS:
        for name, fn in IMPLS[problem].items():
            p = profile_for(problem, name)
            rng = random.Random(f"oracle-eq:{problem}:{name}")
            for _ in range(2000):
                g = _random_graph(p, rng)
                tin = TargetInput(g, derive_endpoints(g))
                want = brute_force_oracle(problem, tin)
                got = run_target(fn, tin, 5000)
                checked += 1
                if type(got) is not type(want) or compare_outputs(problem, got, want, graph=g):
                    mismatches.append((problem, name, serialize(g)))
    ok = not mismatches
    _verdict(capsys, 2, ok,
             f"{checked} oracle comparisons, {len(mismatches)} mismatches"
             + (f"; first: {mismatches[0]}" if mismatches else ""))


def _kill_outcomes(mutant: MutantId, mode: str):
    reports = [cached_fuzz(kill_config(mutant, mode, seed)) for seed in range(1, 6)]
    kinds = [rep["bugs"][0]["kind"] if rep["bugs"] else None for rep in reports]
    times = [detection_ms(rep) for rep in reports]
    return kinds, times


def test_criterion_3_mutant_kill(capsys):
    """Each mutant detected by mode algo within 60 s in >= 4 of 5 trials."""
    failures = []
    details = []
    for m in MutantId:
        want = "hang" if m is MutantId.MFV_HANG else "discrepancy"
        kinds, _ = _kill_outcomes(m, "algo")
        hits = sum(1 for k in kinds if k == want)
        details.append(f"{m.name}={hits}/5")
        if hits < 4:
            failures.append(m.name)
    ok = not failures
    _verdict(capsys, 3, ok, ", ".join(details))


def test_criterion_4_feedback_effect_direction(capsys):
    """Median detection: algo <= none and algo <= cov on GR_ZERO_CYCLE;
    algo median <= cov median on >= 4 of 6 mutants."""
    _, algo_gr = _kill_outcomes(MutantId.GR_ZERO_CYCLE, "algo")
    _, none_gr = _kill_outcomes(MutantId.GR_ZERO_CYCLE, "none")
    _, cov_gr = _kill_outcomes(MutantId.GR_ZERO_CYCLE, "cov")
    med = statistics.median
    gr_ok = med(algo_gr) <= med(none_gr) and med(algo_gr) <= med(cov_gr)
    wins = 0
    per_mutant = []
    for m in MutantId:
        _, algo_t = _kill_outcomes(m, "algo")
        _, cov_t = _kill_outcomes(m, "cov")
        win = med(algo_t) <= med(cov_t)
        wins += win
        per_mutant.append(f"{m.name}: algo {med(algo_t) / 1000:.1f}s vs cov {med(cov_t) / 1000:.1f}s")
    ok = gr_ok and wins >= 4
    _verdict(
        capsys, 4, ok,
        f"GR_ZERO_CYCLE medians algo/none/cov = {med(algo_gr) / 1000:.1f}/"
        f"{med(none_gr) / 1000:.1f}/{med(cov_gr) / 1000:.1f}s; "
        f"algo<=cov on {wins}/6 mutants ({'; '.join(per_mutant)})",
    )


def _five_minute(problem: str, mode: str) -> dict:
    return cached_fuzz(five_minute_config(problem, mode))


def test_criterion_5_corpus_size_direction(capsys):
    """corpus(algo) > corpus(cov) on >= 7 of 9 problems; none grows by 0."""
    algo_wins = 0
    none_growth = 0
    details = []
    for problem in PROBLEMS:
        algo = _five_minute(problem, "algo")["corpus_sizes"][-1][1]
        cov = _five_minute(problem, "cov")["corpus_sizes"][-1][1]
        none_sizes = [s for _, s in _five_minute(problem, "none")["corpus_sizes"]]
        none_growth += none_sizes[-1] - none_sizes[0]
        algo_wins += algo > cov
        details.append(f"{problem}: algo {algo} vs cov {cov}")
    ok = algo_wins >= 7 and none_growth == 0
    _verdict(capsys, 5, ok,
             f"algo>cov on {algo_wins}/9; none growth {none_growth} ({'; '.join(details)})")


def test_criterion_6_throughput_direction(capsys):
    """execs/sec: none > algo >= combo on every problem (5-minute campaigns)."""
    bad = []
    details = []
    for problem in PROBLEMS:
        rates = {
            mode: _five_minute(problem, mode)["execs_per_second"]
            for mode in ("none", "algo", "combo")
        }
        details.append(
            f"{problem}: {rates['none']:.0f}/{rates['algo']:.0f}/{rates['combo']:.0f}"
        )
        if not (rates["none"] > rates["algo"] >= rates["combo"]):
            bad.append(problem)
    ok = not bad
    _verdict(capsys, 6, ok,
             f"none/algo/combo execs-per-sec: {'; '.join(details)}"
             + (f"; violated on {bad}" if bad else ""))


def _campaign_fingerprint(tmp_path, tag: str):
    out = tmp_path / tag
    seq = []
    cfg = CampaignConfig(
        "spf", "bellman_ford", "goldberg_radzik", mode="algo",
        exec_limit=10_000, rng_seed=31, out_path=str(out),
    )
    report = fuzz(cfg, trace=lambda ev, d: seq.append(serialize(d["graph"])) if ev == "mutate" else None)
    gen_hash = hashlib.sha256("".join(seq).encode()).hexdigest()
    data = json.loads((out / "report.json").read_text(encoding="utf-8"))
    bugs = [
        {k: v for k, v in b.items() if k != "t_ms"}  # wall-clock excluded
        for b in data["bugs"]
    ]
    corpus = sorted(
        (f.name, f.read_text(encoding="ascii")) for f in (out / "corpus").iterdir()
    )
    return gen_hash, bugs, corpus, report.total_execs


def test_criterion_7_determinism(capsys, tmp_path):
    """Identical config and rng_seed: identical bugs, corpus files, graph sequence."""
    a = _campaign_fingerprint(tmp_path, "first")
    b = _campaign_fingerprint(tmp_path, "second")
    ok = a == b
    _verdict(capsys, 7, ok,
             f"10k-exec runs: graph-sequence, bug-list and corpus hashes "
             f"{'identical' if ok else 'DIFFER'}")


def test_criterion_8_zero_weight_cycle_law(capsys):
    """10,000 generated SPF graphs: no negative cycle (by brute enumeration)
    means neither side reports one, zero-weight cycles included."""
    p = profile_for("spf")
    rng = random.Random(88)
    zero_cycle_graphs = 0
    violations = 0
    for i in range(10_000):
        g = _random_graph(p, rng, max_n=6, max_m=12)
        if i % 2 == 0 and g.num_vertices >= 2:
            # bias: splice in a directed cycle whose weights sum to zero
            k = rng.randint(2, min(4, g.num_vertices))
            cyc = rng.sample(range(g.num_vertices), k)
            ws = [rng.randint(-8, 8) for _ in range(k - 1)]
            ws.append(-sum(ws))
            if all(-8 <= w <= 64 for w in ws):
                edges = {(u, v): w for u, v, w in g.edges}
                for j in range(k):
                    edges[(cyc[j], cyc[(j + 1) % k])] = ws[j]
                g = make_graph(True, g.num_vertices, [(u, v, w) for (u, v), w in edges.items()],
                               allow_self_loops=False)
        weights = _simple_cycles_weights(g, set(range(g.num_vertices)))
        if any(w < 0 for w in weights):
            continue  # a genuine negative cycle may be reported
        if any(w == 0 for w in weights):
            zero_cycle_graphs += 1
        ep = derive_endpoints(g)
        for fn in (bellman_ford, goldberg_radzik):
            if fn(g, ep).status == "negative_cycle":
                violations += 1
    ok = violations == 0 and zero_cycle_graphs > 100
    _verdict(capsys, 8, ok,
             f"{zero_cycle_graphs} graphs held a zero-weight cycle, "
             f"{violations} false negative-cycle reports")
