"""Shared campaign runner for the acceptance suite.

Acceptance campaigns are deterministic given their configuration (wall-clock
fields aside), but cost hours of CPU in total, so finished reports are cached
on disk keyed by the configuration hash.  Delete ``acceptance_cache/`` to
force a full re-run.
"""

from __future__ import annotations

import hashlib
import json
import os

from dgfuzz.engine import CampaignConfig, fuzz
from dgfuzz.mutants import MutantId, mutant_problem
from dgfuzz.targets import DEFAULT_PAIRS, PROBLEMS

CACHE_DIR = os.path.join(os.path.dirname(__file__), "acceptance_cache")

FIVE_MIN_MS = 5 * 60 * 1000
KILL_BUDGET_MS = 60 * 1000


def cached_fuzz(cfg: CampaignConfig) -> dict:
    """Run (or load) a campaign; returns the report dict plus elapsed_ms."""
    blob = json.dumps(cfg.to_dict(), sort_keys=True)
    key = hashlib.sha256(blob.encode()).hexdigest()[:24]
    path = os.path.join(CACHE_DIR, f"{key}.json")
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    report = fuzz(cfg)
    d = report.to_dict()
    d["elapsed_ms"] = report.elapsed_ms
    os.makedirs(CACHE_DIR, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(d, fh)
    os.replace(tmp, path)
    return d


def soundness_config(problem: str, rng_seed: int) -> CampaignConfig:
    a, b = DEFAULT_PAIRS[problem]
    return CampaignConfig(problem, a, b, mode="algo", exec_limit=100_000, rng_seed=rng_seed)


def kill_config(mutant: MutantId, mode: str, rng_seed: int) -> CampaignConfig:
    problem = mutant_problem(mutant)
    _, b = DEFAULT_PAIRS[problem]
    return CampaignConfig(
        problem, mutant.name, b, mode=mode,
        time_limit_ms=KILL_BUDGET_MS, rng_seed=rng_seed, stop_on_bug=True,
    )


def five_minute_config(problem: str, mode: str) -> CampaignConfig:
    a, b = DEFAULT_PAIRS[problem]
    return CampaignConfig(problem, a, b, mode=mode, time_limit_ms=FIVE_MIN_MS, rng_seed=1)


def detection_ms(report: dict) -> int:
    """Time to first bug; censored at the full budget when nothing was found."""
    if report["bugs"]:
        return report["bugs"][0]["t_ms"]
    return KILL_BUDGET_MS


def all_campaign_configs() -> list[CampaignConfig]:
    configs = []
    for m in MutantId:
        for seed in range(1, 6):
            configs.append(kill_config(m, "algo", seed))
    for m in MutantId:
        for seed in range(1, 6):
            configs.append(kill_config(m, "cov", seed))
    for seed in range(1, 6):
        configs.append(kill_config(MutantId.GR_ZERO_CYCLE, "none", seed))
    for problem in PROBLEMS:
        for seed in (1, 2, 3):
            configs.append(soundness_config(problem, seed))
    for problem in PROBLEMS:
        for mode in ("none", "cov", "algo", "combo"):
            configs.append(five_minute_config(problem, mode))
    return configs


if __name__ == "__main__":
    import time

    configs = all_campaign_configs()
    for i, cfg in enumerate(configs):
        t = time.time()
        rep = cached_fuzz(cfg)
        print(
            f"[{i + 1}/{len(configs)}] {cfg.problem} {cfg.impl_a} vs {cfg.impl_b} "
            f"mode={cfg.mode} seed={cfg.rng_seed}: {rep['total_execs']} execs, "
            f"{len(rep['bugs'])} bugs ({time.time() - t:.1f}s)",
            flush=True,
        )
