"""The fuzzing loop: select, energize, mutate, execute both sides, classify.

One campaign is one single-threaded loop over the corpus:

    repeat until a limit fires:
        g = choose_next(corpus)            # uniform
        for energy times:
            g' = stacked_mutate(g)
            out_a, out_b = run both implementations under the time budget
            crash/hang on either side      -> bug record
            else different outputs         -> discrepancy bug record
            else novel signal/coverage     -> corpus grows

Bug-triggering graphs never enter the corpus.  Everything random flows from
one ``random.Random(rng_seed)``, so a campaign is fully reproducible from its
configuration plus seed-corpus bytes; only wall-clock fields vary.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import mutants
from .corpus import Corpus, SeedLoadError, assign_energy, load_seed_corpus, write_corpus_entry
from .executor import run_target
from .feedback import MODES, Feedback, ProbeMap, extract_signal
from .graph import EndpointPair, Graph, derive_endpoints, serialize, validate
from .mutation import stacked_mutate
from .outputs import Crash, Hang, Outcome, compare_outputs, encode_output, is_failure
from .seeds import single_vertex_seed
from .targets import IMPLS, PROBLEMS, TargetInput, profile_for

STATS_SAMPLE_EVERY = 1000


class ConfigInvalid(ValueError):
    pass


def resolve_impl(problem: str, name: str) -> Callable:
    """Map an implementation or mutant name to its callable."""
    if problem not in PROBLEMS:
        raise ConfigInvalid(f"unknown problem {problem!r}")
    impls = IMPLS[problem]
    if name in impls:
        return impls[name]
    try:
        m = mutants.MutantId[name]
    except KeyError:
        raise ConfigInvalid(f"unknown implementation {name!r} for {problem!r}") from None
    try:
        return mutants.instantiate(problem, m)
    except mutants.MutantProblemMismatch as e:
        raise ConfigInvalid(str(e)) from None


@dataclass(frozen=True)
class CampaignConfig:
    problem: str
    impl_a: str
    impl_b: str
    mode: str = "algo"
    energy: int = 100
    max_stack: int = 128
    time_limit_ms: Optional[int] = None
    exec_limit: Optional[int] = None
    rng_seed: int = 1
    exec_budget_ms: int = 5000
    seed_corpus_path: Optional[str] = None
    out_path: Optional[str] = None
    stop_on_bug: bool = False

    def validate(self) -> None:
        if self.problem not in PROBLEMS:
            raise ConfigInvalid(f"unknown problem {self.problem!r}")
        if self.mode not in MODES:
            raise ConfigInvalid(f"unknown mode {self.mode!r}")
        if self.impl_a == self.impl_b:
            raise ConfigInvalid("impl_a and impl_b must differ")
        if self.energy < 1 or self.max_stack < 1 or self.exec_budget_ms < 1:
            raise ConfigInvalid("energy, max_stack and exec_budget_ms must be >= 1")
        if self.time_limit_ms is None and self.exec_limit is None:
            raise ConfigInvalid("need a time limit or an exec limit")
        if self.time_limit_ms is not None and self.time_limit_ms < 1:
            raise ConfigInvalid("time_limit_ms must be >= 1")
        if self.exec_limit is not None and self.exec_limit < 1:
            raise ConfigInvalid("exec_limit must be >= 1")
        resolve_impl(self.problem, self.impl_a)
        resolve_impl(self.problem, self.impl_b)

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "impl_a": self.impl_a,
            "impl_b": self.impl_b,
            "mode": self.mode,
            "energy": self.energy,
            "max_stack": self.max_stack,
            "time_limit_ms": self.time_limit_ms,
            "exec_limit": self.exec_limit,
            "rng_seed": self.rng_seed,
            "exec_budget_ms": self.exec_budget_ms,
            "seed_corpus_path": self.seed_corpus_path,
            "out_path": self.out_path,
            "stop_on_bug": self.stop_on_bug,
        }


@dataclass(frozen=True)
class BugRecord:
    kind: str  # "crash" | "hang" | "discrepancy"
    graph: Graph
    endpoints: EndpointPair
    output_a: Outcome
    output_b: Outcome
    found_at_exec: int
    found_at_ms: int
    graph_file: Optional[str] = None


@dataclass
class CampaignReport:
    config: CampaignConfig
    total_execs: int = 0
    elapsed_ms: int = 0
    corpus_sizes: list = field(default_factory=list)  # [(t_ms, size), ...]
    bugs: list = field(default_factory=list)
    ended_by: str = "exec_limit"

    @property
    def execs_per_second(self) -> float:
        if self.elapsed_ms <= 0:
            return 0.0
        return self.total_execs / (self.elapsed_ms / 1000.0)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "total_execs": self.total_execs,
            "execs_per_second": self.execs_per_second,
            "corpus_sizes": [[t, s] for t, s in self.corpus_sizes],
            "bugs": [
                {
                    "kind": b.kind,
                    "graph_file": b.graph_file,
                    "exec": b.found_at_exec,
                    "t_ms": b.found_at_ms,
                    "output_a": encode_outcome(self.config.problem, b.output_a),
                    "output_b": encode_outcome(self.config.problem, b.output_b),
                }
                for b in self.bugs
            ],
            "ended_by": self.ended_by,
        }


def encode_outcome(problem: str, out: Outcome) -> str:
    if isinstance(out, Crash):
        return f"crash: {out.message}"
    if isinstance(out, Hang):
        return "hang"
    return encode_output(problem, out)


def classify(out_a: Outcome, out_b: Outcome, problem: str, graph: Graph) -> tuple[str, Optional[str]]:
    """Per-execution verdict: kind in {crash, hang, discrepancy, none}."""
    if isinstance(out_a, Hang) or isinstance(out_b, Hang):
        return "hang", None
    if isinstance(out_a, Crash) or isinstance(out_b, Crash):
        return "crash", None
    diff = compare_outputs(problem, out_a, out_b, graph=graph)
    if diff is not None:
        return "discrepancy", diff
    return "none", None


class _Sink:
    """Output directory writer; inert when no out_path is configured."""

    def __init__(self, out_path: Optional[str]):
        self.root = out_path
        self.log_fh = None
        if out_path:
            os.makedirs(os.path.join(out_path, "bugs"), exist_ok=True)
            os.makedirs(os.path.join(out_path, "corpus"), exist_ok=True)
            self.log_fh = open(os.path.join(out_path, "campaign.log"), "w", encoding="utf-8")

    def log(self, msg: str) -> None:
        if self.log_fh:
            self.log_fh.write(f"[{time.strftime('%Y-%m-%dT%H:%M:%S')}] {msg}\n")
            self.log_fh.flush()

    def write_bug(self, kind: str, index: int, g: Graph) -> Optional[str]:
        if not self.root:
            return None
        rel = os.path.join("bugs", f"{kind}-{index:03d}.graph")
        with open(os.path.join(self.root, rel), "w", encoding="ascii") as fh:
            fh.write(serialize(g))
        return rel

    def finish(self, report: CampaignReport, corpus: Corpus) -> None:
        if not self.root:
            return
        for i, entry in enumerate(corpus.entries):
            write_corpus_entry(os.path.join(self.root, "corpus"), i, entry.graph)
        with open(os.path.join(self.root, "report.json"), "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
        self.log(
            f"done: {report.total_execs} execs, {len(report.bugs)} bugs, "
            f"corpus {len(corpus)}, ended by {report.ended_by}"
        )
        self.log_fh.close()


def _load_seeds(cfg: CampaignConfig, profile) -> list[Graph]:
    if cfg.seed_corpus_path is None:
        return [single_vertex_seed(profile)]
    seeds = load_seed_corpus(cfg.seed_corpus_path)
    if not seeds:
        raise SeedLoadError(f"no .graph files in {cfg.seed_corpus_path!r}")
    for i, g in enumerate(seeds):
        violations = validate(g, profile)
        if violations:
            raise SeedLoadError(f"seed {i} violates profile: {violations[0]}")
    return seeds


def fuzz(
    cfg: CampaignConfig,
    trace: Optional[Callable[[str, dict], None]] = None,
    remote_b: Optional[Callable] = None,
) -> CampaignReport:
    """Run one campaign to completion and return its report.

    ``trace`` is a test hook receiving (event, data) for every loop step:
    choose_next, assign_energy, mutate, execute, bug, interesting.

    ``remote_b`` replaces impl_b with an out-of-process target, e.g.
    ``AdapterChannel.as_impl(problem)``.  It is called directly (not under
    the SIGALRM watchdog) because the channel enforces its own budget and
    already reifies Crash and Hang.
    """
    import random

    cfg.validate()
    fn_a = resolve_impl(cfg.problem, cfg.impl_a)
    fn_b = resolve_impl(cfg.problem, cfg.impl_b) if remote_b is None else remote_b
    profile = profile_for(cfg.problem, cfg.impl_a, cfg.impl_b)
    seeds = _load_seeds(cfg, profile)

    corpus = Corpus()
    for i, g in enumerate(seeds):
        corpus.add_if_novel(g, ("seed", i))
    feedback = Feedback(cfg.mode)
    needs_probes = cfg.mode in ("cov", "combo")
    rng = random.Random(cfg.rng_seed)
    sink = _Sink(cfg.out_path)
    sink.log(f"campaign start: {cfg.to_dict()}")

    report = CampaignReport(config=cfg)
    seen_discrepancies: set = set()
    start = time.monotonic()

    def elapsed_ms() -> int:
        return int((time.monotonic() - start) * 1000)

    report.corpus_sizes.append((0, len(corpus)))

    def limit_hit() -> Optional[str]:
        if cfg.exec_limit is not None and report.total_execs >= cfg.exec_limit:
            return "exec_limit"
        if cfg.time_limit_ms is not None and elapsed_ms() >= cfg.time_limit_ms:
            return "time_limit"
        return None

    ended = None
    try:
        while ended is None:
            parent = corpus.choose_next(rng)
            if trace:
                trace("choose_next", {"graph": parent})
            energy = assign_energy(parent, cfg.energy)
            if trace:
                trace("assign_energy", {"energy": energy})
            for _ in range(energy):
                ended = limit_hit()
                if ended:
                    break
                child = stacked_mutate(
                    parent, lambda: corpus.choose_next(rng), profile, rng, cfg.max_stack
                )
                ep = derive_endpoints(child)
                tin = TargetInput(child, ep)
                if trace:
                    trace("mutate", {"graph": child})
                probes = ProbeMap() if needs_probes else None
                out_a = run_target(fn_a, tin, cfg.exec_budget_ms, probes)
                if remote_b is None:
                    out_b = run_target(fn_b, tin, cfg.exec_budget_ms)
                else:
                    out_b = fn_b(child, ep)
                if trace:
                    trace("execute", {"a": out_a, "b": out_b})
                report.total_execs += 1
                kind, detail = classify(out_a, out_b, cfg.problem, child)
                if kind != "none":
                    record = True
                    if kind == "discrepancy":
                        key = (
                            extract_signal(cfg.problem, out_a),
                            extract_signal(cfg.problem, out_b),
                        )
                        record = key not in seen_discrepancies
                        seen_discrepancies.add(key)
                    if record:
                        index = sum(1 for b in report.bugs if b.kind == kind)
                        rel = sink.write_bug(kind, index, child)
                        bug = BugRecord(
                            kind, child, ep, out_a, out_b,
                            report.total_execs, elapsed_ms(), rel,
                        )
                        report.bugs.append(bug)
                        sink.log(
                            f"bug {kind} at exec {bug.found_at_exec}: "
                            f"{encode_outcome(cfg.problem, out_a)} vs "
                            f"{encode_outcome(cfg.problem, out_b)}"
                            + (f" ({detail})" if detail else "")
                        )
                        if trace:
                            trace("bug", {"kind": kind, "graph": child})
                        if cfg.stop_on_bug:
                            ended = "abort"
                            break
                else:
                    sig = extract_signal(cfg.problem, out_a) if cfg.mode != "none" else None
                    novelty = feedback.is_interesting(sig, probes)
                    if novelty is not None:
                        if corpus.add_if_novel(child, novelty, report.total_execs) and trace:
                            trace("interesting", {"graph": child, "key": novelty})
                if report.total_execs % STATS_SAMPLE_EVERY == 0:
                    report.corpus_sizes.append((elapsed_ms(), len(corpus)))
    except KeyboardInterrupt:
        ended = "abort"

    report.ended_by = ended or "abort"
    report.elapsed_ms = max(elapsed_ms(), 1)
    report.corpus_sizes.append((report.elapsed_ms, len(corpus)))
    sink.finish(report, corpus)
    return report


def replay(
    problem: str,
    impl_a: str,
    impl_b: str,
    g: Graph,
    exec_budget_ms: int = 5000,
) -> tuple[str, Outcome, Outcome]:
    """Re-run one graph through both sides; returns (kind, out_a, out_b)
    with kind in {crash, hang, discrepancy, none}."""
    fn_a = resolve_impl(problem, impl_a)
    fn_b = resolve_impl(problem, impl_b)
    tin = TargetInput(g, derive_endpoints(g))
    out_a = run_target(fn_a, tin, exec_budget_ms)
    out_b = run_target(fn_b, tin, exec_budget_ms)
    kind, _ = classify(out_a, out_b, problem, g)
    return kind, out_a, out_b
