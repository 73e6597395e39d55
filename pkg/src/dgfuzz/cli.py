"""Command-line front end: fuzz / replay / gen-seeds / report.

Exit codes: 0 = ran clean, 10 = bugs found (fuzz, replay), 2 = configuration
or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import SeedLoadError, write_corpus_entry
from .engine import CampaignConfig, ConfigInvalid, encode_outcome, fuzz, replay
from .feedback import MODES
from .graph import GraphError, parse
from .seeds import gen_seeds
from .targets import DEFAULT_PAIRS, PROBLEMS

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_BUGS = 10


def parse_duration_ms(text: str) -> int:
    """Durations as <int>ms | <int>s | <int>m; a bare integer means seconds."""
    text = text.strip()
    for suffix, scale in (("ms", 1), ("s", 1000), ("m", 60000)):
        if text.endswith(suffix):
            return int(text[: -len(suffix)]) * scale
    return int(text) * 1000


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="dgfuzz", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fuzz", help="run a differential fuzzing campaign")
    f.add_argument("--problem", required=True, choices=PROBLEMS)
    f.add_argument("--impl-a", help="side A implementation (default: problem's pair)")
    f.add_argument("--impl-b", help="side B implementation (default: problem's pair)")
    f.add_argument("--mutant", help="swap side A for this fault-injected mutant")
    f.add_argument("--mode", default="algo", choices=MODES)
    f.add_argument("--energy", type=int, default=100)
    f.add_argument("--max-stack", type=int, default=128)
    f.add_argument("--time-limit", help="e.g. 60s, 5m, 500ms")
    f.add_argument("--exec-limit", type=int)
    f.add_argument("--rng-seed", type=int, default=1)
    f.add_argument("--seeds", help="seed corpus directory (default: one single-vertex graph)")
    f.add_argument("--out", help="output directory (report.json, bugs/, corpus/)")
    f.add_argument("--exec-budget-ms", type=int, default=5000)
    f.add_argument("--stop-on-bug", action="store_true")

    r = sub.add_parser("replay", help="re-classify one graph file")
    r.add_argument("--problem", required=True, choices=PROBLEMS)
    r.add_argument("--impl-a")
    r.add_argument("--impl-b")
    r.add_argument("--mutant", help="swap side A for this fault-injected mutant")
    r.add_argument("--exec-budget-ms", type=int, default=5000)
    r.add_argument("graph_file")

    g = sub.add_parser("gen-seeds", help="generate an initial seed corpus")
    g.add_argument("--problem", required=True, choices=PROBLEMS)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--rng-seed", type=int, default=1)
    g.add_argument("--size-min", type=int, default=4)
    g.add_argument("--size-max", type=int, default=10)
    g.add_argument("--out", required=True, help="directory receiving .graph files")

    p = sub.add_parser("report", help="summarize a finished campaign")
    p.add_argument("--out", required=True, help="campaign output directory")
    return top


def _pair(args) -> tuple[str, str]:
    a, b = DEFAULT_PAIRS[args.problem]
    impl_a = args.impl_a or a
    impl_b = args.impl_b or b
    if getattr(args, "mutant", None):
        impl_a = args.mutant
    return impl_a, impl_b


def cmd_fuzz(args) -> int:
    impl_a, impl_b = _pair(args)
    cfg = CampaignConfig(
        problem=args.problem,
        impl_a=impl_a,
        impl_b=impl_b,
        mode=args.mode,
        energy=args.energy,
        max_stack=args.max_stack,
        time_limit_ms=parse_duration_ms(args.time_limit) if args.time_limit else None,
        exec_limit=args.exec_limit,
        rng_seed=args.rng_seed,
        exec_budget_ms=args.exec_budget_ms,
        seed_corpus_path=args.seeds,
        out_path=args.out,
        stop_on_bug=args.stop_on_bug,
    )
    report = fuzz(cfg)
    print(
        f"{report.total_execs} execs in {report.elapsed_ms} ms "
        f"({report.execs_per_second:.0f}/s), corpus {report.corpus_sizes[-1][1]}, "
        f"{len(report.bugs)} bugs, ended by {report.ended_by}"
    )
    return EXIT_BUGS if report.bugs else EXIT_OK


def cmd_replay(args) -> int:
    impl_a, impl_b = _pair(args)
    with open(args.graph_file, "r", encoding="ascii") as fh:
        g = parse(fh.read())
    kind, out_a, out_b = replay(args.problem, impl_a, impl_b, g, args.exec_budget_ms)
    print(f"{kind}")
    print(f"A ({impl_a}): {encode_outcome(args.problem, out_a)}")
    print(f"B ({impl_b}): {encode_outcome(args.problem, out_b)}")
    return EXIT_OK if kind == "none" else EXIT_BUGS


def cmd_gen_seeds(args) -> int:
    graphs = gen_seeds(args.problem, args.count, args.rng_seed, (args.size_min, args.size_max))
    os.makedirs(args.out, exist_ok=True)
    for i, g in enumerate(graphs):
        write_corpus_entry(args.out, i, g)
    print(f"wrote {len(graphs)} seeds to {args.out}")
    return EXIT_OK


def cmd_report(args) -> int:
    path = os.path.join(args.out, "report.json")
    with open(path, "r", encoding="utf-8") as fh:
        rep = json.load(fh)
    cfg = rep["config"]
    print(f"problem {cfg['problem']}  {cfg['impl_a']} vs {cfg['impl_b']}  mode {cfg['mode']}")
    print(f"{'execs':>12} {'execs/s':>12} {'corpus':>8} {'bugs':>6} {'ended_by':>12}")
    corpus_final = rep["corpus_sizes"][-1][1] if rep["corpus_sizes"] else 0
    print(
        f"{rep['total_execs']:>12} {rep['execs_per_second']:>12.1f} "
        f"{corpus_final:>8} {len(rep['bugs']):>6} {rep['ended_by']:>12}"
    )
    for b in rep["bugs"]:
        print(f"  [{b['kind']}] exec {b['exec']} t {b['t_ms']}ms {b['graph_file']}")
        print(f"      A: {b['output_a']}")
        print(f"      B: {b['output_b']}")
    summary = {
        "total_execs": rep["total_execs"],
        "execs_per_second": rep["execs_per_second"],
        "corpus_size": corpus_final,
        "bug_count": len(rep["bugs"]),
        "ended_by": rep["ended_by"],
    }
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code not in (0, None) else 0
    try:
        if args.command == "fuzz":
            return cmd_fuzz(args)
        if args.command == "replay":
            return cmd_replay(args)
        if args.command == "gen-seeds":
            return cmd_gen_seeds(args)
        if args.command == "report":
            return cmd_report(args)
    except (ConfigInvalid, SeedLoadError, GraphError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
