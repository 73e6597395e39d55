"""Fuzzing loop: fidelity, survival, determinism, reporting, replay."""

import hashlib
import json
import os

import pytest

from dgfuzz.engine import CampaignConfig, ConfigInvalid, fuzz, replay, resolve_impl
from dgfuzz.corpus import SeedLoadError
from dgfuzz.graph import make_graph, parse, serialize
from dgfuzz.outputs import SpfOut
from dgfuzz.seeds import gen_seeds
from dgfuzz.targets import IMPLS
from dgfuzz.corpus import write_corpus_entry


def _cfg(**kw):
    base = dict(
        problem="spf", impl_a="bellman_ford", impl_b="goldberg_radzik",
        mode="algo", exec_limit=1500, rng_seed=1,
    )
    base.update(kw)
    return CampaignConfig(**base)


def test_config_validation():
    with pytest.raises(ConfigInvalid):
        _cfg(problem="nope").validate()
    with pytest.raises(ConfigInvalid):
        _cfg(impl_b="bellman_ford").validate()
    with pytest.raises(ConfigInvalid):
        _cfg(mode="fast").validate()
    with pytest.raises(ConfigInvalid):
        _cfg(exec_limit=None).validate()
    with pytest.raises(ConfigInvalid):
        _cfg(impl_a="SCC_STACK_SKIP").validate()
    with pytest.raises(ConfigInvalid):
        _cfg(energy=0).validate()
    _cfg().validate()


def test_resolve_impl_accepts_mutants():
    assert resolve_impl("spf", "GR_ZERO_CYCLE") is not None
    with pytest.raises(ConfigInvalid):
        resolve_impl("spf", "made_up")


def test_correct_pair_reports_no_bugs():
    report = fuzz(_cfg())
    assert report.total_execs == 1500
    assert report.bugs == []
    assert report.ended_by == "exec_limit"


def test_none_mode_corpus_never_grows():
    report = fuzz(_cfg(mode="none", exec_limit=3000))
    sizes = [s for _, s in report.corpus_sizes]
    assert sizes == [1] * len(sizes)
    assert report.bugs == []


def test_corpus_size_series_monotone():
    report = fuzz(_cfg(exec_limit=5000))
    sizes = [s for _, s in report.corpus_sizes]
    assert sizes == sorted(sizes)
    assert sizes[-1] > 1


def _run_hashable(seed, exec_limit=3000):
    seq = []
    cfg = _cfg(rng_seed=seed, exec_limit=exec_limit)
    report = fuzz(cfg, trace=lambda ev, d: seq.append(serialize(d["graph"])) if ev == "mutate" else None)
    h = hashlib.sha256("".join(seq).encode()).hexdigest()
    bugs = [(b.kind, serialize(b.graph)) for b in report.bugs]
    corpus_sizes = [s for _, s in report.corpus_sizes]
    return h, bugs, corpus_sizes


def test_determinism_same_seed_identical_runs():
    assert _run_hashable(42) == _run_hashable(42)


def test_different_seed_diverges():
    assert _run_hashable(1)[0] != _run_hashable(2)[0]


def test_loop_fidelity_trace_order():
    events = []
    fuzz(_cfg(energy=5, exec_limit=25), trace=lambda ev, d: events.append(ev))
    # pattern: (choose_next, assign_energy, (mutate, execute[, bug|interesting])*)+
    i = 0
    per_exec = []
    while i < len(events):
        assert events[i] == "choose_next"
        assert events[i + 1] == "assign_energy"
        i += 2
        burst = 0
        while i < len(events) and events[i] == "mutate":
            assert events[i + 1] == "execute"
            i += 2
            if i < len(events) and events[i] in ("bug", "interesting"):
                i += 1
            burst += 1
        per_exec.append(burst)
    assert sum(per_exec) == 25
    assert all(b <= 5 for b in per_exec)


def test_campaign_survives_crashing_side(monkeypatch):
    def crashing(g, ep, probe=None):
        raise RuntimeError("injected")

    monkeypatch.setitem(IMPLS["spf"], "crashing_stub", crashing)
    report = fuzz(_cfg(impl_a="crashing_stub", impl_b="bellman_ford", exec_limit=300))
    assert report.total_execs == 300
    assert report.bugs and all(b.kind == "crash" for b in report.bugs)


def test_discrepancies_deduplicated_by_signal_pair(monkeypatch):
    def const_one(g, ep, probe=None):
        return SpfOut("length", 1)

    def const_two(g, ep, probe=None):
        return SpfOut("length", 2)

    monkeypatch.setitem(IMPLS["spf"], "const_one", const_one)
    monkeypatch.setitem(IMPLS["spf"], "const_two", const_two)
    report = fuzz(_cfg(impl_a="const_one", impl_b="const_two", exec_limit=500))
    # every exec differs, but the (signal_a, signal_b) pair is always the same
    assert len(report.bugs) == 1
    assert report.bugs[0].kind == "discrepancy"


def test_stop_on_bug_ends_early(monkeypatch):
    def crashing(g, ep, probe=None):
        raise RuntimeError("injected")

    monkeypatch.setitem(IMPLS["spf"], "crashing_stub", crashing)
    report = fuzz(_cfg(impl_a="crashing_stub", impl_b="bellman_ford",
                       exec_limit=10_000, stop_on_bug=True))
    assert len(report.bugs) == 1
    assert report.total_execs == 1
    assert report.ended_by == "abort"


def test_seed_corpus_loading_and_rejection(tmp_path):
    seeds = gen_seeds("spf", 3, rng_seed=9)
    for i, g in enumerate(seeds):
        write_corpus_entry(str(tmp_path), i, g)
    report = fuzz(_cfg(seed_corpus_path=str(tmp_path), exec_limit=200))
    assert report.corpus_sizes[0][1] == 3
    # an undirected seed violates the spf profile
    bad = tmp_path / "zzz.graph"
    bad.write_text(serialize(make_graph(False, 2, [(0, 1, 1)])), encoding="ascii")
    with pytest.raises(SeedLoadError):
        fuzz(_cfg(seed_corpus_path=str(tmp_path)))


def test_out_path_layout_and_report_schema(tmp_path, monkeypatch):
    def crashing(g, ep, probe=None):
        raise RuntimeError("injected")

    monkeypatch.setitem(IMPLS["spf"], "crashing_stub", crashing)
    out = tmp_path / "campaign"
    report = fuzz(_cfg(impl_a="crashing_stub", impl_b="bellman_ford",
                       exec_limit=50, out_path=str(out)))
    with open(out / "report.json", encoding="utf-8") as fh:
        data = json.load(fh)
    assert set(data) == {"config", "total_execs", "execs_per_second",
                         "corpus_sizes", "bugs", "ended_by"}
    assert data["total_execs"] == 50
    assert data["bugs"]
    first = data["bugs"][0]
    assert set(first) == {"kind", "graph_file", "exec", "t_ms", "output_a", "output_b"}
    assert first["output_a"].startswith("crash:")
    # every recorded bug graph exists on disk and parses
    for b in data["bugs"]:
        g = parse((out / b["graph_file"]).read_text(encoding="ascii"))
        assert g.num_vertices >= 1
    assert (out / "campaign.log").exists()
    corpus_files = sorted(os.listdir(out / "corpus"))
    assert corpus_files[0] == "000000.graph"
    assert len(corpus_files) == report.corpus_sizes[-1][1]


def test_replay_classifications():
    g = make_graph(True, 1, [])
    kind, out_a, out_b = replay("spf", "bellman_ford", "goldberg_radzik", g)
    assert kind == "none" and out_a == SpfOut("length", 0) == out_b
    bug = parse("D 2 2\n0 1 1\n1 0 -1\n")
    kind, _, _ = replay("spf", "GR_ZERO_CYCLE", "bellman_ford", bug)
    assert kind == "discrepancy"
