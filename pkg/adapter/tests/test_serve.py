"""The networkx adapter process: handshake, outcome mapping, fault isolation,
liveness, and cross-validation against the in-process reference targets."""

import subprocess
import sys

import pytest

from dgfuzz.adapter import AdapterChannel, frame
from dgfuzz.graph import EndpointPair, derive_endpoints, make_graph
from dgfuzz.outputs import Crash, SpfOut, compare_outputs
from dgfuzz.seeds import gen_seeds
from dgfuzz.targets import IMPLS, DEFAULT_PAIRS

COMMAND = [sys.executable, "-m", "nx_adapter"]


@pytest.fixture
def channel():
    ch = AdapterChannel(COMMAND)
    yield ch
    ch.close()


def test_handshake_announces_spf_and_scc(channel):
    assert channel.problems == ("spf", "scc")


def test_spf_single_edge(channel):
    g = make_graph(True, 2, [(0, 1, 3)])
    assert channel.execute("spf", g, EndpointPair(0, 1), 5000) == SpfOut("length", 3)


def test_spf_source_equals_target(channel):
    g = make_graph(True, 1, [])
    assert channel.execute("spf", g, EndpointPair(0, 0), 5000) == SpfOut("length", 0)


def test_spf_unreachable(channel):
    g = make_graph(True, 2, [(1, 0, 4)])
    assert channel.execute("spf", g, EndpointPair(0, 1), 5000) == SpfOut("unreachable")


def test_spf_negative_cycle(channel):
    g = make_graph(True, 3, [(0, 1, 2), (1, 2, -3), (2, 1, 1)])
    assert channel.execute("spf", g, EndpointPair(0, 2), 5000) == SpfOut("negative_cycle")


def test_spf_zero_weight_cycle_is_not_negative(channel):
    g = make_graph(True, 2, [(0, 1, 5), (1, 0, -5)])
    assert channel.execute("spf", g, EndpointPair(0, 1), 5000) == SpfOut("length", 5)


def test_scc_two_cycle(channel):
    g = make_graph(True, 2, [(0, 1, 1), (1, 0, 1)])
    out = channel.execute("scc", g, EndpointPair(0, 1), 5000)
    assert out.components == frozenset({frozenset({0, 1})})


def test_malformed_graph_block_crashes_without_dying(channel):
    proc = channel.proc
    proc.stdin.write(frame("REQ 1 spf 0 0\nD x y\n"))
    proc.stdin.flush()
    import time

    body = channel._read_frame(time.monotonic() + 5)
    assert body is not None and b"crash" in body
    # same process keeps answering
    g = make_graph(True, 1, [])
    assert isinstance(channel.execute("spf", g, EndpointPair(0, 0), 5000), SpfOut)
    assert channel.restarts == 0


def test_unsupported_problem_is_crash_response(channel):
    proc = channel.proc
    proc.stdin.write(frame("REQ 1 mst 0 0\nU 1 0\n"))
    proc.stdin.flush()
    import time

    body = channel._read_frame(time.monotonic() + 5)
    assert body is not None and b"crash" in body and b"mst" in body


def test_eof_exits_cleanly():
    proc = subprocess.Popen(COMMAND, stdin=subprocess.PIPE, stdout=subprocess.PIPE)
    assert proc.stdout.readline().startswith(b"GRAPHFUZZ-ADAPTER 1 ")
    proc.stdin.close()
    assert proc.wait(timeout=10) == 0


def test_liveness_ten_thousand_requests(channel):
    g = make_graph(True, 3, [(0, 1, 2), (1, 2, 3)])
    ep = EndpointPair(0, 2)
    for i in range(10_000):
        problem = "spf" if i % 2 == 0 else "scc"
        out = channel.execute(problem, g, ep, 5000)
        assert not isinstance(out, Crash)
    assert channel.restarts == 0


@pytest.mark.parametrize("problem", ("spf", "scc"))
def test_cross_validation_against_reference(channel, problem):
    """1,000 generated inputs: adapter output equals the reference target."""
    local = IMPLS[problem][DEFAULT_PAIRS[problem][0]]
    for g in gen_seeds(problem, 1000, rng_seed=17):
        ep = derive_endpoints(g)
        got = channel.execute(problem, g, ep, 5000)
        want = local(g, ep)
        assert type(got) is type(want), (g, got, want)
        assert compare_outputs(problem, got, want, graph=g) is None
    assert channel.restarts == 0
