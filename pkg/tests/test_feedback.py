"""Feedback modes, AFL-style bucketing, signal extraction."""

import pytest

from dgfuzz.feedback import (
    PROBE_SATURATION,
    Feedback,
    ProbeMap,
    bucket,
    extract_signal,
    quantize,
)
from dgfuzz.outputs import (
    ComponentsOut,
    FlowOut,
    MatchingOut,
    MstOut,
    PairScoresOut,
    ScoresOut,
    SpfOut,
)


@pytest.mark.parametrize(
    "x,b",
    [
        (0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (7, 4), (8, 5), (15, 5),
        (16, 6), (31, 6), (32, 7), (37, 7), (127, 7), (128, 8), (100_000, 8),
        (-1, -1), (-9, -5), (-37, -7), (-500, -8),
    ],
)
def test_bucket_table(x, b):
    assert bucket(x) == b


def test_quantize_floor_semantics():
    assert quantize(0.5) == 500
    assert quantize(1 / 3) == 333
    assert quantize(0.0) == 0
    assert quantize(-0.0015) == -2


def test_signal_spf_sentinels():
    assert extract_signal("spf", SpfOut("length", 11)) == ("spf", 11)
    assert extract_signal("spf", SpfOut("unreachable")) == ("spf", -1)
    assert extract_signal("spf", SpfOut("negative_cycle")) == ("spf", -2)


def test_signal_scc_count_and_largest():
    out = ComponentsOut(frozenset({frozenset({0, 1}), frozenset({2, 3})}))
    assert extract_signal("scc", out) == ("scc", 2, 2)
    assert extract_signal("scc", ComponentsOut(frozenset())) == ("scc", 0, 0)


def test_signal_bcc_largest_block():
    out = ComponentsOut(frozenset({frozenset({0, 1, 2}), frozenset({2, 3})}))
    assert extract_signal("bcc", out) == ("bcc", 3)


def test_signal_mst_bucketed_weight_and_nodes():
    assert extract_signal("mst", MstOut(frozenset(), 100, 5)) == ("mst", 7, 5)


def test_signal_hc_two_smallest_difference():
    out = ScoresOut({0: 1.5, 1: 1.0, 2: 3.0})
    assert extract_signal("hc", out) == ("hc", 500)
    assert extract_signal("hc", ScoresOut({0: 2.0})) == ("hc", 0)


def test_signal_similarity_max_score():
    assert extract_signal("js", PairScoresOut({(0, 1): 1 / 3, (0, 2): 0.2})) == ("js", 333)
    assert extract_signal("aa", PairScoresOut({})) == ("aa", 0)


def test_signal_mm_and_mfv():
    assert extract_signal("mm", MatchingOut(frozenset({(0, 1), (2, 3)}))) == ("mm", 2)
    assert extract_signal("mfv", FlowOut(9)) == ("mfv", 9)


def test_probe_map_buckets_and_saturation():
    pm = ProbeMap()
    for _ in range(5):
        pm.record(0)
    pm.record(3)
    assert pm.bucketed_pairs() == frozenset({(0, 4), (3, 1)})
    pm2 = ProbeMap()
    pm2.hits[1] = PROBE_SATURATION
    pm2.record(1)
    assert pm2.hits[1] == PROBE_SATURATION


def test_mode_none_never_interesting():
    fb = Feedback("none")
    assert fb.is_interesting(("spf", 1), None) is None
    assert fb.is_interesting(("spf", 2), ProbeMap()) is None


def test_mode_algo_novel_signal_once():
    fb = Feedback("algo")
    assert fb.is_interesting(("spf", 1), None) == ("algo", ("spf", 1))
    assert fb.is_interesting(("spf", 1), None) is None
    assert fb.is_interesting(("spf", 2), None) == ("algo", ("spf", 2))


def test_mode_cov_new_pairs_only():
    fb = Feedback("cov")
    pm = ProbeMap()
    pm.record(0)
    key = fb.is_interesting(None, pm)
    assert key == ("cov", ((0, 1),))
    assert fb.is_interesting(None, pm) is None
    pm2 = ProbeMap()
    pm2.record(0)
    pm2.record(0)  # same probe, new bucket
    assert fb.is_interesting(None, pm2) == ("cov", ((0, 2),))


def test_mode_combo_disjunction_key_carries_both():
    fb = Feedback("combo")
    pm = ProbeMap()
    pm.record(5)
    assert fb.is_interesting(("spf", 1), pm) == ("combo", ("spf", 1), ((5, 1),))
    # same signal, same coverage: not interesting
    assert fb.is_interesting(("spf", 1), pm) is None
    # new signal alone is enough
    assert fb.is_interesting(("spf", 2), pm) == ("combo", ("spf", 2), ())
    # new coverage alone is enough
    pm2 = ProbeMap()
    pm2.record(6)
    assert fb.is_interesting(("spf", 2), pm2) == ("combo", ("spf", 2), ((6, 1),))


def test_mode_validation():
    with pytest.raises(ValueError):
        Feedback("bogus")
    with pytest.raises(ValueError):
        Feedback("algo").is_interesting(None, None)
    with pytest.raises(ValueError):
        Feedback("cov").is_interesting(("spf", 1), None)
