"""Tests for the trailing window and the self-evaluation trigger."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sildrift import MonitorConfig, TrailingWindow, should_evaluate
from sildrift.windowing import grown_classes


def make_window(capacity=5, classes=(0, 1), dim=1):
    return TrailingWindow(capacity, classes, dim)


# ---------------------------------------------------------------------------
# MonitorConfig
# ---------------------------------------------------------------------------


def test_config_defaults():
    cfg = MonitorConfig()
    assert cfg.eval_trigger_pct == 0.20
    assert cfg.overall_rebuild_threshold == 0.10
    assert cfg.class_rebuild_threshold == 0.05
    assert cfg.min_window == 50
    assert cfg.metric == "euclidean"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"eval_trigger_pct": 0.0},
        {"eval_trigger_pct": 1.5},
        {"overall_rebuild_threshold": -0.1},
        {"class_rebuild_threshold": 0.0},
        {"min_window": 1},
        {"metric": "hamming"},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        MonitorConfig(**kwargs)


# ---------------------------------------------------------------------------
# TrailingWindow
# ---------------------------------------------------------------------------


def test_push_and_counts():
    w = make_window()
    w.push([1.0], 0)
    assert len(w) == 1
    assert w.counts == {0: 1, 1: 0}
    assert w.total_pushed == 1


def test_fifo_eviction_with_tagged_samples():
    w = make_window(capacity=5)
    for i in range(8):
        w.push([float(i)], i % 2)
    snap = w.snapshot()
    assert len(w) == 5
    assert snap.samples[:, 0].tolist() == [3.0, 4.0, 5.0, 6.0, 7.0]
    assert snap.labels.tolist() == [1, 0, 1, 0, 1]
    assert w.total_pushed == 8


def test_counts_stay_consistent_under_churn():
    rng = np.random.default_rng(2)
    w = make_window(capacity=7, classes=(0, 1, 2))
    for _ in range(200):
        w.push([float(rng.normal())], int(rng.integers(0, 3)))
        assert sum(w.counts.values()) == len(w)
        assert len(w) <= 7


def test_push_validation():
    w = make_window()
    with pytest.raises(ValueError, match="unknown class id"):
        w.push([1.0], 9)
    with pytest.raises(ValueError, match="dimension mismatch"):
        w.push([1.0, 2.0], 0)
    with pytest.raises(ValueError, match="capacity"):
        TrailingWindow(0, (0, 1), 1)


def test_extend_pushes_in_order():
    w = make_window(capacity=3)
    w.extend([[1.0], [2.0], [3.0], [4.0]], [0, 1, 0, 1])
    assert w.snapshot().samples[:, 0].tolist() == [2.0, 3.0, 4.0]


def test_snapshot_is_decoupled_from_pushes():
    w = make_window()
    w.push([1.0], 0)
    snap = w.snapshot()
    w.push([2.0], 1)
    assert snap.samples.shape == (1, 1)
    assert snap.counts == {0: 1, 1: 0}
    assert not snap.samples.flags.writeable


def test_snapshot_of_empty_window():
    snap = make_window(dim=3).snapshot()
    assert snap.samples.shape == (0, 3)
    assert snap.labels.shape == (0,)
    assert snap.counts == {0: 0, 1: 0}


# ---------------------------------------------------------------------------
# should_evaluate
# ---------------------------------------------------------------------------


def fill(window, counts):
    for c, n in counts.items():
        for _ in range(n):
            window.push([0.0], c)


def test_trigger_exact_boundary():
    cfg = MonitorConfig(min_window=50)
    w = make_window(capacity=10_000)
    fill(w, {0: 119, 1: 100})
    prev = {0: 100, 1: 100}
    assert not should_evaluate(w, prev, cfg)  # 19% < 20%
    w.push([0.0], 0)  # 120 vs 100: exactly 20%
    assert should_evaluate(w, prev, cfg)


def test_trigger_needs_min_window():
    cfg = MonitorConfig(min_window=50)
    w = make_window(capacity=100)
    fill(w, {0: 49})
    assert not should_evaluate(w, {0: 0, 1: 0}, cfg)
    w.push([0.0], 0)
    assert should_evaluate(w, {0: 0, 1: 0}, cfg)


def test_first_appearance_triggers():
    cfg = MonitorConfig(min_window=2)
    w = make_window(capacity=100)
    fill(w, {0: 10})
    prev = {0: 10, 1: 0}
    assert not should_evaluate(w, prev, cfg)
    w.push([0.0], 1)
    assert should_evaluate(w, prev, cfg)


def test_shrinking_class_never_triggers():
    cfg = MonitorConfig(min_window=2)
    w = make_window(capacity=100)
    fill(w, {0: 50, 1: 10})
    prev = {0: 60, 1: 10}
    assert not should_evaluate(w, prev, cfg)


def test_grown_classes_reports_ids():
    assert grown_classes({0: 120, 1: 100}, {0: 100, 1: 100}, 0.2) == [0]
    assert grown_classes({0: 119, 1: 130}, {0: 100, 1: 100}, 0.2) == [1]
    assert grown_classes({0: 5, 1: 0}, {}, 0.2) == [0]


@settings(max_examples=60, deadline=None)
@given(
    prev=st.dictionaries(st.integers(0, 3), st.integers(0, 50), min_size=4, max_size=4),
    now=st.dictionaries(st.integers(0, 3), st.integers(0, 50), min_size=4, max_size=4),
    bump=st.dictionaries(st.integers(0, 3), st.integers(0, 20), min_size=4, max_size=4),
)
def test_trigger_is_monotone_in_counts(prev, now, bump):
    # if counts fire, any componentwise-larger counts also fire
    pct = 0.2
    fired = bool(grown_classes(now, prev, pct))
    bigger = {c: now[c] + bump[c] for c in now}
    if fired:
        assert bool(grown_classes(bigger, prev, pct))
