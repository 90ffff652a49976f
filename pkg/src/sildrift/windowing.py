"""Trailing window over newly classified samples and the evaluation trigger."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .validation import check_feature_matrix, check_label_array, check_metric, check_vector


@dataclass(frozen=True)
class MonitorConfig:
    """Thresholds and policy knobs for the self-evaluation loop."""

    eval_trigger_pct: float = 0.20
    overall_rebuild_threshold: float = 0.10
    class_rebuild_threshold: float = 0.05
    min_window: int = 50
    metric: str = "euclidean"

    def __post_init__(self):
        for name in (
            "eval_trigger_pct",
            "overall_rebuild_threshold",
            "class_rebuild_threshold",
        ):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {value}")
        if self.min_window < 2:
            raise ValueError("min_window must be at least 2")
        object.__setattr__(self, "metric", check_metric(self.metric))


@dataclass(frozen=True, eq=False)
class WindowSnapshot:
    """Immutable copy of the window contents at a point in time."""

    samples: np.ndarray
    labels: np.ndarray
    counts: dict[int, int]
    total_pushed: int


class TrailingWindow:
    """FIFO buffer of (sample, assigned class) pairs capped at a fixed capacity.

    Single-writer. Snapshots copy the contents and are decoupled from later
    pushes; evaluation should always run on a snapshot, never on the live
    buffer.
    """

    def __init__(self, capacity, class_ids, dimension):
        capacity = int(capacity)
        if capacity < 1:
            raise ValueError("window capacity must be positive")
        classes = tuple(sorted(int(c) for c in class_ids))
        if len(classes) != len(set(classes)):
            raise ValueError("duplicate class ids")
        if not classes:
            raise ValueError("window needs at least one known class id")
        self.capacity = capacity
        self.dimension = int(dimension)
        self._classes = classes
        self._buffer: deque[tuple[np.ndarray, int]] = deque()
        self._counts = {c: 0 for c in classes}
        self._total_pushed = 0

    def __len__(self) -> int:
        return len(self._buffer)

    @property
    def class_ids(self) -> tuple[int, ...]:
        return self._classes

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    @property
    def total_pushed(self) -> int:
        return self._total_pushed

    def push(self, sample, assigned_class) -> None:
        """Append the newest sample, evicting the oldest once at capacity."""
        vec = check_vector(sample, name="sample")
        if vec.shape[0] != self.dimension:
            raise ValueError(
                f"dimension mismatch: sample has {vec.shape[0]} features, "
                f"window expects {self.dimension}"
            )
        c = int(assigned_class)
        if c not in self._counts:
            raise ValueError(f"unknown class id {c}")
        if len(self._buffer) == self.capacity:
            _, evicted = self._buffer.popleft()
            self._counts[evicted] -= 1
        self._buffer.append((np.array(vec, dtype=float, copy=True), c))
        self._counts[c] += 1
        self._total_pushed += 1

    def extend(self, samples, labels) -> None:
        """Push a batch of samples in order."""
        X = check_feature_matrix(samples, dimension=self.dimension, name="samples")
        y = check_label_array(labels, X.shape[0])
        for row, c in zip(X, y):
            self.push(row, c)

    def snapshot(self) -> WindowSnapshot:
        """Copy the current contents, oldest first."""
        if self._buffer:
            samples = np.array([v for v, _ in self._buffer], dtype=float)
            labels = np.array([c for _, c in self._buffer], dtype=int)
        else:
            samples = np.empty((0, self.dimension))
            labels = np.empty(0, dtype=int)
        samples.setflags(write=False)
        labels.setflags(write=False)
        return WindowSnapshot(samples, labels, dict(self._counts), self._total_pushed)


def grown_classes(counts, previous, pct) -> list[int]:
    """Class ids whose count grew by at least ``pct`` (relative) since ``previous``.

    A class with no previous count triggers on its first appearance.
    """
    grown = []
    for c in sorted(counts):
        now = int(counts[c])
        prev = int(previous.get(c, 0))
        if prev == 0:
            if now >= 1:
                grown.append(c)
        elif (now - prev) / prev >= pct:
            grown.append(c)
    return grown


def should_evaluate(window, counts_at_last_eval, config) -> bool:
    """Self-evaluation trigger.

    Fires when the window holds at least ``min_window`` samples and some
    class's window count grew by ``eval_trigger_pct`` or more relative to the
    counts captured at the previous evaluation (all zero before the first).
    """
    if len(window) < config.min_window:
        return False
    return bool(grown_classes(window.counts, counts_at_last_eval, config.eval_trigger_pct))
