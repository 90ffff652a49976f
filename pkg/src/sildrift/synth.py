"""Seeded Gaussian blob generation and the staged drift-injection experiment."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classifier import NearestCentroidClassifier
from .degradation import DegradationReport, evaluate_batch
from .profiles import build_profile
from .validation import check_feature_matrix, check_label_array
from .windowing import MonitorConfig, TrailingWindow

# Rejection sampling keeps every pair of class centers at least this many
# (max) standard deviations apart, so the reference classifier stays accurate.
_MIN_SEPARATION_SIGMA = 6.0
_CENTER_ATTEMPTS = 1000


@dataclass(frozen=True)
class BlobSpec:
    """Isotropic Gaussian classes around well-separated seeded centers."""

    n_classes: int = 4
    n_per_class: int = 2000
    dimension: int = 10
    std: float | tuple[float, ...] = 1.0
    centers: tuple[tuple[float, ...], ...] | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n_classes < 2:
            raise ValueError("need at least two classes")
        if self.n_per_class < 1:
            raise ValueError("n_per_class must be positive")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if not isinstance(self.std, (int, float)):
            object.__setattr__(self, "std", tuple(float(s) for s in self.std))
            if len(self.std) != self.n_classes:
                raise ValueError("per-class std must list one value per class")
        if any(s <= 0.0 for s in self.stds):
            raise ValueError("std must be positive")
        if self.centers is not None:
            centers = tuple(tuple(float(x) for x in c) for c in self.centers)
            object.__setattr__(self, "centers", centers)
            if len(centers) != self.n_classes:
                raise ValueError("need one center per class")
            if any(len(c) != self.dimension for c in centers):
                raise ValueError("center dimensionality must match the spec dimension")

    @property
    def stds(self) -> tuple[float, ...]:
        if isinstance(self.std, (int, float)):
            return (float(self.std),) * self.n_classes
        return self.std


def _draw_centers(rng, k, dim, stds):
    """Uniform centers in a seeded hypercube, rejected until pairwise separated."""
    spread = max(stds)
    side = 10.0 * spread * max(1.0, k ** (1.0 / dim))
    min_dist = _MIN_SEPARATION_SIGMA * spread
    for _ in range(_CENTER_ATTEMPTS):
        centers = rng.uniform(0.0, side, size=(k, dim))
        diff = centers[:, None, :] - centers[None, :, :]
        dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        dist[np.diag_indices(k)] = np.inf
        if dist.min() >= min_dist:
            return centers
    raise ValueError(
        "could not place well-separated class centers; pass explicit centers or lower std"
    )


def gen_blobs(spec: BlobSpec) -> tuple[np.ndarray, np.ndarray]:
    """Labeled dataset with ``n_per_class`` Gaussian samples per class.

    Classes are labeled 0..k-1 in block order. The same spec always produces
    bit-identical output.
    """
    rng = np.random.default_rng(spec.seed)
    stds = spec.stds
    if spec.centers is not None:
        centers = np.asarray(spec.centers, dtype=float)
    else:
        centers = _draw_centers(rng, spec.n_classes, spec.dimension, stds)
    blocks = []
    labels = []
    for c in range(spec.n_classes):
        blocks.append(
            rng.normal(loc=centers[c], scale=stds[c], size=(spec.n_per_class, spec.dimension))
        )
        labels.append(np.full(spec.n_per_class, c, dtype=int))
    return np.vstack(blocks), np.concatenate(labels)


@dataclass(frozen=True)
class TimelineSpec:
    """Staged test schedule: known-class ramp-up, then unknown-class increments."""

    known_classes: tuple[int, int] = (0, 1)
    unknown_classes: tuple[int, ...] = (2,)
    train_fraction: float = 0.60
    drift_increment: float = 0.20
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "known_classes", tuple(int(c) for c in self.known_classes))
        object.__setattr__(self, "unknown_classes", tuple(int(c) for c in self.unknown_classes))
        if len(self.known_classes) != 2 or len(set(self.known_classes)) != 2:
            raise ValueError("the staged schedule is defined for exactly two known classes")
        if set(self.known_classes) & set(self.unknown_classes):
            raise ValueError("known and unknown classes must be disjoint")
        if len(set(self.unknown_classes)) != len(self.unknown_classes):
            raise ValueError("duplicate unknown classes")
        if not 0.0 < self.train_fraction <= 1.0:
            raise ValueError("train_fraction must lie in (0, 1]")
        if not 0.0 < self.drift_increment <= 1.0:
            raise ValueError("drift_increment must lie in (0, 1]")

    @property
    def n_drift_steps(self) -> int:
        return math.ceil(1.0 / self.drift_increment)


@dataclass(frozen=True, eq=False)
class TimelineStep:
    """New samples arriving at one step (the delta over the previous step)."""

    step_id: str
    samples: np.ndarray
    true_labels: np.ndarray


@dataclass(frozen=True, eq=False)
class Timeline:
    """Stratified training split plus ordered step deltas (cumulative by construction)."""

    train_samples: np.ndarray
    train_labels: np.ndarray
    steps: tuple[TimelineStep, ...]


def build_timeline(samples, labels, spec: TimelineSpec) -> Timeline:
    """Split a dataset into a stratified training set and staged test deltas.

    Steps t1..t4 ramp in the known-class test portions: half of the first
    known class, the rest of it, half of the second, then the rest. Each
    later step appends one unknown-class increment of ``drift_increment``
    until the unknown pools are exhausted. With no unknown classes the drift
    steps are empty, which re-evaluates an unchanged window (control runs).
    """
    X = check_feature_matrix(samples, name="samples")
    y = check_label_array(labels, X.shape[0])
    rng = np.random.default_rng(spec.seed)
    present = set(np.unique(y).tolist())
    for c in spec.known_classes + spec.unknown_classes:
        if c not in present:
            raise ValueError(f"class {c} is missing from the dataset")

    train_parts = []
    test_parts = {}
    for c in spec.known_classes:
        idx = np.flatnonzero(y == c)
        idx = idx[rng.permutation(idx.size)]
        n_train = int(math.floor(spec.train_fraction * idx.size))
        if n_train < 1:
            raise ValueError(f"train_fraction leaves class {c} without training samples")
        train_parts.append(idx[:n_train])
        test_parts[c] = idx[n_train:]
    pools = {}
    for c in spec.unknown_classes:
        idx = np.flatnonzero(y == c)
        pools[c] = idx[rng.permutation(idx.size)]

    first, second = spec.known_classes
    t_first, t_second = test_parts[first], test_parts[second]
    deltas = [
        ("t1", t_first[: t_first.size // 2]),
        ("t2", t_first[t_first.size // 2 :]),
        ("t3", t_second[: t_second.size // 2]),
        ("t4", t_second[t_second.size // 2 :]),
    ]
    for j in range(1, spec.n_drift_steps + 1):
        parts = []
        for c in spec.unknown_classes:
            pool = pools[c]
            lo = int(math.floor(min(1.0, (j - 1) * spec.drift_increment) * pool.size))
            hi = int(math.floor(min(1.0, j * spec.drift_increment) * pool.size))
            if hi <= lo and pool.size > 0:
                raise ValueError(
                    f"drift increment too small: step t{4 + j} adds no samples of class {c}"
                )
            parts.append(pool[lo:hi])
        delta = np.concatenate(parts) if parts else np.empty(0, dtype=int)
        deltas.append((f"t{4 + j}", delta))

    train_idx = np.concatenate(train_parts)
    steps = tuple(TimelineStep(sid, X[idx], y[idx]) for sid, idx in deltas)
    return Timeline(X[train_idx], y[train_idx], steps)


def run_experiment(
    blob_spec: BlobSpec | None = None,
    timeline_spec: TimelineSpec | None = None,
    config: MonitorConfig | None = None,
    *,
    on_baseline=None,
    on_step=None,
) -> list[DegradationReport]:
    """Run the staged drift experiment end to end.

    Trains the reference classifier and the baseline profile on the
    stratified training split (true labels), then pushes each step's new
    samples with predicted labels through a trailing window capped at the
    training-set size, evaluating the window against the baseline at every
    step. Fully deterministic under fixed seeds.

    ``on_baseline(profile)`` fires once after training; ``on_step(step_id,
    report, curves)`` fires after each evaluation with the window's current
    per-class curves (empty dict on indeterminate steps). Both are meant for
    exporting.
    """
    blob_spec = blob_spec or BlobSpec()
    timeline_spec = timeline_spec or TimelineSpec()
    config = config or MonitorConfig()
    X, y = gen_blobs(blob_spec)
    timeline = build_timeline(X, y, timeline_spec)
    clf = NearestCentroidClassifier(metric=config.metric)
    clf.fit(timeline.train_samples, timeline.train_labels)
    profile = build_profile(timeline.train_samples, timeline.train_labels, config.metric)
    if on_baseline is not None:
        on_baseline(profile)
    window = TrailingWindow(profile.n_train, profile.class_ids, profile.dimension)
    reports = []
    for step in timeline.steps:
        if step.samples.shape[0]:
            window.extend(step.samples, clf.predict(step.samples))
        snap = window.snapshot()
        result = evaluate_batch(
            profile,
            snap.samples,
            snap.labels,
            step_id=step.step_id,
            config=config,
            trigger={"mode": "step"},
            return_curves=on_step is not None,
        )
        if on_step is not None:
            report, curves = result
            on_step(step.step_id, report, curves)
        else:
            report = result
        reports.append(report)
    return reports
