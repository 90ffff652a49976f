"""Per-class silhouette curves and the persisted training baseline."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .metrics import silhouette
from .validation import check_feature_matrix, check_label_array, check_metric

SCHEMA_VERSION = 1

_MEAN_TOL = 1e-12


class ProfileFormatError(ValueError):
    """Raised when a profile file is malformed or has an unsupported schema."""


@dataclass(frozen=True)
class SilhouetteCurve:
    """Ascending-sorted silhouette values of one class, plus their mean."""

    class_id: int
    values: tuple[float, ...]
    mean: float
    count: int

    def __post_init__(self):
        if self.count != len(self.values):
            raise ValueError("curve count must equal the number of values")
        if self.count == 0:
            raise ValueError("curve must hold at least one value")
        vals = np.asarray(self.values)
        if np.any(np.diff(vals) < 0.0):
            raise ValueError("curve values must be non-decreasing")
        if np.any(vals < -1.0) or np.any(vals > 1.0):
            raise ValueError("silhouette values must lie in [-1, 1]")
        if abs(self.mean - float(np.mean(vals))) > _MEAN_TOL:
            raise ValueError("curve mean is inconsistent with its values")

    @classmethod
    def from_values(cls, class_id, values) -> "SilhouetteCurve":
        """Build a curve from unordered values; sorts ascending and computes the mean."""
        vals = tuple(sorted(float(v) for v in values))
        return cls(
            class_id=int(class_id),
            values=vals,
            mean=float(np.mean(np.asarray(vals))),
            count=len(vals),
        )


@dataclass(frozen=True)
class BaselineProfile:
    """What the model learnt at training time, summarized as one curve per class."""

    metric: str
    dimension: int
    n_train: int
    curves: tuple[SilhouetteCurve, ...]
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        object.__setattr__(self, "metric", check_metric(self.metric))
        if self.dimension < 1:
            raise ValueError("profile dimension must be positive")
        if self.n_train < 1:
            raise ValueError("profile n_train must be positive")
        ids = [c.class_id for c in self.curves]
        if len(ids) < 2:
            raise ValueError("profile requires at least two classes")
        if ids != sorted(set(ids)):
            raise ValueError("curves must be unique and sorted by class id")
        if sum(c.count for c in self.curves) != self.n_train:
            raise ValueError("per-class counts must sum to n_train")

    @property
    def class_ids(self) -> tuple[int, ...]:
        return tuple(c.class_id for c in self.curves)

    @property
    def class_counts(self) -> dict[int, int]:
        return {c.class_id: c.count for c in self.curves}

    def curve(self, class_id) -> SilhouetteCurve:
        for c in self.curves:
            if c.class_id == class_id:
                return c
        raise KeyError(f"no curve for class {class_id}")


def build_curves(samples, labels, metric="euclidean") -> dict[int, SilhouetteCurve]:
    """Silhouette curve of every class present in ``labels``."""
    X = check_feature_matrix(samples, name="samples")
    y = check_label_array(labels, X.shape[0])
    values = silhouette(X, y, metric)
    return {
        int(c): SilhouetteCurve.from_values(int(c), values[y == c]) for c in np.unique(y)
    }


def build_profile(samples, labels, metric="euclidean") -> BaselineProfile:
    """Compute the training baseline: one ascending curve per training class."""
    X = check_feature_matrix(samples, name="samples")
    curves = build_curves(X, labels, metric)
    ordered = tuple(curves[c] for c in sorted(curves))
    return BaselineProfile(
        metric=check_metric(metric),
        dimension=int(X.shape[1]),
        n_train=int(X.shape[0]),
        curves=ordered,
    )


def downsample(curve: SilhouetteCurve, target) -> SilhouetteCurve:
    """Thin a curve to ``target`` points by quantile-style index selection.

    Keeps the values at indices floor(i * (count - 1) / (target - 1)) for
    i = 0..target-1, so both endpoints survive, the kept values stay sorted,
    and the operation is idempotent at a fixed target. The mean is recomputed
    over the kept values.
    """
    target = int(target)
    if target < 2:
        raise ValueError("downsample target must be at least 2")
    if target > curve.count:
        raise ValueError(f"downsample target {target} exceeds curve count {curve.count}")
    if target == curve.count:
        return curve
    last = curve.count - 1
    kept = tuple(curve.values[(i * last) // (target - 1)] for i in range(target))
    return SilhouetteCurve(
        class_id=curve.class_id,
        values=kept,
        mean=float(np.mean(np.asarray(kept))),
        count=target,
    )


def align(a: SilhouetteCurve, b: SilhouetteCurve) -> tuple[SilhouetteCurve, SilhouetteCurve]:
    """Down-sample the larger of two curves so both have the same count."""
    if a.count < 2 or b.count < 2:
        raise ValueError("class too small to compare: curves need at least 2 points")
    if a.count > b.count:
        return downsample(a, b.count), b
    if b.count > a.count:
        return a, downsample(b, a.count)
    return a, b


def save_profile(profile: BaselineProfile, path) -> None:
    """Write the profile as versioned JSON.

    Floats are serialized with Python's shortest round-trip representation,
    so ``load_profile(save_profile(p)) == p`` holds exactly.
    """
    doc = {
        "schema_version": profile.schema_version,
        "metric": profile.metric,
        "dimension": profile.dimension,
        "n_train": profile.n_train,
        "classes": [
            {
                "class_id": c.class_id,
                "count": c.count,
                "mean": c.mean,
                "values": list(c.values),
            }
            for c in profile.curves
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_profile(path) -> BaselineProfile:
    """Read a profile written by :func:`save_profile`, validating the schema."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ProfileFormatError(f"malformed profile file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ProfileFormatError(f"profile file {path} must contain a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ProfileFormatError(
            f"unsupported profile schema_version {version!r} (supported: {SCHEMA_VERSION})"
        )
    try:
        curves = tuple(
            SilhouetteCurve(
                class_id=int(entry["class_id"]),
                values=tuple(float(v) for v in entry["values"]),
                mean=float(entry["mean"]),
                count=int(entry["count"]),
            )
            for entry in doc["classes"]
        )
        return BaselineProfile(
            metric=doc["metric"],
            dimension=int(doc["dimension"]),
            n_train=int(doc["n_train"]),
            curves=curves,
            schema_version=int(version),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ProfileFormatError(f"invalid profile file {path}: {exc}") from exc
