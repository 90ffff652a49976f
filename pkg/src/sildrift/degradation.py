"""Class-level and model-level degradation scores from curve comparison."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metrics import maape
from .profiles import BaselineProfile, SilhouetteCurve, align, build_curves
from .validation import check_feature_matrix, check_label_array
from .windowing import MonitorConfig

HALF_PI = math.pi / 2.0

STATUS_OK = "ok"
STATUS_NO_DATA = "no_data"
STATUS_TOO_SMALL = "too_small"
STATUS_NOT_EVALUATED = "not_evaluated"


@dataclass(frozen=True)
class ClassDegradation:
    """One class's contribution to the model-level degradation sum.

    ``deg = alpha * maape_norm * weight`` where ``maape_norm`` rescales the
    raw MAAPE to [0, 1] by its pi/2 maximum and ``weight = n_c / n`` is the
    class's share of the window. ``alpha`` is +1 when the baseline mean
    silhouette is at least the current mean (quality did not improve), else
    -1.
    """

    class_id: int
    n_c: int
    weight: float
    maape_raw: float
    maape_norm: float
    alpha: int
    deg: float
    baseline_mean: float
    current_mean: float | None
    status: str = STATUS_OK

    def to_dict(self) -> dict:
        return {
            "class_id": self.class_id,
            "n_c": self.n_c,
            "weight": self.weight,
            "maape_raw": self.maape_raw,
            "maape_norm": self.maape_norm,
            "alpha": self.alpha,
            "deg": self.deg,
            "baseline_mean": self.baseline_mean,
            "current_mean": self.current_mean,
            "status": self.status,
        }


@dataclass(frozen=True)
class DegradationReport:
    """Outcome of one self-evaluation of the trailing window."""

    step_id: str | None
    window_size: int
    classes: tuple[ClassDegradation, ...]
    overall: float
    indeterminate: bool
    indeterminate_reason: str | None
    rebuild_recommended: bool
    trigger: dict | None = None

    @property
    def max_class_deg(self) -> float:
        return max(c.deg for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "step_id": self.step_id,
            "window_size": self.window_size,
            "classes": [c.to_dict() for c in self.classes],
            "overall": self.overall,
            "indeterminate": self.indeterminate,
            "indeterminate_reason": self.indeterminate_reason,
            "rebuild_recommended": self.rebuild_recommended,
            "trigger": self.trigger,
        }


def class_degradation(
    baseline: SilhouetteCurve,
    current: SilhouetteCurve | None,
    n_c,
    n,
) -> ClassDegradation:
    """Signed, weighted curve-shift score for one class.

    The MAAPE between the aligned baseline and current curves (baseline
    values are the reference series) is normalized by pi/2, weighted by the
    class share ``n_c / n``, and signed by the mean comparison. Classes with
    no window samples, or with curves too short to compare, score exactly 0
    and are flagged accordingly.
    """
    n = int(n)
    n_c = int(n_c)
    if n < 1:
        raise ValueError("window size n must be at least 1")
    if n_c < 0 or n_c > n:
        raise ValueError(f"n_c must lie in [0, n], got n_c={n_c}, n={n}")
    weight = n_c / n
    if n_c == 0:
        return ClassDegradation(
            class_id=baseline.class_id,
            n_c=0,
            weight=0.0,
            maape_raw=0.0,
            maape_norm=0.0,
            alpha=1,
            deg=0.0,
            baseline_mean=baseline.mean,
            current_mean=None,
            status=STATUS_NO_DATA,
        )
    if current is None:
        raise ValueError("a current curve is required when n_c > 0")
    if current.class_id != baseline.class_id:
        raise ValueError(
            f"curve class mismatch: baseline {baseline.class_id} vs current {current.class_id}"
        )
    if baseline.count < 2 or current.count < 2:
        alpha = 1 if baseline.mean >= current.mean else -1
        return ClassDegradation(
            class_id=baseline.class_id,
            n_c=n_c,
            weight=weight,
            maape_raw=0.0,
            maape_norm=0.0,
            alpha=alpha,
            deg=0.0,
            baseline_mean=baseline.mean,
            current_mean=current.mean,
            status=STATUS_TOO_SMALL,
        )
    if baseline.count != current.count:
        raise ValueError(
            "curves must be aligned to the same count before comparison "
            f"({baseline.count} vs {current.count})"
        )
    raw = maape(baseline.values, current.values)
    alpha = 1 if baseline.mean >= current.mean else -1
    norm = raw / HALF_PI
    return ClassDegradation(
        class_id=baseline.class_id,
        n_c=n_c,
        weight=weight,
        maape_raw=raw,
        maape_norm=norm,
        alpha=alpha,
        deg=alpha * norm * weight,
        baseline_mean=baseline.mean,
        current_mean=current.mean,
    )


def overall_degradation(class_degs) -> float:
    """Sum of the per-class scores, accumulated in class-id order."""
    ordered = sorted(class_degs, key=lambda c: c.class_id)
    ids = [c.class_id for c in ordered]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate class ids in degradation list")
    total = 0.0
    for c in ordered:
        total += c.deg
    return total


def recommend_rebuild(report: DegradationReport, config: MonitorConfig | None = None) -> bool:
    """True when overall or any single-class degradation crosses its threshold.

    Indeterminate reports never recommend a rebuild.
    """
    config = config or MonitorConfig()
    if report.indeterminate:
        return False
    if report.overall >= config.overall_rebuild_threshold:
        return True
    return any(c.deg >= config.class_rebuild_threshold for c in report.classes)


def evaluate_batch(
    profile: BaselineProfile,
    samples,
    assigned,
    *,
    step_id=None,
    config: MonitorConfig | None = None,
    trigger: dict | None = None,
    return_curves: bool = False,
):
    """Compare a batch of newly classified samples against the baseline.

    Computes silhouette curves of the batch under its assigned labels,
    aligns each to the matching baseline curve, and scores every class known
    to the profile. A batch with fewer than two distinct assigned classes
    (or no samples at all) yields an indeterminate report in which every
    class scores 0.

    Returns the report, or ``(report, curves)`` when ``return_curves`` is
    set, where ``curves`` maps class ids to the batch's silhouette curves.
    """
    config = config or MonitorConfig(metric=profile.metric)
    X = check_feature_matrix(samples, dimension=profile.dimension, name="batch")
    y = check_label_array(assigned, X.shape[0], name="assigned")
    known = set(profile.class_ids)
    present = {int(c) for c in np.unique(y)}
    unknown = present - known
    if unknown:
        raise ValueError(f"assigned labels contain unknown class ids {sorted(unknown)}")

    n = int(X.shape[0])
    counts = {c: int(np.sum(y == c)) for c in profile.class_ids}
    reason = None
    curves: dict[int, SilhouetteCurve] = {}
    if n == 0:
        reason = "empty window"
    elif len(present) < 2:
        reason = "fewer than two distinct classes in window"
    else:
        curves = build_curves(X, y, profile.metric)

    rows = []
    for c in profile.class_ids:
        base = profile.curve(c)
        if reason is not None:
            rows.append(
                ClassDegradation(
                    class_id=c,
                    n_c=counts[c],
                    weight=counts[c] / n if n else 0.0,
                    maape_raw=0.0,
                    maape_norm=0.0,
                    alpha=1,
                    deg=0.0,
                    baseline_mean=base.mean,
                    current_mean=None,
                    status=STATUS_NOT_EVALUATED,
                )
            )
            continue
        cur = curves.get(c)
        if cur is None:
            rows.append(class_degradation(base, None, 0, n))
        elif base.count < 2 or cur.count < 2:
            rows.append(class_degradation(base, cur, counts[c], n))
        else:
            base_aligned, cur_aligned = align(base, cur)
            rows.append(class_degradation(base_aligned, cur_aligned, counts[c], n))

    overall = overall_degradation(rows)
    rebuild = False
    if reason is None:
        rebuild = overall >= config.overall_rebuild_threshold or any(
            r.deg >= config.class_rebuild_threshold for r in rows
        )
    report = DegradationReport(
        step_id=step_id,
        window_size=n,
        classes=tuple(rows),
        overall=overall,
        indeterminate=reason is not None,
        indeterminate_reason=reason,
        rebuild_recommended=rebuild,
        trigger=trigger if trigger is not None else {"mode": "manual"},
    )
    return (report, curves) if return_curves else report
