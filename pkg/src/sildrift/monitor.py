"""Drift monitor estimator: baseline fitting, batch scoring, streaming observation."""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .degradation import DegradationReport, evaluate_batch
from .profiles import BaselineProfile, build_profile
from .windowing import MonitorConfig, TrailingWindow, grown_classes, should_evaluate


class SilhouetteDriftMonitor(BaseEstimator):
    """Detect class-based concept drift by watching silhouette-curve shifts.

    ``fit`` computes per-class silhouette curves on the training set (the
    baseline). Batches later classified by the production model are either
    scored directly with ``evaluate`` or streamed through ``observe``, which
    maintains a trailing FIFO window capped at the training-set size and runs
    a self-evaluation whenever some class's window count grows by
    ``eval_trigger_pct`` or more since the previous evaluation. Reports carry
    per-class signed degradation scores and a rebuild recommendation.

    Parameters
    ----------
    metric : {"euclidean", "cosine", "jaccard"}, default="euclidean"
        Distance used for silhouette computation.
    eval_trigger_pct : float, default=0.20
        Relative per-class growth that triggers a self-evaluation.
    overall_threshold : float, default=0.10
        Overall degradation at or above this recommends a rebuild.
    class_threshold : float, default=0.05
        Any single-class degradation at or above this recommends a rebuild.
    min_window : int, default=50
        Smallest window the streaming trigger will fire on.

    Attributes
    ----------
    profile_ : BaselineProfile
        Per-class baseline curves computed at fit time.
    window_ : TrailingWindow
        Streaming buffer, capacity equal to the training-set size.
    counts_at_last_eval_ : dict[int, int]
        Per-class window counts captured at the previous evaluation.
    n_evaluations_ : int
        Number of triggered evaluations so far.
    """

    def __init__(
        self,
        metric="euclidean",
        eval_trigger_pct=0.20,
        overall_threshold=0.10,
        class_threshold=0.05,
        min_window=50,
    ):
        self.metric = metric
        self.eval_trigger_pct = eval_trigger_pct
        self.overall_threshold = overall_threshold
        self.class_threshold = class_threshold
        self.min_window = min_window

    def _config(self) -> MonitorConfig:
        return MonitorConfig(
            eval_trigger_pct=self.eval_trigger_pct,
            overall_rebuild_threshold=self.overall_threshold,
            class_rebuild_threshold=self.class_threshold,
            min_window=self.min_window,
            metric=self.metric,
        )

    def fit(self, X, y):
        """Build the baseline profile from the training set and reset the window."""
        config = self._config()
        self.profile_ = build_profile(X, y, config.metric)
        self._reset_stream()
        return self

    @classmethod
    def from_profile(cls, profile: BaselineProfile, **params) -> "SilhouetteDriftMonitor":
        """Attach a previously built (e.g. loaded) baseline instead of fitting."""
        est = cls(metric=profile.metric, **params)
        est._config()
        est.profile_ = profile
        est._reset_stream()
        return est

    def _reset_stream(self):
        self.window_ = TrailingWindow(
            self.profile_.n_train, self.profile_.class_ids, self.profile_.dimension
        )
        self.counts_at_last_eval_ = {c: 0 for c in self.profile_.class_ids}
        self.n_evaluations_ = 0

    def _check_fitted(self):
        if not hasattr(self, "profile_"):
            raise NotFittedError("SilhouetteDriftMonitor is not fitted yet; call fit first")

    def evaluate(self, X, assigned, step_id=None) -> DegradationReport:
        """Score one batch against the baseline without touching window state."""
        self._check_fitted()
        return evaluate_batch(
            self.profile_,
            X,
            assigned,
            step_id=step_id,
            config=self._config(),
            trigger={"mode": "manual"},
        )

    def observe(self, X, assigned) -> list[DegradationReport]:
        """Stream newly classified samples through the trailing window.

        The trigger is checked once after the batch is ingested, so at most
        one report is returned per call. An empty batch changes nothing.
        """
        self._check_fitted()
        config = self._config()
        self.window_.extend(X, assigned)
        if not should_evaluate(self.window_, self.counts_at_last_eval_, config):
            return []
        snap = self.window_.snapshot()
        grown = grown_classes(snap.counts, self.counts_at_last_eval_, config.eval_trigger_pct)
        self.n_evaluations_ += 1
        report = evaluate_batch(
            self.profile_,
            snap.samples,
            snap.labels,
            step_id=f"eval_{self.n_evaluations_}",
            config=config,
            trigger={"mode": "growth", "grown_classes": grown},
        )
        self.counts_at_last_eval_ = dict(snap.counts)
        return [report]

    def evaluate_window(self, step_id=None, trigger=None, return_curves=False):
        """Evaluate the current window unconditionally.

        Trigger bookkeeping is left untouched; this is meant for step-driven
        harnesses that score every batch boundary.
        """
        self._check_fitted()
        snap = self.window_.snapshot()
        return evaluate_batch(
            self.profile_,
            snap.samples,
            snap.labels,
            step_id=step_id,
            config=self._config(),
            trigger=trigger if trigger is not None else {"mode": "forced"},
            return_curves=return_curves,
        )
