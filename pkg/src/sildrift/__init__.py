"""sildrift: class-based concept drift detection via silhouette-curve degradation.

The monitor builds per-class silhouette curves on the training set (the
baseline), then periodically recomputes the same curves on a trailing window
of newly classified samples and scores the shift of each class's curve with a
MAAPE error that is normalized, class-share weighted, and signed. Crossing
configurable thresholds recommends rebuilding the predictive model.
"""

from .classifier import NearestCentroidClassifier, f_measure
from .dataio import Dataset, read_dataset_csv, write_curve_csv, write_dataset_csv
from .degradation import (
    ClassDegradation,
    DegradationReport,
    class_degradation,
    evaluate_batch,
    overall_degradation,
    recommend_rebuild,
)
from .metrics import DegenerateLabelingError, distance, maape, silhouette
from .monitor import SilhouetteDriftMonitor
from .profiles import (
    BaselineProfile,
    ProfileFormatError,
    SilhouetteCurve,
    align,
    build_curves,
    build_profile,
    downsample,
    load_profile,
    save_profile,
)
from .synth import BlobSpec, Timeline, TimelineSpec, build_timeline, gen_blobs, run_experiment
from .windowing import MonitorConfig, TrailingWindow, WindowSnapshot, should_evaluate

__version__ = "0.1.0"

__all__ = [
    "BaselineProfile",
    "BlobSpec",
    "ClassDegradation",
    "Dataset",
    "DegenerateLabelingError",
    "DegradationReport",
    "MonitorConfig",
    "NearestCentroidClassifier",
    "ProfileFormatError",
    "SilhouetteCurve",
    "SilhouetteDriftMonitor",
    "Timeline",
    "TimelineSpec",
    "TrailingWindow",
    "WindowSnapshot",
    "align",
    "build_curves",
    "build_profile",
    "build_timeline",
    "class_degradation",
    "distance",
    "downsample",
    "evaluate_batch",
    "f_measure",
    "gen_blobs",
    "load_profile",
    "maape",
    "overall_degradation",
    "read_dataset_csv",
    "recommend_rebuild",
    "run_experiment",
    "save_profile",
    "silhouette",
    "should_evaluate",
    "write_curve_csv",
    "write_dataset_csv",
    "__version__",
]
