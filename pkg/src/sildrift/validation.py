"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

VALID_METRICS = ("euclidean", "cosine", "jaccard")


def check_metric(metric) -> str:
    """Normalize a metric name, rejecting anything unknown."""
    name = str(metric).lower()
    if name not in VALID_METRICS:
        raise ValueError(
            f"unknown metric {metric!r}; expected one of {', '.join(VALID_METRICS)}"
        )
    return name


def check_feature_matrix(X, *, dimension=None, min_samples=0, name="X") -> np.ndarray:
    """Coerce ``X`` to a 2-D float array of finite values."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2:
        raise ValueError(
            f"{name} must be 2-D with shape (n_samples, n_features), got shape {arr.shape}"
        )
    if arr.shape[1] < 1:
        raise ValueError(f"{name} must have at least one feature column")
    if arr.shape[0] < min_samples:
        raise ValueError(f"{name} needs at least {min_samples} samples, got {arr.shape[0]}")
    if dimension is not None and arr.shape[1] != dimension:
        raise ValueError(
            f"dimension mismatch: {name} has {arr.shape[1]} features, expected {dimension}"
        )
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_vector(v, *, name="vector") -> np.ndarray:
    """Coerce a single sample to a 1-D float array of finite values."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise ValueError(f"{name} must be a non-empty 1-D sequence")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_label_array(labels, n_samples, *, name="labels") -> np.ndarray:
    """Coerce labels to a 1-D int array aligned with ``n_samples`` samples."""
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.shape[0] != n_samples:
        raise ValueError(f"{name} has length {arr.shape[0]}, expected {n_samples}")
    if arr.size and arr.dtype.kind not in "iu":
        raise ValueError(f"{name} must be integer class ids, got dtype {arr.dtype}")
    return arr.astype(int, copy=False)


def check_binary_matrix(X, *, name="X") -> None:
    """Require every entry to be exactly 0 or 1 (jaccard input domain)."""
    arr = np.asarray(X, dtype=float)
    if arr.size and not np.all((arr == 0.0) | (arr == 1.0)):
        raise ValueError(f"jaccard requires binary vectors; {name} has entries other than 0/1")
