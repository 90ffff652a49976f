"""Numerical kernels: distance measures, per-sample silhouette, and MAAPE."""

from __future__ import annotations

import numpy as np

from .validation import (
    check_binary_matrix,
    check_feature_matrix,
    check_label_array,
    check_metric,
    check_vector,
)

HALF_PI = float(np.pi / 2.0)

# Rows scanned per block when computing pairwise distances. Keeps peak memory
# at O(block * n) instead of materializing the full n x n matrix.
_BLOCK_ROWS = 128


class DegenerateLabelingError(ValueError):
    """Silhouette is undefined when fewer than two distinct classes are present."""


def distance(a, b, metric="euclidean") -> float:
    """Distance between two feature vectors under the chosen metric.

    Cosine distance is 1 - cosine similarity (range [0, 2]) and rejects zero
    vectors. Jaccard treats vectors as sets via exact 0/1 entries; two empty
    sets are at distance 0.
    """
    metric = check_metric(metric)
    u = check_vector(a, name="a")
    v = check_vector(b, name="b")
    if u.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    if metric == "euclidean":
        return float(np.sqrt(np.sum((u - v) ** 2)))
    if metric == "cosine":
        nu = float(np.sqrt(np.dot(u, u)))
        nv = float(np.sqrt(np.dot(v, v)))
        if nu == 0.0 or nv == 0.0:
            raise ValueError("cosine distance is undefined for zero vectors")
        if np.array_equal(u, v):
            # d(x, x) = 0 must hold exactly; the general path can round to ~1e-16
            return 0.0
        sim = float(np.dot(u, v)) / (nu * nv)
        sim = min(1.0, max(-1.0, sim))
        return 1.0 - sim
    check_binary_matrix(u, name="a")
    check_binary_matrix(v, name="b")
    inter = int(np.sum((u == 1.0) & (v == 1.0)))
    union = int(np.sum((u == 1.0) | (v == 1.0)))
    return 1.0 - inter / union if union else 0.0


def silhouette(samples, labels, metric="euclidean") -> np.ndarray:
    """Per-sample silhouette values s(i) = (b(i) - a(i)) / max(a(i), b(i)).

    a(i) is the mean distance from sample i to the other members of its own
    class; b(i) is the smallest mean distance from i to the members of any
    other class. A sample alone in its class gets s(i) = 0.

    Parameters
    ----------
    samples : array-like of shape (n_samples, n_features)
        Feature vectors; at least two samples.
    labels : array-like of shape (n_samples,)
        Integer class ids aligned with ``samples``; at least two distinct ids
        must be present.
    metric : {"euclidean", "cosine", "jaccard"}

    Returns
    -------
    numpy.ndarray of shape (n_samples,)
        Values in [-1, 1], aligned with the input order.

    Raises
    ------
    DegenerateLabelingError
        If fewer than two distinct class ids are present.
    """
    metric = check_metric(metric)
    X = check_feature_matrix(samples, min_samples=2, name="samples")
    y = check_label_array(labels, X.shape[0])
    classes, inverse = np.unique(y, return_inverse=True)
    if classes.size < 2:
        raise DegenerateLabelingError(
            "degenerate labeling: silhouette needs at least two distinct classes"
        )
    if metric == "jaccard":
        check_binary_matrix(X, name="samples")
    base = X
    if metric == "cosine":
        norms = np.sqrt(np.einsum("ij,ij->i", X, X))
        if np.any(norms == 0.0):
            raise ValueError("cosine distance is undefined for zero vectors")
        base = X / norms[:, None]

    n, k = X.shape[0], classes.size
    counts = np.bincount(inverse, minlength=k)
    membership = np.zeros((n, k))
    membership[np.arange(n), inverse] = 1.0

    out = np.empty(n)
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        block = _pairwise_block(base, start, stop, metric)
        rows = np.arange(stop - start)
        # self-distance is zero by definition; enforce it exactly so the
        # own-class mean is a plain row sum divided by (count - 1)
        block[rows, start + rows] = 0.0
        class_sums = block @ membership
        own = inverse[start:stop]
        own_counts = counts[own]
        with np.errstate(invalid="ignore", divide="ignore"):
            a = class_sums[rows, own] / (own_counts - 1)
        class_means = class_sums / counts[None, :]
        class_means[rows, own] = np.inf
        b = class_means.min(axis=1)
        denom = np.maximum(a, b)
        with np.errstate(invalid="ignore", divide="ignore"):
            s = (b - a) / denom
        s = np.where(denom == 0.0, 0.0, s)
        s = np.where(own_counts == 1, 0.0, s)
        out[start:stop] = s
    return out


def _pairwise_block(base, start, stop, metric):
    """Distances from base[start:stop] to every row of ``base``."""
    rows = base[start:stop]
    if metric == "euclidean":
        diff = rows[:, None, :] - base[None, :, :]
        return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    if metric == "cosine":
        # rows of ``base`` are unit vectors here
        return np.clip(1.0 - rows @ base.T, 0.0, 2.0)
    inter = rows @ base.T
    sizes = base.sum(axis=1)
    union = sizes[start:stop, None] + sizes[None, :] - inter
    with np.errstate(invalid="ignore", divide="ignore"):
        d = 1.0 - inter / union
    return np.where(union == 0.0, 0.0, d)


def maape(actual, forecast) -> float:
    """Mean Arctangent Absolute Percentage Error between two aligned series.

    Each point contributes arctan(|(A - F) / A|): pi/2 when A = 0 and F != 0,
    and 0 when both are zero. The mean is therefore bounded in [0, pi/2]
    regardless of scale, with the first argument acting as the reference.
    """
    A = np.asarray(actual, dtype=float)
    F = np.asarray(forecast, dtype=float)
    if A.ndim != 1 or F.ndim != 1:
        raise ValueError("maape expects 1-D sequences")
    if A.shape[0] != F.shape[0]:
        raise ValueError(f"length mismatch: {A.shape[0]} vs {F.shape[0]}")
    if A.shape[0] == 0:
        raise ValueError("maape is undefined for empty inputs")
    if not (np.isfinite(A).all() and np.isfinite(F).all()):
        raise ValueError("maape inputs must be finite")
    diff = A - F
    # overflow to inf is the correct limit here: arctan(inf) = pi/2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ratio = np.abs(diff / A)
    ratio = np.where((A == 0.0) & (diff == 0.0), 0.0, ratio)
    return float(np.mean(np.arctan(ratio)))
