"""Reference nearest-centroid classifier for assigning labels to new samples."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from .validation import check_feature_matrix, check_label_array, check_metric


class NearestCentroidClassifier(ClassifierMixin, BaseEstimator):
    """Assign each sample to the class with the nearest centroid.

    Centroids are the per-class component-wise means of the training samples;
    exact distance ties go to the smallest class id. The degradation pipeline
    consumes only (sample, assigned label) pairs, so any external model can
    stand in for this one.

    Parameters
    ----------
    metric : {"euclidean", "cosine"}, default="euclidean"
        Distance used for the arg-min. Jaccard is rejected at fit time
        because class means are generally not binary vectors; for boolean
        data, supply externally assigned labels instead.

    Attributes
    ----------
    classes_ : ndarray of shape (n_classes,)
        Sorted class ids seen during fit.
    centroids_ : ndarray of shape (n_classes, n_features)
        Per-class mean vectors, aligned with ``classes_``.
    """

    def __init__(self, metric="euclidean"):
        self.metric = metric

    def fit(self, X, y):
        """Compute one centroid per class."""
        metric = check_metric(self.metric)
        if metric == "jaccard":
            raise ValueError(
                "jaccard is not supported by the centroid classifier "
                "(class means are not binary); ingest externally assigned labels instead"
            )
        X = check_feature_matrix(X, min_samples=1, name="X")
        y = check_label_array(y, X.shape[0], name="y")
        classes = np.unique(y)
        if classes.size < 2:
            raise ValueError("training data must contain at least two classes")
        self.classes_ = classes.astype(int)
        self.centroids_ = np.vstack([X[y == c].mean(axis=0) for c in self.classes_])
        self.n_features_in_ = int(X.shape[1])
        return self

    def predict(self, X):
        """Arg-min over class centroids; ties resolve to the smallest class id."""
        if not hasattr(self, "centroids_"):
            raise NotFittedError("NearestCentroidClassifier is not fitted yet; call fit first")
        X = check_feature_matrix(X, dimension=self.n_features_in_, name="X")
        metric = check_metric(self.metric)
        if metric == "euclidean":
            diff = X[:, None, :] - self.centroids_[None, :, :]
            dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        else:
            x_norms = np.sqrt(np.einsum("ij,ij->i", X, X))
            c_norms = np.sqrt(np.einsum("ij,ij->i", self.centroids_, self.centroids_))
            if np.any(x_norms == 0.0) or np.any(c_norms == 0.0):
                raise ValueError("cosine distance is undefined for zero vectors")
            dist = 1.0 - (X / x_norms[:, None]) @ (self.centroids_ / c_norms[:, None]).T
        # argmin returns the first minimum, i.e. the smallest class id on ties
        return self.classes_[np.argmin(dist, axis=1)]


def f_measure(model, X, y_true) -> float:
    """Macro-averaged F1 of ``model`` on a labeled evaluation set.

    Classes are the union of true and predicted labels; a class with no true
    or no predicted samples contributes an F1 of 0 instead of raising.
    """
    X = check_feature_matrix(X, min_samples=1, name="X")
    y = check_label_array(y_true, X.shape[0], name="y_true")
    pred = np.asarray(model.predict(X))
    labels = sorted(set(y.tolist()) | {int(p) for p in pred})
    scores = []
    for c in labels:
        tp = int(np.sum((pred == c) & (y == c)))
        fp = int(np.sum((pred == c) & (y != c)))
        fn = int(np.sum((pred != c) & (y == c)))
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        scores.append(
            2.0 * precision * recall / (precision + recall) if precision + recall else 0.0
        )
    return float(sum(scores) / len(scores))
