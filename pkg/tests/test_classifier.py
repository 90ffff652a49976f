"""Tests for the nearest-centroid reference classifier."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from sildrift import BlobSpec, NearestCentroidClassifier, f_measure, gen_blobs


def test_fit_computes_class_means():
    X = [[0.0, 0.0], [2.0, 0.0], [10.0, 10.0], [10.0, 10.0]]
    y = [0, 0, 1, 1]
    clf = NearestCentroidClassifier().fit(X, y)
    assert clf.centroids_.tolist() == [[1.0, 0.0], [10.0, 10.0]]
    assert clf.classes_.tolist() == [0, 1]


def test_fit_is_deterministic():
    rng = np.random.default_rng(4)
    X = rng.normal(size=(30, 3))
    y = rng.integers(0, 2, size=30)
    y[:2] = [0, 1]
    a = NearestCentroidClassifier().fit(X, y)
    b = NearestCentroidClassifier().fit(X, y)
    assert np.array_equal(a.centroids_, b.centroids_)


def test_fit_rejects_single_class_and_jaccard():
    with pytest.raises(ValueError, match="two classes"):
        NearestCentroidClassifier().fit([[0.0], [1.0]], [0, 0])
    with pytest.raises(ValueError, match="jaccard"):
        NearestCentroidClassifier(metric="jaccard").fit([[0.0], [1.0]], [0, 1])


def test_predict_nearest_and_tie_break():
    clf = NearestCentroidClassifier().fit(
        [[0.0, 0.0], [10.0, 10.0]], [0, 1]
    )
    assert clf.predict([[1.0, 1.0]]).tolist() == [0]
    # equidistant: lower class id wins
    assert clf.predict([[5.0, 5.0]]).tolist() == [0]
    # exactly on a centroid
    assert clf.predict([[10.0, 10.0]]).tolist() == [1]


def test_predict_with_cosine_metric():
    clf = NearestCentroidClassifier(metric="cosine").fit(
        [[1.0, 0.0], [1.1, 0.0], [0.0, 1.0], [0.0, 0.9]], [0, 0, 1, 1]
    )
    assert clf.predict([[5.0, 0.1]]).tolist() == [0]
    assert clf.predict([[0.1, 5.0]]).tolist() == [1]


def test_predict_before_fit_raises():
    with pytest.raises(NotFittedError):
        NearestCentroidClassifier().predict([[0.0]])


def test_predict_dimension_mismatch():
    clf = NearestCentroidClassifier().fit([[0.0, 0.0], [1.0, 1.0]], [0, 1])
    with pytest.raises(ValueError, match="dimension mismatch"):
        clf.predict([[0.0]])


def test_argmin_invariant_under_uniform_scaling():
    rng = np.random.default_rng(6)
    X = rng.normal(size=(40, 3))
    y = rng.integers(0, 3, size=40)
    y[:3] = [0, 1, 2]
    probe = rng.normal(size=(20, 3))
    base = NearestCentroidClassifier().fit(X, y).predict(probe)
    scaled = NearestCentroidClassifier().fit(X * 37.5, y).predict(probe * 37.5)
    assert np.array_equal(base, scaled)


def test_sklearn_protocol():
    clf = NearestCentroidClassifier(metric="cosine")
    assert clf.get_params() == {"metric": "cosine"}
    cloned = clone(clf)
    assert cloned.get_params() == clf.get_params()
    clf.set_params(metric="euclidean")
    assert clf.metric == "euclidean"


# ---------------------------------------------------------------------------
# f_measure
# ---------------------------------------------------------------------------


def test_f_measure_perfect_predictions():
    X = [[0.0], [0.1], [10.0], [10.1]]
    y = [0, 0, 1, 1]
    clf = NearestCentroidClassifier().fit(X, y)
    assert f_measure(clf, X, y) == 1.0


class _ConstantModel:
    def __init__(self, label):
        self.label = label

    def predict(self, X):
        return np.full(len(np.asarray(X)), self.label, dtype=int)


def test_f_measure_single_prediction_on_balanced_set():
    X = [[float(i)] for i in range(10)]
    y = [0] * 5 + [1] * 5
    # predicted class: precision 0.5, recall 1.0 -> F1 2/3; other class 0
    assert f_measure(_ConstantModel(0), X, y) == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_f_measure_on_separated_blobs():
    X, y = gen_blobs(BlobSpec(n_classes=3, n_per_class=150, dimension=6, seed=42))
    clf = NearestCentroidClassifier().fit(X, y)
    assert f_measure(clf, X, y) >= 0.95


def test_f_measure_empty_set_raises():
    clf = NearestCentroidClassifier().fit([[0.0], [1.0]], [0, 1])
    with pytest.raises(ValueError):
        f_measure(clf, np.empty((0, 1)), [])
