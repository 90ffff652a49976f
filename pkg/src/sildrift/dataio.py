"""CSV ingestion and export for datasets and silhouette curves."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .profiles import SilhouetteCurve
from .validation import check_feature_matrix, check_label_array

_LABEL_COLUMNS = ("label", "assigned")


@dataclass(frozen=True, eq=False)
class Dataset:
    """Feature matrix plus optional true and assigned label columns."""

    samples: np.ndarray
    labels: np.ndarray | None = None
    assigned: np.ndarray | None = None

    def __len__(self) -> int:
        return int(self.samples.shape[0])


def write_dataset_csv(path, samples, labels=None, assigned=None) -> None:
    """Write features as columns f0..f{d-1} plus optional label/assigned columns.

    Floats are written with full round-trip precision, so identical data
    always produces byte-identical files.
    """
    X = check_feature_matrix(samples, name="samples")
    n, d = X.shape
    if labels is not None:
        labels = check_label_array(labels, n, name="labels")
    if assigned is not None:
        assigned = check_label_array(assigned, n, name="assigned")
    header = [f"f{j}" for j in range(d)]
    if labels is not None:
        header.append("label")
    if assigned is not None:
        header.append("assigned")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(n):
            row = [repr(float(v)) for v in X[i]]
            if labels is not None:
                row.append(str(int(labels[i])))
            if assigned is not None:
                row.append(str(int(assigned[i])))
            writer.writerow(row)


def read_dataset_csv(path) -> Dataset:
    """Parse a dataset CSV; feature columns must be named exactly f0..f{d-1}."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a header row") from None
        rows = list(reader)
    if len(set(header)) != len(header):
        raise ValueError(f"{path}: duplicate column names in header")
    feature_names = [h for h in header if h not in _LABEL_COLUMNS]
    d = len(feature_names)
    if d == 0:
        raise ValueError(f"{path}: no feature columns found")
    if set(feature_names) != {f"f{j}" for j in range(d)}:
        raise ValueError(f"{path}: feature columns must be named f0..f{d - 1}")
    col = {name: header.index(name) for name in header}

    X = np.empty((len(rows), d))
    for i, row in enumerate(rows):
        if len(row) != len(header):
            raise ValueError(
                f"{path}: row {i + 2} has {len(row)} cells, expected {len(header)}"
            )
        for j in range(d):
            cell = row[col[f"f{j}"]]
            try:
                X[i, j] = float(cell)
            except ValueError:
                raise ValueError(
                    f"{path}: row {i + 2}, column f{j}: not a number: {cell!r}"
                ) from None
    if X.size and not np.isfinite(X).all():
        raise ValueError(f"{path}: feature values must be finite")

    def parse_labels(name):
        if name not in col:
            return None
        out = np.empty(len(rows), dtype=int)
        for i, row in enumerate(rows):
            cell = row[col[name]]
            try:
                value = int(cell)
            except ValueError:
                raise ValueError(
                    f"{path}: row {i + 2}, column {name}: not an integer: {cell!r}"
                ) from None
            if value < 0:
                raise ValueError(
                    f"{path}: row {i + 2}, column {name}: class ids must be non-negative"
                )
            out[i] = value
        return out

    return Dataset(X, parse_labels("label"), parse_labels("assigned"))


def write_curve_csv(path, curve: SilhouetteCurve) -> None:
    """Export one curve as two columns: rank (0-based) and silhouette value."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["rank", "silhouette"])
        for rank, value in enumerate(curve.values):
            writer.writerow([rank, repr(float(value))])
