"""Finite real sequences: convolution, forward differences, and CSV ingestion.

Desk-scale stand-in for doubly infinite signals. Convolution is computed
directly (no FFT); the boundary mode decides how the window is extended,
with "valid" avoiding any extension so norm inequalities can be tested
without edge artifacts.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass

import numpy as np

from .kernels import GeneralKernel, SymmetricKernel, full_weights

__all__ = [
    "TimeSeries",
    "CsvFormatError",
    "BOUNDARY_MODES",
    "convolve",
    "derivative",
    "l2_norm",
    "read_csv",
    "write_csv",
]

BOUNDARY_MODES = ("reflect", "zero", "extend", "valid")


class CsvFormatError(ValueError):
    """Raised for unparseable rows, missing columns, or malformed headers."""


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered finite real values with optional pass-through labels."""

    values: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.values, dtype=float))
        if v.ndim != 1 or v.size == 0:
            raise ValueError("series needs at least one value")
        if not np.all(np.isfinite(v)):
            raise ValueError("series values must be finite")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != v.size:
                raise ValueError("labels must match values in length")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size


def convolve(u: SymmetricKernel | GeneralKernel, f: TimeSeries, boundary: str = "reflect") -> TimeSeries:
    """Local average u * f on the window, under the chosen boundary mode.

    reflect/zero/extend pad the input by the half width and return a series
    of the same length; valid returns only positions where the kernel sits
    entirely inside the window (length shrinks by 2n).
    """
    if boundary not in BOUNDARY_MODES:
        raise ValueError(f"boundary must be one of {BOUNDARY_MODES}")
    n = u.half_width
    w = full_weights(u)
    v = f.values
    if boundary == "valid":
        if v.size < 2 * n + 1:
            raise ValueError("series shorter than the kernel support")
        out = np.convolve(v, w, mode="valid")
        labels = f.labels[n : v.size - n] if f.labels is not None else None
        return TimeSeries(out, labels)
    if n == 0:
        return TimeSeries(w[0] * v, f.labels)
    if boundary == "zero":
        padded = np.pad(v, n)
    elif boundary == "extend":
        padded = np.pad(v, n, mode="edge")
    else:
        padded = np.pad(v, n, mode="reflect")
    return TimeSeries(np.convolve(padded, w, mode="valid"), f.labels)


def derivative(f: TimeSeries, m: int) -> TimeSeries:
    """m-th forward difference; length shrinks by m."""
    if m < 1:
        raise ValueError("difference order must be at least 1")
    if len(f) < m + 1:
        raise ValueError("series too short for this difference order")
    out = np.diff(f.values, m)
    labels = f.labels[: out.size] if f.labels is not None else None
    return TimeSeries(out, labels)


def l2_norm(f) -> float:
    """Euclidean norm of a TimeSeries or plain array."""
    v = f.values if isinstance(f, TimeSeries) else np.asarray(f, dtype=float)
    return float(np.linalg.norm(v))


def read_csv(path: str | os.PathLike, column: str, label_column: str | None = None) -> TimeSeries:
    """Read one numeric column (and optionally a label column) from a CSV file."""
    values: list[float] = []
    labels: list[str] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        if column not in fields:
            raise CsvFormatError(f"{path}: column {column!r} not found (have {fields})")
        if label_column is not None and label_column not in fields:
            raise CsvFormatError(f"{path}: column {label_column!r} not found (have {fields})")
        for lineno, row in enumerate(reader, start=2):
            cell = row.get(column)
            try:
                val = float(cell)  # type: ignore[arg-type]
            except (TypeError, ValueError):
                raise CsvFormatError(
                    f"{path} row {lineno}: cannot parse {column}={cell!r} as a number"
                ) from None
            if not math.isfinite(val):
                raise CsvFormatError(f"{path} row {lineno}: non-finite value {cell!r}")
            values.append(val)
            if label_column is not None:
                labels.append(row.get(label_column) or "")
    if not values:
        raise CsvFormatError(f"{path}: no data rows")
    return TimeSeries(np.asarray(values), tuple(labels) if label_column is not None else None)


def write_csv(path: str | os.PathLike, f: TimeSeries, column: str = "value") -> None:
    """Write the series with 17 significant digits, so a read round-trips exactly."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if f.labels is not None:
            writer.writerow(["label", column])
            for lab, v in zip(f.labels, f.values):
                writer.writerow([lab, f"{v:.17g}"])
        else:
            writer.writerow([column])
            for v in f.values:
                writer.writerow([f"{v:.17g}"])
