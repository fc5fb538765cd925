"""Dataset ingestion, bundled datasets and report serialisation."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from ._bundled import BUNDLED
from .errors import FormatError, GreyError, NotFound, ShapeError
from .series import RawSeries

ARIMA_NOTE = "published, not recomputed"


class IoError(GreyError, OSError):
    """Reading or writing a file failed."""


@dataclass(frozen=True, eq=False)
class Dataset:
    """A bundled series with its reproduction recipe.

    ``reference`` maps model names to the published fitted/predicted columns.
    ``recipe`` holds the train length, comparator settings, published
    hyperparameters and published error summaries.
    """

    name: str
    raw: RawSeries
    reference: dict
    recipe: dict

    def __post_init__(self):
        for key, col in self.reference.items():
            if len(col) != self.raw.m:
                raise ShapeError(f"reference column {key!r} has {len(col)} values, expected {self.raw.m}")


def dataset_names():
    return tuple(BUNDLED)


def bundled_dataset(name: str) -> Dataset:
    try:
        entry = BUNDLED[name]
    except KeyError:
        raise NotFound(f"no bundled dataset {name!r}; choose from {', '.join(BUNDLED)}") from None
    raw = RawSeries(entry["labels"], entry["values"], entry["train"], name)
    reference = {k: np.array(v, dtype=float) for k, v in entry["published"].items()}
    recipe = {k: v for k, v in entry.items() if k not in ("labels", "values", "published")}
    return Dataset(name, raw, reference, recipe)


def dataset_for_case(case: str) -> Dataset:
    for name, entry in BUNDLED.items():
        if entry["case"] == case:
            return bundled_dataset(name)
    raise NotFound(f"no bundled dataset for case {case!r}")


def parse_csv(text: str, train: int | None = None, name: str = "") -> RawSeries:
    """Parse ``label,value`` CSV text into a validated :class:`RawSeries`."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(c.strip() for c in r)]
    if not rows or [c.strip().lower() for c in rows[0]] != ["label", "value"]:
        raise FormatError("expected header line 'label,value'")
    labels, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise FormatError(f"line {lineno}: expected 2 fields, got {len(row)}")
        try:
            labels.append(int(row[0].strip()))
            values.append(float(row[1].strip()))
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {row!r}") from None
    return RawSeries(labels, values, train, name)


def load_csv(path, train: int | None = None) -> RawSeries:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    return parse_csv(text, train, path.stem)


def write_csv(raw: RawSeries, path) -> None:
    """Write ``raw`` in the ``label,value`` input format (values at full precision)."""
    lines = ["label,value"] + [f"{int(k)},{v!r}" for k, v in zip(raw.labels, raw.values.tolist())]
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


@dataclass
class ModelResult:
    name: str
    label: str
    hyper: dict
    params: list
    fitted: list
    ape: list
    rmsepr: float | None
    rmsepo: float | None
    rmse: float | None
    note: str = ""


@dataclass
class Report:
    """Fitted values, errors and summaries of several models on one dataset."""

    dataset: str
    labels: list
    actual: list
    l: int  # noqa: E741
    m: int
    statistic: str = "rms"
    models: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def model(self, name) -> ModelResult:
        for mr in self.models:
            if mr.name == name:
                return mr
        raise NotFound(f"report has no model {name!r}")

    def to_dict(self) -> dict:
        out = {
            "dataset": self.dataset,
            "split": {"l": self.l, "m": self.m},
            "statistic": self.statistic,
            "labels": list(self.labels),
            "actual": list(self.actual),
            "models": [asdict(mr) for mr in self.models],
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(
            dataset=d["dataset"],
            labels=d["labels"],
            actual=d["actual"],
            l=d["split"]["l"],
            m=d["split"]["m"],
            statistic=d.get("statistic", "rms"),
            models=[ModelResult(**mr) for mr in d["models"]],
            extra=d.get("extra", {}),
        )


def _num(v, decimals):
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return f"{v:.{decimals}f}"


def report_csv(report: Report, decimals: int = 4) -> str:
    """Tabular layout: a ``section`` column, rows per label, one column per model."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = [mr.label for mr in report.models]
    w.writerow(["section", "label", "actual"] + names)
    for i, label in enumerate(report.labels):
        actual = report.actual[i] if i < len(report.actual) else None
        w.writerow(
            ["fitted", label, _num(actual, decimals)]
            + [_num(mr.fitted[i] if i < len(mr.fitted) else None, decimals) for mr in report.models]
        )
    for i, label in enumerate(report.labels[: len(report.actual)]):
        w.writerow(
            ["ape", label, ""]
            + [_num(mr.ape[i] if i < len(mr.ape) else None, decimals) for mr in report.models]
        )
    for metric in ("rmsepr", "rmsepo", "rmse"):
        w.writerow(["metric", metric.upper(), ""] + [_num(getattr(mr, metric), decimals) for mr in report.models])
    return buf.getvalue()


def report_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2)


def write_report(report: Report, format: str = "csv", path=None, decimals: int = 4) -> str:
    """Serialise ``report`` as ``csv`` or ``json``; write it to ``path`` if given."""
    if format == "csv":
        text = report_csv(report, decimals)
    elif format == "json":
        text = report_json(report)
    else:
        raise FormatError(f"unknown report format {format!r}")
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}") from exc
    return text


def read_report(path) -> Report:
    try:
        return Report.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    except (ValueError, KeyError) as exc:
        raise FormatError(f"{path} is not a report: {exc}") from exc
