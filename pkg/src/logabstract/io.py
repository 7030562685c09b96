"""Readers and writers for labeled data, structured output, and reports.

Column names mirror the common benchmark layout (LineId, Content, EventId,
EventTemplate) so downstream analysis scripts work on our output unchanged.
All writers go through a temp-file-then-rename so a crashed run never
leaves a half-written file behind.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EvaluationError
from .evaluation import GroundTruth, normalize_template
from .model import EvaluationReport, LogRecord, Template
from .templating import TemplateStore

log = logging.getLogger(__name__)

REQUIRED_TRUTH_COLUMNS = ("Content", "EventId", "EventTemplate")


def load_ground_truth(path: str | Path) -> GroundTruth:
    """Load a labeled CSV; row order defines line_id 1..n.

    An event id mapping to more than one distinct template is reported as a
    warning rather than an error: published ground truths contain such
    inconsistencies and we still want to score against them.
    """
    path = Path(path)
    truth = GroundTruth()
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_TRUTH_COLUMNS if c not in header]
        if missing:
            raise EvaluationError(f"{path}: missing required column(s): {', '.join(missing)}")
        for line_id, row in enumerate(reader, start=1):
            values = [row.get(c) for c in REQUIRED_TRUTH_COLUMNS]
            if any(v is None for v in values):
                raise EvaluationError(f"{path}: malformed CSV row at data row {line_id}")
            content, event_id, template = values
            truth.contents[line_id] = content
            truth.event_ids[line_id] = event_id
            truth.templates[line_id] = template
    _warn_inconsistent_templates(path, truth)
    return truth


def _warn_inconsistent_templates(path: Path, truth: GroundTruth) -> None:
    per_event: dict[str, set[str]] = {}
    for line_id, event_id in truth.event_ids.items():
        per_event.setdefault(event_id, set()).add(normalize_template(truth.templates[line_id]))
    for event_id, templates in sorted(per_event.items()):
        if len(templates) > 1:
            log.warning(
                "%s: event %s is labeled with %d different templates",
                path, event_id, len(templates),
            )


def _atomic_writer(path: Path):
    path.parent.mkdir(parents=True, exist_ok=True)
    return tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", newline="", dir=path.parent,
        prefix=f".{path.name}.", delete=False,
    )


def _commit(tmp_name: str, path: Path) -> None:
    os.replace(tmp_name, path)


def write_structured(
    path: str | Path,
    records: Sequence[LogRecord],
    store: TemplateStore,
) -> Path:
    """One row per parsed line, in line_id order."""
    path = Path(path)
    with _atomic_writer(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["LineId", "Content", "EventId", "EventTemplate"])
        for record in sorted(records, key=lambda r: r.line_id):
            template_id = store.assignment[record.line_id]
            writer.writerow([record.line_id, record.content, template_id, store.get(template_id).text])
    _commit(fh.name, path)
    return path


def write_templates(path: str | Path, templates: Iterable[Template]) -> Path:
    """Template table in template_id order; occurrences sum to line count."""
    path = Path(path)
    with _atomic_writer(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["EventId", "EventTemplate", "Occurrences"])
        for t in sorted(templates, key=lambda t: t.template_id):
            writer.writerow([t.template_id, t.text, t.occurrence_count])
    _commit(fh.name, path)
    return path


def write_report(path: str | Path, report: EvaluationReport) -> Path:
    path = Path(path)
    with _atomic_writer(path) as fh:
        json.dump(report.as_dict(), fh, indent=2)
        fh.write("\n")
    _commit(fh.name, path)
    return path


def write_stabilization(path: str | Path, points: Sequence[tuple[float, int, int, float]]) -> Path:
    path = Path(path)
    with _atomic_writer(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["fraction", "templates_found", "templates_total", "ratio"])
        for fraction, found, total, ratio in points:
            writer.writerow([f"{fraction:.2f}", found, total, f"{ratio:.6f}"])
    _commit(fh.name, path)
    return path


def write_timings(path: str | Path, samples: Sequence[tuple[int, float]]) -> Path:
    path = Path(path)
    with _atomic_writer(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["event_count", "elapsed_seconds"])
        for count, elapsed in samples:
            writer.writerow([count, f"{elapsed:.6f}"])
    _commit(fh.name, path)
    return path
