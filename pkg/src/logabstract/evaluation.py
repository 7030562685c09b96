"""Accuracy metrics, stabilization curves, and timing benchmarks.

Grouping accuracy follows the pairs-of-lines formulation: a pair is a true
positive when prediction and ground truth put both lines in the same event.
The counts come from the prediction/truth contingency table, which gives
the same integers as enumerating all pairs at O(n) cost; the test suite
holds a brute-force enumerator as the oracle for that equivalence.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Sequence

from .config import DatasetConfig
from .errors import EvaluationError
from .model import EvaluationReport
from .pipeline import parse_content_lines, parse_raw_lines

STABILIZATION_PERCENTS = (5, 15, 25, 35, 45, 55, 65, 75, 85, 95, 100)


@dataclass
class GroundTruth:
    """Manually labeled lines: event id and template per line_id.

    Contents are carried so evaluation can feed the labeled messages
    straight into the pipeline without re-parsing headers.
    """

    event_ids: dict[int, str] = field(default_factory=dict)
    templates: dict[int, str] = field(default_factory=dict)
    contents: dict[int, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.event_ids)

    def ordered_contents(self) -> list[str]:
        return [self.contents[i] for i in sorted(self.contents)]


@dataclass(frozen=True)
class GroupingScore:
    precision: float
    recall: float
    f1: float
    true_positive_pairs: int
    false_positive_pairs: int
    false_negative_pairs: int


def grouping_accuracy(pred: Mapping[int, str], truth: Mapping[int, str]) -> GroupingScore:
    """Pairwise precision/recall/F1 between two labelings of the same lines.

    Degenerate conventions: no predicted pairs means precision 1, no truth
    pairs means recall 1, and F1 is 0 only when precision + recall is 0.
    """
    if set(pred) != set(truth):
        raise EvaluationError(
            f"prediction and truth label different line sets "
            f"({len(pred)} vs {len(truth)} lines)"
        )
    cells = Counter((pred[k], truth[k]) for k in pred)
    tp = sum(comb(n, 2) for n in cells.values())
    pred_pairs = sum(comb(n, 2) for n in Counter(pred.values()).values())
    truth_pairs = sum(comb(n, 2) for n in Counter(truth.values()).values())
    fp = pred_pairs - tp
    fn = truth_pairs - tp
    precision = tp / pred_pairs if pred_pairs else 1.0
    recall = tp / truth_pairs if truth_pairs else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return GroupingScore(precision, recall, f1, tp, fp, fn)


def normalize_template(text: str) -> str:
    """Whitespace-only normalization: trim and collapse internal runs.

    Nothing else is folded; "core<*>" and "<*>" stay distinct, as do
    consecutive wildcards.
    """
    return " ".join(text.split())


def matching_accuracy(pred_templates: Mapping[int, str], truth: GroundTruth) -> float:
    """Fraction of lines whose predicted template equals the labeled one."""
    if set(pred_templates) != set(truth.templates):
        raise EvaluationError(
            f"prediction and truth label different line sets "
            f"({len(pred_templates)} vs {len(truth.templates)} lines)"
        )
    if not pred_templates:
        return 1.0
    matched = sum(
        normalize_template(pred_templates[k]) == normalize_template(truth.templates[k])
        for k in pred_templates
    )
    return matched / len(pred_templates)


def evaluate_against_truth(truth: GroundTruth, config: DatasetConfig) -> EvaluationReport:
    """Parse the labeled contents and score grouping and matching accuracy."""
    result = parse_content_lines(truth.ordered_contents(), config)
    pred_ids = dict(result.store.assignment)
    pred_templates = {i: result.template_for_line(i) for i in pred_ids}
    score = grouping_accuracy(pred_ids, truth.event_ids)
    report = EvaluationReport(
        true_positive_pairs=score.true_positive_pairs,
        false_positive_pairs=score.false_positive_pairs,
        false_negative_pairs=score.false_negative_pairs,
        precision=score.precision,
        recall=score.recall,
        f1=score.f1,
        matching_accuracy=matching_accuracy(pred_templates, truth),
    )
    return report


def _prefix_length(percent: int, total: int) -> int:
    return min(total, max(1, (percent * total + 99) // 100))


def stabilization_curve(
    lines: Sequence[str],
    config: DatasetConfig,
    max_workers: int = 1,
) -> list[tuple[float, int, int, float]]:
    """Template discovery from growing file-order prefixes.

    Prefix sizes run 5%, 15%, ... 95%, 100%. "Found" counts the prefix
    run's templates that also occur in the full-file template set, so the
    100% point is always total/total. Prefix runs are independent and may
    be computed on a small thread pool.
    """
    if not lines:
        raise ValueError("stabilization needs a non-empty input")
    sizes = [_prefix_length(p, len(lines)) for p in STABILIZATION_PERCENTS]

    def templates_for(size: int) -> set[str]:
        return parse_raw_lines(lines[:size], config).template_texts

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            per_prefix = list(pool.map(templates_for, sizes))
    else:
        per_prefix = [templates_for(size) for size in sizes]

    full = per_prefix[-1]
    total = len(full)
    points = []
    for percent, found_set in zip(STABILIZATION_PERCENTS, per_prefix):
        found = len(found_set & full)
        points.append((percent / 100.0, found, total, found / total if total else 1.0))
    return points


def bench_sizes(total: int, start_size: int) -> list[int]:
    """start, 2*start, 4*start, ... capped at the file size as final point."""
    if start_size < 1:
        raise ValueError("start_size must be >= 1")
    sizes = []
    size = start_size
    while size < total:
        sizes.append(size)
        size *= 2
    sizes.append(total)
    return sizes


def efficiency_benchmark(
    lines: Sequence[str],
    start_size: int,
    config: DatasetConfig,
) -> list[tuple[int, float]]:
    """Wall-clock seconds for end-to-end parses of doubling prefixes.

    Runs are serial (timings would skew under contention) with warm process
    and cold data structures; monotonicity is recorded, never asserted.
    """
    samples = []
    for size in bench_sizes(len(lines), start_size):
        t0 = time.perf_counter()
        parse_raw_lines(lines[:size], config)
        samples.append((size, time.perf_counter() - t0))
    return samples
