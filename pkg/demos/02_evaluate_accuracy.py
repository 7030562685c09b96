#!/usr/bin/env python3
"""Score grouping and matching accuracy against labeled samples.

Runs both grouping modes over each bundled 2k-line sample. "count" keys
groups on the letter total alone (the published behaviour); "strict" also
keys on the alphabetical term sequence, which separates unrelated events
whose letter totals collide. Grouping accuracy is pairwise F1 over the
final template assignment; matching accuracy is exact template-string
equality per line.
"""

from pathlib import Path

import logabstract as la

SAMPLES = Path(__file__).resolve().parents[1] / "data" / "samples"

print(f"{'dataset':12s} {'F1 (count)':>11s} {'F1 (strict)':>12s} {'matching':>9s}   TP/FP/FN (count)")
for csv_path in sorted(SAMPLES.glob("*_2k.log_structured.csv")):
    name = csv_path.name.split("_2k")[0]
    truth = la.load_ground_truth(csv_path)
    config = la.load_config(name.lower())

    count_report = la.evaluate_against_truth(truth, config)
    strict_report = la.evaluate_against_truth(truth, config.with_overrides(mode="strict"))

    print(
        f"{name:12s} {count_report.f1:>11.4f} {strict_report.f1:>12.4f} "
        f"{count_report.matching_accuracy:>9.4f}   "
        f"{count_report.true_positive_pairs}/{count_report.false_positive_pairs}"
        f"/{count_report.false_negative_pairs}"
    )

print("""
Reading the table: a count-mode F1 below strict-mode F1 means two distinct
events collided on their letter totals; the reverse means strict-mode
split an event whose small groups then starved the frequency analysis.
Matching accuracy is stricter than grouping: a line only counts when its
template string equals the label exactly, so a single value classified
static (it repeated above the group minimum) fails the whole line.""")
