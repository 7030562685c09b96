#!/usr/bin/env python3
"""How quickly does the template set stabilize as data arrives?

Parses growing file-order prefixes (5%, 15%, ..., 100%) of a sample and
counts how many of the final templates each prefix already discovers. A
parser that stabilizes early can be trained on a small head of the log
and recognize the rest in a streaming fashion.
"""

from pathlib import Path

import logabstract as la

SAMPLES = Path(__file__).resolve().parents[1] / "data" / "samples"

for name in ["Apache", "HDFS", "Zookeeper", "Spark"]:
    lines = (SAMPLES / f"{name}_2k.log").read_text(encoding="utf-8").splitlines()
    points = la.stabilization_curve(lines, la.load_config(name.lower()))
    print(f"=== {name} ===")
    print("  prefix   found/total   ratio")
    for fraction, found, total, ratio in points:
        bar = "#" * round(ratio * 30)
        print(f"  {fraction:>6.0%}   {found:>5d}/{total:<5d}   {ratio:5.2f}  {bar}")
    first_80 = next((fraction for fraction, _, _, ratio in points if ratio >= 0.8), None)
    print(f"  80% of templates discovered from a {first_80:.0%} prefix\n")
