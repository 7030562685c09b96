#!/usr/bin/env python3
"""End-to-end throughput over doubling input sizes.

Builds a 100k-line file by resampling the Apache sample's raw lines, then
times full parses at 10k, 20k, 40k, 80k, and 100k lines. Growth should be
roughly linear: each doubling costs about 2x, not more.
"""

import random
from pathlib import Path

import logabstract as la

SAMPLES = Path(__file__).resolve().parents[1] / "data" / "samples"

base = (SAMPLES / "Apache_2k.log").read_text(encoding="utf-8").splitlines()
lines = random.Random(7).choices(base, k=100_000)
config = la.load_config("apache")

print("lines      seconds   lines/sec   vs previous")
samples = la.efficiency_benchmark(lines, 10_000, config)
previous = None
for count, elapsed in samples:
    ratio = f"{elapsed / previous:.2f}x" if previous else "-"
    print(f"{count:>9,} {elapsed:>9.3f} {count / elapsed:>11,.0f}   {ratio}")
    previous = elapsed
