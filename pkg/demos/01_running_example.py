#!/usr/bin/env python3
"""Walk the pipeline stage by stage on a 12-line HDFS excerpt.

Shows what each stage contributes: header splitting, trivial-variable
masking, letter-count grouping, per-group term frequencies, the static
set, and the final templates after numeric replacement.
"""

from pathlib import Path

import logabstract as la

ROOT = Path(__file__).resolve().parents[1]
LOG = ROOT / "data" / "golden" / "hdfs_example.log"

config = la.load_config("hdfs")
lines = LOG.read_text(encoding="utf-8").splitlines()

print("=== raw input ===")
for line in lines[:3]:
    print(" ", line)
print(f"  ... ({len(lines)} lines total)\n")

fmt = config.header_format()
record = la.parse_header(lines[0], fmt)
print("=== header splitting (line 1) ===")
for field, value in record.header_fields.items():
    print(f"  {field:10s} {value}")
print(f"  {'Content':10s} {record.content}\n")

rules = config.rules()
print("=== masking trivial variables (line 3: the IP:port collapses) ===")
content3 = la.parse_header(lines[2], fmt).content
print("  before:", content3)
print("  after :", la.mask_trivial(content3, rules), "\n")

result = la.parse_raw_lines(lines, config)

print("=== pattern groups (letter-count similarity, threshold 1.0) ===")
for group in result.index.groups:
    print(f"  group {group.group_id} (letter count {group.key_count}): lines {group.members}")
print()

group1 = result.index.groups[0]
print("=== term frequencies inside group 1 ===")
for term, count in group1.term_freq.most_common():
    print(f"  {count:3d}  {term}")
classification = result.classifications[1]
print(f"  minimum frequency: {classification.min_freq}")
print(f"  static terms: {sorted(classification.static_terms)}")
print("  note: the task number 2 repeats above the minimum and sneaks into")
print("  the static set; the numeric-replacement pass removes it below\n")

print("=== final templates ===")
for template in result.store.templates:
    print(f"  {template.template_id} ({template.occurrence_count:2d} lines)  {template.text}")

print("\n=== recognizing a future event against the store ===")
probe = la.build_message(0, "PacketResponder 7 for block blk_4242 terminating", rules)
matched = la.match_event(probe, result.store)
print(f"  'PacketResponder 7 for block blk_4242 terminating' -> {matched}")
print(f"  'something never seen before' -> "
      f"{la.match_event(la.build_message(0, 'something never seen before', rules), result.store)}")
