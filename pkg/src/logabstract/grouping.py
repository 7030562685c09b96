"""Pattern grouping by letter-count similarity.

Two masked messages are compared by the number of letters in their purely
alphabetical tokens; tokens containing any digit or special character
(block ids, wildcards, dotted names) contribute nothing. At the default
100% threshold this reduces to equality of the counts, so membership is a
keyed lookup and the resulting partition is independent of input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import MaskedMessage, PatternGroup

Mode = str  # "count" | "strict"


def alphabetical_letter_count(tokens) -> int:
    """Total length of the tokens made up solely of letters."""
    return sum(len(t) for t in tokens if t.isalpha())


def similarity(m1: MaskedMessage, m2: MaskedMessage) -> float:
    """Letter-count ratio in [0, 1], symmetric; 1.0 when both counts are 0.

    The ratio is min/max rather than a directed quotient so values stay in
    [0, 1] and sub-1.0 thresholds behave sensibly; at the default threshold
    of 1.0 this is exactly equality of the two counts. Two structureless
    messages (count 0) are treated as identical, a zero against a nonzero
    count as entirely dissimilar.
    """
    c1, c2 = m1.alpha_letter_count, m2.alpha_letter_count
    if c1 == c2:
        return 1.0
    hi = max(c1, c2)
    return min(c1, c2) / hi


def group_key(message: MaskedMessage, mode: Mode):
    """Lookup key for exact-match grouping.

    "count" keys on the letter count alone (the published behaviour);
    "strict" additionally keys on the sequence of alphabetical tokens, which
    separates unrelated messages whose letter totals happen to collide.
    """
    if mode == "strict":
        return (
            message.alpha_letter_count,
            tuple(t for t in message.tokens if t.isalpha()),
        )
    return message.alpha_letter_count


@dataclass
class GroupIndex:
    """Incremental assignment of masked messages to pattern groups."""

    threshold: float = 1.0
    mode: Mode = "count"
    groups: list[PatternGroup] = field(default_factory=list)
    _lookup: dict = field(default_factory=dict)
    _representatives: list[MaskedMessage] = field(default_factory=list)

    def __post_init__(self):
        if not 0.0 < self.threshold <= 1.0:
            raise ValueError(f"threshold must be in (0, 1], got {self.threshold}")
        if self.mode not in ("count", "strict"):
            raise ValueError(f"unknown grouping mode: {self.mode!r}")

    def assign(self, message: MaskedMessage) -> int:
        """Add a message to its group, creating the group if needed.

        Exact-match modes use the keyed lookup. Below-1.0 thresholds in
        "count" mode scan groups in creation order and join the first whose
        representative (first member) is similar enough; first match wins so
        the outcome is deterministic for a given input order.
        """
        group = self._find(message)
        if group is None:
            group = PatternGroup(
                group_id=len(self.groups) + 1,
                key_count=message.alpha_letter_count,
            )
            self.groups.append(group)
            self._representatives.append(message)
            if self._keyed:
                self._lookup[group_key(message, self.mode)] = group.group_id
        group.add(message)
        return group.group_id

    def assign_all(self, messages) -> list[int]:
        return [self.assign(m) for m in messages]

    def partition(self) -> list[list[int]]:
        """Member line_ids per group, in group creation order."""
        return [list(g.members) for g in self.groups]

    @property
    def _keyed(self) -> bool:
        return self.mode == "strict" or self.threshold >= 1.0

    def _find(self, message: MaskedMessage) -> PatternGroup | None:
        if self._keyed:
            gid = self._lookup.get(group_key(message, self.mode))
            return None if gid is None else self.groups[gid - 1]
        for group, representative in zip(self.groups, self._representatives):
            if similarity(message, representative) >= self.threshold:
                return group
        return None
