"""Shared domain types for the log abstraction pipeline."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

WILDCARD = "<*>"


def next_template_id(counter: int) -> str:
    """Render a 1-based sequence number as a template id like "T0001".

    Padding widens past 9999 instead of truncating.
    """
    if counter < 1:
        raise ValueError(f"template counter must be >= 1, got {counter}")
    return f"T{counter:04d}"


@dataclass(frozen=True)
class LogRecord:
    """One raw log line split into header fields and the free-text message."""

    line_id: int
    header_fields: dict[str, str]
    content: str


@dataclass(frozen=True)
class MaskedMessage:
    """Token sequence of a message after trivial-variable masking.

    alpha_letter_count is the combined length of the purely alphabetical
    tokens; it is the quantity the grouping similarity measure compares.
    """

    line_id: int
    tokens: tuple[str, ...]
    alpha_letter_count: int

    @property
    def text(self) -> str:
        return " ".join(self.tokens)


@dataclass
class PatternGroup:
    """A set of similar masked messages plus their term-frequency table."""

    group_id: int
    key_count: int
    members: list[int] = field(default_factory=list)
    term_freq: Counter = field(default_factory=Counter)

    def add(self, message: MaskedMessage) -> None:
        self.members.append(message.line_id)
        self.term_freq.update(message.tokens)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Template:
    """An ordered token sequence mixing static tokens and the wildcard."""

    template_id: str
    tokens: tuple[str, ...]
    occurrence_count: int

    @property
    def text(self) -> str:
        return " ".join(self.tokens)


@dataclass
class EvaluationReport:
    """Accuracy, stabilization, and timing results for one dataset run."""

    true_positive_pairs: int = 0
    false_positive_pairs: int = 0
    false_negative_pairs: int = 0
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0
    matching_accuracy: float = 0.0
    stabilization_points: list[tuple[float, int, int, float]] = field(default_factory=list)
    timing_samples: list[tuple[int, float]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "true_positive_pairs": self.true_positive_pairs,
            "false_positive_pairs": self.false_positive_pairs,
            "false_negative_pairs": self.false_negative_pairs,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "matching_accuracy": self.matching_accuracy,
            "stabilization_points": [list(p) for p in self.stabilization_points],
            "timing_samples": [list(t) for t in self.timing_samples],
        }
