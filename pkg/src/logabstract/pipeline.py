"""End-to-end pipeline: pre-process, group, classify, extract templates."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

from .config import DatasetConfig
from .errors import HeaderMismatchError
from .grouping import GroupIndex, alphabetical_letter_count
from .model import LogRecord, MaskedMessage
from .preprocess import mask_trivial, parse_header, tokenize
from .templating import (
    TemplateStore,
    TokenClassification,
    classify_tokens,
    finalize_templates,
)

log = logging.getLogger(__name__)


@dataclass
class ParseResult:
    records: list[LogRecord]
    messages: list[MaskedMessage]
    index: GroupIndex
    classifications: dict[int, TokenClassification]
    store: TemplateStore
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def template_texts(self) -> set[str]:
        return {t.text for t in self.store.templates}

    def template_for_line(self, line_id: int) -> str:
        return self.store.get(self.store.assignment[line_id]).text


def build_message(line_id: int, content: str, rules) -> MaskedMessage:
    """Mask a content string and freeze it as a tokenized message."""
    tokens = tuple(tokenize(mask_trivial(content, rules)))
    return MaskedMessage(line_id, tokens, alphabetical_letter_count(tokens))


def run_pipeline(
    records: Sequence[LogRecord],
    config: DatasetConfig,
    skipped: list[tuple[int, str]] | None = None,
    min_freq_override: int | None = None,
) -> ParseResult:
    """Mask, group, classify, and extract templates for parsed records."""
    rules = config.rules()
    messages = [build_message(r.line_id, r.content, rules) for r in records]
    index = GroupIndex(threshold=config.similarity_threshold, mode=config.grouping_mode)
    group_ids = index.assign_all(messages)
    classifications = {
        g.group_id: classify_tokens(g.term_freq, g.group_id, min_freq_override)
        for g in index.groups
    }
    store = finalize_templates(messages, group_ids, classifications)
    return ParseResult(
        records=list(records),
        messages=messages,
        index=index,
        classifications=classifications,
        store=store,
        skipped=list(skipped or ()),
    )


def parse_raw_lines(lines: Iterable[str], config: DatasetConfig, **kwargs) -> ParseResult:
    """Full pipeline over raw log lines, header extraction included.

    line_id is the 1-based ordinal of the line in the input. Lines that do
    not fit the header format are skipped with a warning under the default
    policy; the "abort" policy re-raises instead.
    """
    fmt = config.header_format()
    records: list[LogRecord] = []
    skipped: list[tuple[int, str]] = []
    for line_no, line in enumerate(lines, start=1):
        try:
            record = parse_header(line, fmt)
        except HeaderMismatchError as exc:
            if config.header_mismatch_policy == "abort":
                raise HeaderMismatchError(f"line {line_no}: {exc}") from exc
            skipped.append((line_no, str(exc)))
            continue
        records.append(replace(record, line_id=line_no))
    if skipped:
        log.warning(
            "%s: skipped %d line(s) not matching the header format (first: line %d: %s)",
            config.name, len(skipped), skipped[0][0], skipped[0][1],
        )
    return run_pipeline(records, config, skipped=skipped, **kwargs)


def parse_content_lines(contents: Iterable[str], config: DatasetConfig, **kwargs) -> ParseResult:
    """Full pipeline over pre-split message contents (no header step)."""
    records = [
        LogRecord(line_id=i, header_fields={}, content=content)
        for i, content in enumerate(contents, start=1)
    ]
    return run_pipeline(records, config, **kwargs)


def read_log_lines(path: str | Path) -> list[str]:
    """Read a log file as UTF-8, replacing invalid byte sequences.

    A replacement warning is logged once per file so silently mangled input
    does not go unnoticed.
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("utf-8", errors="replace")
        log.warning("%s: invalid UTF-8 byte sequences replaced with U+FFFD", path)
    return text.splitlines()


def parse_file(path: str | Path, config: DatasetConfig, **kwargs) -> ParseResult:
    return parse_raw_lines(read_log_lines(path), config, **kwargs)
