"""Header splitting and trivial-variable masking.

A raw line is first split into header fields and a content message using a
dataset-specific format string, then surface-recognizable dynamic values
(IPs, MACs, paths, URLs, hex, calendar words, clock times) in the content
are replaced by the wildcard token. Plain integers are deliberately left
alone here; they are handled by the numeric replacement pass after
frequency analysis, otherwise non-numeric dynamics would inflate term
frequencies past the static threshold.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConfigurationError, HeaderMismatchError
from .model import WILDCARD, LogRecord

_PLACEHOLDER = re.compile(r"(<[^<>]+>)")

# Rule application order: longer / more structured patterns first so a URL is
# consumed before its path- and host-like substrings can match on their own.
RULE_ORDER = ("url", "path", "ipv4", "mac", "hex0x", "time", "month", "day")

_OCTET = r"(?:25[0-5]|2[0-4]\d|1\d\d|[1-9]?\d)"

_RULE_PATTERNS = {
    "url": r"https?://\S+",
    # Two or more word-ish segments joined by "/"; optional leading and
    # trailing slash so "/var/www/html/" collapses to a single wildcard.
    "path": r"(?<![\w.-])/?[\w.-]+(?:/[\w.-]+)+/?",
    # Dotted quad with 0-255 octets, optional ":port", optional leading "/"
    # (HDFS prints sender addresses as "/10.251.42.84"); the whole span is
    # consumed in one replacement.
    "ipv4": rf"/?(?<![\w.]){_OCTET}(?:\.{_OCTET}){{3}}(?::\d+)?(?!\.?\d)",
    # Six or more colon-separated hex pairs (vendor logs use 6 and 12).
    "mac": r"\b(?:[0-9A-Fa-f]{2}:){5,}[0-9A-Fa-f]{2}\b",
    "hex0x": r"(?<!\w)0[xX][0-9a-fA-F]+\b",
    "time": r"\b\d{1,2}:\d{2}:\d{2}(?:\.\d+)?\b",
    "month": (
        r"\b(?:Jan(?:uary)?|Feb(?:ruary)?|Mar(?:ch)?|Apr(?:il)?|May|Jun(?:e)?"
        r"|Jul(?:y)?|Aug(?:ust)?|Sep(?:tember)?|Oct(?:ober)?|Nov(?:ember)?"
        r"|Dec(?:ember)?)\b"
    ),
    "day": (
        r"\b(?:Mon(?:day)?|Tue(?:sday)?|Wed(?:nesday)?|Thu(?:rsday)?"
        r"|Fri(?:day)?|Sat(?:urday)?|Sun(?:day)?)\b"
    ),
}

# Masking must terminate even if a custom rule keeps rewriting its own
# output; the default rules converge after one effective pass.
_MAX_MASK_PASSES = 8


@dataclass(frozen=True)
class MaskRule:
    """A named masking rule; every match span becomes the wildcard token."""

    name: str
    pattern: re.Pattern
    enabled: bool = True


@dataclass(frozen=True)
class HeaderFormat:
    """Compiled dataset header format.

    The format string follows the LogPai convention: ``<Field>`` placeholders
    separated by literal text, ``<Content>`` last. Literal text is treated as
    a regular-expression fragment (so formats may use ``\\[`` or optional
    groups), with runs of spaces matching any whitespace run.
    """

    format_string: str
    field_names: tuple[str, ...]
    regex: re.Pattern

    @classmethod
    def compile(cls, format_string: str) -> "HeaderFormat":
        parts = _PLACEHOLDER.split(format_string)
        names = []
        pattern = ""
        for i, part in enumerate(parts):
            if i % 2 == 0:
                pattern += re.sub(" +", r"\\s+", part)
                continue
            name = part[1:-1]
            if name in names:
                raise ConfigurationError(f"duplicate placeholder <{name}> in format")
            names.append(name)
            if name == "Content":
                pattern += r"(?P<Content>.*)"
            else:
                pattern += rf"(?P<{name}>.*?)"
        if not names or names[-1] != "Content":
            raise ConfigurationError(
                f"format must end with a single <Content> placeholder: {format_string!r}"
            )
        try:
            regex = re.compile("^" + pattern + "$")
        except re.error as exc:
            raise ConfigurationError(f"format does not compile: {format_string!r}: {exc}") from exc
        return cls(format_string, tuple(names), regex)


def build_mask_rules(
    names: list[str] | tuple[str, ...] = RULE_ORDER,
    custom_regexes: list[str] | tuple[str, ...] = (),
) -> list[MaskRule]:
    """Build the ordered rule list from rule names plus user regexes.

    Custom regexes run after the built-in rules, in the order given. A regex
    that does not compile is a configuration error here, never at mask time.
    """
    unknown = [n for n in names if n not in _RULE_PATTERNS]
    if unknown:
        raise ConfigurationError(f"unknown mask rule name(s): {', '.join(unknown)}")
    rules = [
        MaskRule(name, re.compile(_RULE_PATTERNS[name]))
        for name in RULE_ORDER
        if name in names
    ]
    for raw in custom_regexes:
        try:
            rules.append(MaskRule("custom", re.compile(raw)))
        except re.error as exc:
            raise ConfigurationError(f"custom regex does not compile: {raw!r}: {exc}") from exc
    return rules


def parse_header(raw_line: str, fmt: HeaderFormat) -> LogRecord:
    """Split one raw line into header fields and content.

    Raises HeaderMismatchError when the line does not fit the format (the
    caller decides whether to skip or abort). line_id is filled in by the
    caller; the record returned here carries 0.
    """
    line = raw_line.strip()
    if not line:
        raise HeaderMismatchError("empty line")
    match = fmt.regex.match(line)
    if match is None:
        raise HeaderMismatchError(f"line does not match format {fmt.format_string!r}")
    content = match.group("Content")
    if not content.strip():
        raise HeaderMismatchError("header matched but content is empty")
    fields = {
        name: match.group(name) or ""
        for name in fmt.field_names
        if name != "Content"
    }
    return LogRecord(line_id=0, header_fields=fields, content=content)


def mask_trivial(content: str, rules: list[MaskRule]) -> str:
    """Replace every maximal match of an enabled rule with the wildcard.

    The output is a fixed point of the rule set: passes repeat until no rule
    substitutes anything (one extra pass for typical lines).
    """
    text = content
    for _ in range(_MAX_MASK_PASSES):
        changed = 0
        for rule in rules:
            if not rule.enabled:
                continue
            text, n = rule.pattern.subn(WILDCARD, text)
            changed += n
        if not changed:
            break
    return text


def tokenize(masked: str) -> list[str]:
    """Split on whitespace runs; never yields empty tokens."""
    return masked.split()
