"""Per-group frequency analysis, numeric replacement, template extraction.

Within one pattern group, a term occurring strictly more often than the
group's least frequent term is treated as static text; everything else is a
dynamic value and becomes the wildcard. A final pass replaces standalone
(optionally sign- or bracket-wrapped) integers that survived the frequency
rule, e.g. a task number that happened to repeat.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .model import WILDCARD, MaskedMessage, PatternGroup, Template, next_template_id

# Leading "(" / "[" and trailing ")" / "]" around a signed digit run are kept;
# only the number itself is wildcarded, so "(980)" keeps its token shape.
_NUMERIC_TOKEN = re.compile(r"^([(\[]*)([+-]?\d+)([)\]]*)$")


@dataclass(frozen=True)
class TokenClassification:
    """Static-term set and minimum frequency for one pattern group."""

    group_id: int
    static_terms: frozenset[str]
    min_freq: int


@dataclass
class TemplateStore:
    """Finalized templates plus the line -> template assignment."""

    templates: list[Template] = field(default_factory=list)
    assignment: dict[int, str] = field(default_factory=dict)
    _by_tokens: dict[tuple[str, ...], str] = field(default_factory=dict)

    def get(self, template_id: str) -> Template:
        return self.templates[int(template_id[1:]) - 1]

    def lookup(self, tokens: tuple[str, ...]) -> str | None:
        return self._by_tokens.get(tokens)


def term_frequencies(messages: Iterable[MaskedMessage]) -> Counter:
    """Multiset count of every token across the given messages.

    Equals the term_freq table a PatternGroup accumulates during assignment;
    a token occurring twice in one line counts twice.
    """
    freq = Counter()
    for message in messages:
        freq.update(message.tokens)
    return freq


def classify_tokens(
    freq: Counter | dict,
    group_id: int = 0,
    min_freq_override: int | None = None,
) -> TokenClassification:
    """Split a group's terms into static and dynamic by minimum frequency.

    Static terms are those occurring strictly more often than the minimum.
    When every term occurs equally often (singleton groups included), all
    terms stay static; wildcards can then only come from masking and the
    numeric pass, never from frequency analysis alone. min_freq_override
    replaces the natural minimum for experimentation and is applied
    literally, without the all-equal rescue.
    """
    if not freq:
        raise ValueError("cannot classify an empty frequency table")
    if min_freq_override is None:
        min_freq = min(freq.values())
        if min_freq == max(freq.values()):
            return TokenClassification(group_id, frozenset(freq), min_freq)
    else:
        min_freq = min_freq_override
    static = frozenset(t for t, n in freq.items() if n > min_freq)
    return TokenClassification(group_id, static, min_freq)


def instance_template(message: MaskedMessage, cls: TokenClassification) -> list[str]:
    """Render one message against its group's classification.

    Token count is preserved: each token is kept verbatim when static (or
    already the wildcard), otherwise replaced by the wildcard.
    """
    return [
        t if t == WILDCARD or t in cls.static_terms else WILDCARD
        for t in message.tokens
    ]


def replace_numericals(tokens: Sequence[str]) -> list[str]:
    """Wildcard tokens that are integers, bare or inside () / [] delimiters."""
    out = []
    for token in tokens:
        m = _NUMERIC_TOKEN.match(token)
        out.append(f"{m.group(1)}{WILDCARD}{m.group(3)}" if m else token)
    return out


def finalize_templates(
    messages: Sequence[MaskedMessage],
    group_ids: Sequence[int],
    classifications: dict[int, TokenClassification],
) -> TemplateStore:
    """Derive each line's final template and deduplicate across groups.

    Lines are visited in input order, so template ids are first-seen
    sequence numbers; identical token sequences arising from different
    groups collapse into one template.
    """
    store = TemplateStore()
    counts: Counter = Counter()
    for message, gid in zip(messages, group_ids):
        tokens = tuple(replace_numericals(instance_template(message, classifications[gid])))
        template_id = store._by_tokens.get(tokens)
        if template_id is None:
            template_id = next_template_id(len(store._by_tokens) + 1)
            store._by_tokens[tokens] = template_id
        store.assignment[message.line_id] = template_id
        counts[template_id] += 1
    store.templates = [
        Template(template_id, tokens, counts[template_id])
        for tokens, template_id in store._by_tokens.items()
    ]
    return store


def match_event(message: MaskedMessage, store: TemplateStore) -> str | None:
    """Recognize a (possibly unseen) masked message against the store.

    The message goes through the numeric pass, then an exact token-sequence
    lookup. Failing that, every template of equal token count is tried
    position-wise: a template token admits a value verbatim, as the bare
    wildcard, or as a delimiter-wrapped wildcard against a value wearing
    the same delimiters. Among admitting templates the one agreeing
    verbatim at the most positions wins, first-seen order breaking ties, so
    a broad early template cannot shadow a more specific later one. Returns
    None when nothing admits the message; the caller decides whether to
    learn or reject.
    """
    tokens = tuple(replace_numericals(message.tokens))
    exact = store.lookup(tokens)
    if exact is not None:
        return exact
    best_id = None
    best_verbatim = -1
    for template in store.templates:
        if len(template.tokens) != len(tokens):
            continue
        verbatim = 0
        for t, v in zip(template.tokens, tokens):
            if t == v:
                verbatim += 1
            elif not _token_matches(t, v):
                break
        else:
            if verbatim > best_verbatim:
                best_id = template.template_id
                best_verbatim = verbatim
    return best_id


def _token_matches(template_token: str, value: str) -> bool:
    if template_token == value or template_token == WILDCARD:
        return True
    if WILDCARD in template_token:
        return _embedded_wildcard_regex(template_token).match(value) is not None
    return False


@lru_cache(maxsize=4096)
def _embedded_wildcard_regex(template_token: str) -> re.Pattern:
    parts = template_token.split(WILDCARD)
    return re.compile("^" + ".+".join(re.escape(p) for p in parts) + "$")
