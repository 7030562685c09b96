"""Property suites over randomized inputs.

Covers the pipeline's structural guarantees: masking and numeric
replacement are idempotent, templating preserves token counts, the
partition at threshold 1.0 ignores input order, strict grouping refines
count grouping, every ingested line recognizes itself, and the writers are
byte-deterministic.
"""

import random
import string

from hypothesis import given, settings
from hypothesis import strategies as st

import logabstract as la

RULES = la.build_mask_rules()

# Text shaped like log content: words, numbers, dotted quads, paths,
# punctuation, wildcards; plus a totally free fragment for rough edges.
_word = st.text(string.ascii_letters, min_size=1, max_size=12)
_number = st.integers(-(10**19), 10**19).map(str)
_ip = st.tuples(*[st.integers(0, 255)] * 4).map(lambda t: ".".join(map(str, t)))
_ip_port = st.tuples(_ip, st.integers(1, 65535)).map(lambda t: f"{t[0]}:{t[1]}")
_path = st.lists(_word, min_size=2, max_size=4).map("/".join)
_hex = st.integers(0, 2**32).map(lambda n: f"0x{n:X}")
_decorated = st.tuples(
    st.sampled_from(["", "(", "["]), _number, st.sampled_from(["", ")", "]"])
).map("".join)
_free = st.text(string.printable, min_size=1, max_size=20).map(lambda s: s.replace("\n", " "))

log_token = st.one_of(
    _word, _number, _ip, _ip_port, _path, _hex, _decorated,
    st.just("<*>"), st.just("blk_123456"), _free,
)
log_content = st.lists(log_token, min_size=0, max_size=12).map(" ".join)
token_lists = st.lists(
    st.one_of(_word, _number, _decorated, st.just("<*>"), st.just("blk_1")),
    min_size=1, max_size=10,
)


def build(line_id: int, content: str) -> la.MaskedMessage:
    return la.build_message(line_id, content, RULES)


@given(log_content)
def test_masking_is_idempotent(content):
    once = la.mask_trivial(content, RULES)
    assert la.mask_trivial(once, RULES) == once


@given(token_lists)
def test_replace_numericals_is_idempotent(tokens):
    once = la.replace_numericals(tokens)
    assert la.replace_numericals(once) == once


@given(token_lists)
def test_replace_numericals_preserves_token_count(tokens):
    assert len(la.replace_numericals(tokens)) == len(tokens)


@given(st.lists(log_content, min_size=1, max_size=25))
def test_templating_preserves_token_counts_per_line(contents):
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    index = la.GroupIndex()
    gids = index.assign_all(messages)
    cls = {g.group_id: la.classify_tokens(g.term_freq, g.group_id) for g in index.groups if g.term_freq}
    for message, gid in zip(messages, gids):
        if not message.tokens:
            continue
        templated = la.replace_numericals(la.instance_template(message, cls[gid]))
        assert len(templated) == len(message.tokens)


@given(st.lists(log_content, min_size=1, max_size=25))
def test_static_tokens_appear_verbatim_at_their_positions(contents):
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    index = la.GroupIndex()
    gids = index.assign_all(messages)
    for message, gid in zip(messages, gids):
        if not message.tokens:
            continue
        cls = la.classify_tokens(index.groups[gid - 1].term_freq, gid)
        for original, templated in zip(message.tokens, la.instance_template(message, cls)):
            assert templated == original or templated == la.WILDCARD


@given(st.lists(log_content, min_size=1, max_size=20), st.randoms(use_true_random=False))
def test_partition_is_order_independent_at_full_threshold(contents, rng):
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    shuffled = list(messages)
    rng.shuffle(shuffled)
    a, b = la.GroupIndex(), la.GroupIndex()
    a.assign_all(messages)
    b.assign_all(shuffled)
    parts_a = {frozenset(p) for p in a.partition()}
    parts_b = {frozenset(p) for p in b.partition()}
    assert parts_a == parts_b


@given(st.lists(log_content, min_size=1, max_size=20))
def test_strict_partition_refines_count_partition(contents):
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    count_idx = la.GroupIndex(mode="count")
    strict_idx = la.GroupIndex(mode="strict")
    count_idx.assign_all(messages)
    strict_idx.assign_all(messages)
    count_parts = [set(p) for p in count_idx.partition()]
    for part in strict_idx.partition():
        assert any(set(part) <= cp for cp in count_parts)


@given(st.lists(log_content, min_size=1, max_size=20))
def test_groups_partition_the_input(contents):
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    index = la.GroupIndex()
    index.assign_all(messages)
    seen = sorted(i for part in index.partition() for i in part)
    assert seen == list(range(1, len(contents) + 1))


@given(
    st.lists(log_content.filter(lambda c: c.split()), min_size=1, max_size=20),
    st.sampled_from(["count", "strict"]),
)
def test_every_ingested_line_is_admitted_by_a_template(contents, mode):
    # Adversarial text can contain a later template that describes a line
    # strictly better than the line's own (see the matcher's tie rules), so
    # the universal guarantee is admission, not identity; identity is
    # asserted over realistic corpus data below and in the acceptance suite.
    messages = [build(i, c) for i, c in enumerate(contents, 1)]
    index = la.GroupIndex(mode=mode)
    gids = index.assign_all(messages)
    cls = {g.group_id: la.classify_tokens(g.term_freq, g.group_id) for g in index.groups}
    store = la.finalize_templates(messages, gids, cls)
    for message in messages:
        matched = la.match_event(message, store)
        assert matched is not None
        own = store.assignment[message.line_id]
        probe = tuple(la.replace_numericals(message.tokens))
        for template_id in (matched, own):
            template = store.get(template_id)
            assert len(template.tokens) == len(probe)
            for t, v in zip(template.tokens, probe):
                assert t == v or la.WILDCARD in t


def test_golden_lines_recognize_themselves(golden_result):
    for message in golden_result.messages:
        assert la.match_event(message, golden_result.store) == golden_result.store.assignment[message.line_id]


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=0, max_size=80))
def test_similarity_is_symmetric_and_bounded(count_pairs):
    for c1, c2 in count_pairs:
        m1 = la.MaskedMessage(1, ("x",) * 0, c1)
        m2 = la.MaskedMessage(2, ("y",) * 0, c2)
        s = la.similarity(m1, m2)
        assert 0.0 <= s <= 1.0
        assert s == la.similarity(m2, m1)
        if c1 == c2:
            assert s == 1.0


@settings(max_examples=25)
@given(st.lists(log_content.filter(lambda c: c.split()), min_size=1, max_size=15))
def test_structured_output_is_byte_deterministic(tmp_path_factory, contents):
    cfg = la.load_config("hdfs")
    result = la.parse_content_lines(contents, cfg)
    outdir = tmp_path_factory.mktemp("det")
    first = la.write_structured(outdir / "a.csv", result.records, result.store)
    second = la.write_structured(outdir / "b.csv", result.records, result.store)
    assert first.read_bytes() == second.read_bytes()
    t1 = la.write_templates(outdir / "ta.csv", result.store.templates)
    t2 = la.write_templates(outdir / "tb.csv", result.store.templates)
    assert t1.read_bytes() == t2.read_bytes()


def test_masking_idempotent_on_shuffled_corpus(golden_lines, hdfs_config):
    rng = random.Random(0)
    fmt = hdfs_config.header_format()
    contents = [la.parse_header(line, fmt).content for line in golden_lines]
    for _ in range(50):
        line = rng.choice(contents)
        cut = rng.randrange(len(line))
        mutated = line[cut:] + " " + line[:cut]
        once = la.mask_trivial(mutated, RULES)
        assert la.mask_trivial(once, RULES) == once
