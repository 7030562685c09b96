import pytest

import logabstract as la
from logabstract.errors import ConfigurationError, HeaderMismatchError

HDFS_FORMAT = "<Date> <Time> <Pid> <Level> <Component>: <Content>"


@pytest.fixture(scope="module")
def hdfs_fmt():
    return la.HeaderFormat.compile(HDFS_FORMAT)


@pytest.fixture(scope="module")
def rules():
    return la.build_mask_rules()


class TestParseHeader:
    def test_hdfs_line_splits_into_fields_and_content(self, hdfs_fmt):
        line = (
            "081109 203615 148 INFO dfs.DataNode$PacketResponder: "
            "PacketResponder 1 for block blk_38865049064139660 terminating"
        )
        rec = la.parse_header(line, hdfs_fmt)
        assert rec.header_fields == {
            "Date": "081109",
            "Time": "203615",
            "Pid": "148",
            "Level": "INFO",
            "Component": "dfs.DataNode$PacketResponder",
        }
        assert rec.content == "PacketResponder 1 for block blk_38865049064139660 terminating"

    def test_minimal_single_character_fields(self, hdfs_fmt):
        rec = la.parse_header("a b c d e: f", hdfs_fmt)
        assert rec.header_fields == {"Date": "a", "Time": "b", "Pid": "c", "Level": "d", "Component": "e"}
        assert rec.content == "f"

    def test_missing_literal_delimiter_is_a_mismatch(self, hdfs_fmt):
        with pytest.raises(HeaderMismatchError):
            la.parse_header("garbage with no colon", hdfs_fmt)

    def test_empty_content_is_a_mismatch(self, hdfs_fmt):
        with pytest.raises(HeaderMismatchError):
            la.parse_header("081109 203615 148 INFO comp: ", hdfs_fmt)

    def test_optional_header_group(self):
        fmt = la.HeaderFormat.compile(r"<Month> <Date> <Time> <Level> <Component>(\[<PID>\])?: <Content>")
        with_pid = la.parse_header("Jun 15 02:04:59 combo sshd(pam_unix)[19937]: check pass", fmt)
        assert with_pid.header_fields["PID"] == "19937"
        without = la.parse_header("Jun 15 02:04:59 combo kernel: usb 3-1: new device", fmt)
        assert without.header_fields["PID"] == ""
        assert without.content == "usb 3-1: new device"


class TestHeaderFormatValidation:
    def test_content_must_be_last(self):
        with pytest.raises(ConfigurationError):
            la.HeaderFormat.compile("<Content> <Level>")

    def test_content_must_exist(self):
        with pytest.raises(ConfigurationError):
            la.HeaderFormat.compile("<Date> <Level>")

    def test_duplicate_placeholder_rejected(self):
        with pytest.raises(ConfigurationError):
            la.HeaderFormat.compile("<Date> <Date> <Content>")


class TestMaskTrivial:
    def test_ip_with_port_becomes_one_wildcard(self, rules):
        content = (
            "BLOCK* NameSystem.addStoredBlock: blockMap updated: 10.251.73.220:50010 "
            "is added to blk_7128370237687728475 size 67108864"
        )
        assert la.mask_trivial(content, rules) == (
            "BLOCK* NameSystem.addStoredBlock: blockMap updated: <*> "
            "is added to blk_7128370237687728475 size 67108864"
        )

    def test_slash_prefixed_ip_consumed_with_its_slash(self, rules):
        content = "Received block blk_3587505140051952248 of size 67108864 from /10.251.42.84"
        assert la.mask_trivial(content, rules) == (
            "Received block blk_3587505140051952248 of size 67108864 from <*>"
        )

    def test_no_rule_matches_leaves_content_unchanged(self, rules):
        assert la.mask_trivial("no trivial variables here", rules) == "no trivial variables here"

    @pytest.mark.parametrize(
        "content,masked",
        [
            ("saved to Library/Logs today", "saved to <*> today"),
            ("rule: /var/www/html/", "rule: <*>"),
            ("ok /etc/httpd/conf/workers2.properties", "ok <*>"),
            ("at 210.245.165.136 and 210.245.165.136:8080", "at <*> and <*>"),
            ("value 0x0001FC here", "value <*> here"),
            ("addr FF:F2:9F:16:EB:27:00:0D:60:E9:14:D8 end", "addr <*> end"),
            ("addr 00:0D:60:E9:14:D8 end", "addr <*> end"),
            ("on Jan and January done", "on <*> and <*> done"),
            ("on Thu and Thursday done", "on <*> and <*> done"),
            ("at 12:23:34.893 sharp", "at <*> sharp"),
            ("at 2:23:34 sharp", "at <*> sharp"),
            ("see http://www.google.com now", "see <*> now"),
            ("see https://www.google.com/a/b?q=1 now", "see <*> now"),
        ],
    )
    def test_each_default_rule(self, rules, content, masked):
        assert la.mask_trivial(content, rules) == masked

    def test_plain_integers_are_not_masked(self, rules):
        assert la.mask_trivial("value 980 stays", rules) == "value 980 stays"

    def test_version_strings_are_not_dotted_quads(self, rules):
        assert la.mask_trivial("jetty-6.1.26 started", rules) == "jetty-6.1.26 started"

    def test_month_is_whole_word_and_case_sensitive(self, rules):
        assert la.mask_trivial("Janitor in janitor room", rules) == "Janitor in janitor room"

    def test_rule_subset_respects_enabled_names(self):
        only_ip = la.build_mask_rules(["ipv4"])
        assert la.mask_trivial("Jan at 10.0.0.1", only_ip) == "Jan at <*>"

    def test_custom_rule_runs_after_builtins(self):
        rules = la.build_mask_rules(["ipv4"], [r"blk_-?\d+"])
        assert la.mask_trivial("block blk_123 at 10.0.0.1", rules) == "block <*> at <*>"

    def test_invalid_custom_regex_fails_at_build_time(self):
        with pytest.raises(ConfigurationError):
            la.build_mask_rules(["ipv4"], ["("])

    def test_unknown_rule_name_rejected(self):
        with pytest.raises(ConfigurationError):
            la.build_mask_rules(["ipv5"])

    def test_masking_is_idempotent_on_corpus_lines(self, rules, golden_lines, hdfs_config):
        fmt = hdfs_config.header_format()
        for line in golden_lines:
            content = la.parse_header(line, fmt).content
            once = la.mask_trivial(content, rules)
            assert la.mask_trivial(once, rules) == once


class TestTokenize:
    def test_whitespace_split(self):
        assert la.tokenize("PacketResponder 1 for block") == ["PacketResponder", "1", "for", "block"]

    def test_run_collapsing(self):
        assert la.tokenize("  a   b ") == ["a", "b"]

    def test_empty(self):
        assert la.tokenize("") == []

    def test_join_round_trip(self):
        tokens = ["a", "<*>", "b,c", "(1)"]
        assert la.tokenize(" ".join(tokens)) == tokens
