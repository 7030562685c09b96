"""Log abstraction toolkit.

Converts unstructured log lines into structured events and templates:
header splitting and trivial-variable masking, pattern grouping by
letter-count similarity, per-group frequency analysis to separate static
from dynamic tokens, and a final numeric-replacement pass. An evaluation
harness scores grouping and matching accuracy against labeled data and
measures stabilization and efficiency.
"""

from .config import DatasetConfig, bundled_config_names, load_config
from .errors import ConfigurationError, EvaluationError, HeaderMismatchError
from .evaluation import (
    GroundTruth,
    GroupingScore,
    efficiency_benchmark,
    evaluate_against_truth,
    grouping_accuracy,
    matching_accuracy,
    stabilization_curve,
)
from .grouping import GroupIndex, alphabetical_letter_count, similarity
from .io import load_ground_truth, write_structured, write_templates
from .model import (
    WILDCARD,
    EvaluationReport,
    LogRecord,
    MaskedMessage,
    PatternGroup,
    Template,
    next_template_id,
)
from .pipeline import (
    ParseResult,
    build_message,
    parse_content_lines,
    parse_file,
    parse_raw_lines,
)
from .preprocess import (
    RULE_ORDER,
    HeaderFormat,
    MaskRule,
    build_mask_rules,
    mask_trivial,
    parse_header,
    tokenize,
)
from .templating import (
    TemplateStore,
    TokenClassification,
    classify_tokens,
    finalize_templates,
    instance_template,
    match_event,
    replace_numericals,
    term_frequencies,
)

__version__ = "0.1.0"

__all__ = [
    "WILDCARD",
    "ConfigurationError",
    "DatasetConfig",
    "EvaluationError",
    "EvaluationReport",
    "GroundTruth",
    "GroupIndex",
    "GroupingScore",
    "HeaderFormat",
    "HeaderMismatchError",
    "LogRecord",
    "MaskRule",
    "MaskedMessage",
    "ParseResult",
    "PatternGroup",
    "RULE_ORDER",
    "Template",
    "TemplateStore",
    "TokenClassification",
    "alphabetical_letter_count",
    "build_mask_rules",
    "build_message",
    "bundled_config_names",
    "classify_tokens",
    "efficiency_benchmark",
    "evaluate_against_truth",
    "finalize_templates",
    "grouping_accuracy",
    "instance_template",
    "load_config",
    "load_ground_truth",
    "mask_trivial",
    "match_event",
    "matching_accuracy",
    "next_template_id",
    "parse_content_lines",
    "parse_file",
    "parse_header",
    "parse_raw_lines",
    "replace_numericals",
    "similarity",
    "stabilization_curve",
    "term_frequencies",
    "tokenize",
    "write_structured",
    "write_templates",
]
