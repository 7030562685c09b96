"""Dataset configuration loading.

One JSON config per dataset supplies the header format, the enabled mask
rules, user regexes, and the grouping knobs. Configs for the sixteen
benchmark log formats ship with the package and can be referenced by name
anywhere a config path is accepted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .errors import ConfigurationError
from .preprocess import RULE_ORDER, HeaderFormat, build_mask_rules

_ALLOWED_KEYS = {
    "name",
    "log_format",
    "mask_rules",
    "custom_regexes",
    "similarity_threshold",
    "grouping_mode",
    "header_mismatch_policy",
}


@dataclass(frozen=True)
class DatasetConfig:
    name: str
    log_format: str
    mask_rules: tuple[str, ...] = RULE_ORDER
    custom_regexes: tuple[str, ...] = ()
    similarity_threshold: float = 1.0
    grouping_mode: str = "count"
    header_mismatch_policy: str = "skip"

    def header_format(self) -> HeaderFormat:
        return HeaderFormat.compile(self.log_format)

    def rules(self):
        return build_mask_rules(self.mask_rules, self.custom_regexes)

    def with_overrides(
        self,
        threshold: float | None = None,
        mode: str | None = None,
        strict_headers: bool | None = None,
    ) -> "DatasetConfig":
        cfg = self
        if threshold is not None:
            cfg = replace(cfg, similarity_threshold=threshold)
        if mode is not None:
            cfg = replace(cfg, grouping_mode=mode)
        if strict_headers:
            cfg = replace(cfg, header_mismatch_policy="abort")
        return _validated(cfg)


def config_from_dict(data: dict, name_hint: str = "") -> DatasetConfig:
    if not isinstance(data, dict):
        raise ConfigurationError("config must be a JSON object")
    unknown = set(data) - _ALLOWED_KEYS
    if unknown:
        raise ConfigurationError(f"unknown config key(s): {', '.join(sorted(unknown))}")
    if "log_format" not in data:
        raise ConfigurationError("config is missing required key 'log_format'")
    cfg = DatasetConfig(
        name=data.get("name", name_hint or "dataset"),
        log_format=data["log_format"],
        mask_rules=tuple(data.get("mask_rules", RULE_ORDER)),
        custom_regexes=tuple(data.get("custom_regexes", ())),
        similarity_threshold=float(data.get("similarity_threshold", 1.0)),
        grouping_mode=data.get("grouping_mode", "count"),
        header_mismatch_policy=data.get("header_mismatch_policy", "skip"),
    )
    return _validated(cfg)


def _validated(cfg: DatasetConfig) -> DatasetConfig:
    if not 0.0 < cfg.similarity_threshold <= 1.0:
        raise ConfigurationError(
            f"similarity_threshold must be in (0, 1], got {cfg.similarity_threshold}"
        )
    if cfg.grouping_mode not in ("count", "strict"):
        raise ConfigurationError(f"grouping_mode must be 'count' or 'strict', got {cfg.grouping_mode!r}")
    if cfg.header_mismatch_policy not in ("skip", "abort"):
        raise ConfigurationError(
            f"header_mismatch_policy must be 'skip' or 'abort', got {cfg.header_mismatch_policy!r}"
        )
    cfg.header_format()
    cfg.rules()
    return cfg


def bundled_config_names() -> list[str]:
    files = resources.files("logabstract").joinpath("datasets")
    return sorted(p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json"))


def load_config(path_or_name: str | Path) -> DatasetConfig:
    """Load a config from a JSON file path, or by bundled dataset name."""
    path = Path(path_or_name)
    if path.is_file():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: not valid JSON: {exc}") from exc
        return config_from_dict(data, name_hint=path.stem)
    name = str(path_or_name).lower()
    bundle = resources.files("logabstract").joinpath(f"datasets/{name}.json")
    if bundle.is_file():
        return config_from_dict(json.loads(bundle.read_text(encoding="utf-8")), name_hint=name)
    raise ConfigurationError(
        f"config not found: {path_or_name!r} is neither a file nor a bundled dataset "
        f"({', '.join(bundled_config_names())})"
    )
