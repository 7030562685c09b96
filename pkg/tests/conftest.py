from pathlib import Path

import pytest

import logabstract as la

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
SAMPLES_DIR = DATA_DIR / "samples"
GOLDEN_LOG = DATA_DIR / "golden" / "hdfs_example.log"


@pytest.fixture(scope="session")
def golden_lines() -> list[str]:
    return GOLDEN_LOG.read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def hdfs_config() -> la.DatasetConfig:
    return la.load_config("hdfs")


@pytest.fixture(scope="session")
def golden_result(golden_lines, hdfs_config) -> la.ParseResult:
    return la.parse_raw_lines(golden_lines, hdfs_config)
