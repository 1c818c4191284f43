from pathlib import Path

import pytest

from framelex import FrameLexicon, load_table

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "fixtures" / "framefiles"
DATA_DIR = Path(__file__).resolve().parent / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def lexicon(corpus_dir) -> FrameLexicon:
    return FrameLexicon(corpus_dir)


@pytest.fixture(scope="session")
def table():
    return load_table()


@pytest.fixture()
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture()
def golden_dir() -> Path:
    return GOLDEN_DIR
