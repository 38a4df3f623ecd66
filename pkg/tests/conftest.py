from pathlib import Path

import pytest

from lexgender.data import (
    BUNDLED_SNAPSHOT_IDS,
    gold_path,
    snapshot_path,
    toy_corpus_path,
    wndb_dir,
)
from lexgender.evaluation import load_gold
from lexgender.providers import SnapshotProvider, WordNetProvider

TESTS_DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def bundled_providers():
    return [SnapshotProvider(snapshot_path(pid)) for pid in BUNDLED_SNAPSHOT_IDS]


@pytest.fixture(scope="session")
def wordnet():
    return WordNetProvider(wndb_dir())


@pytest.fixture(scope="session")
def gold():
    return load_gold(gold_path())


@pytest.fixture(scope="session")
def toy_corpus_file():
    return toy_corpus_path()


@pytest.fixture()
def tests_data():
    return TESTS_DATA
