from pathlib import Path

import pytest

from sam_bridge import TextEncoder, read_dataset

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def checkpoint_dir():
    return str(FIXTURES / "tiny_checkpoint")


@pytest.fixture(scope="session")
def dataset_path():
    return str(FIXTURES / "bridge_dataset.jsonl")


@pytest.fixture(scope="session")
def pairs(dataset_path):
    return read_dataset(dataset_path)


@pytest.fixture(scope="session")
def encoder(checkpoint_dir):
    return TextEncoder(checkpoint_dir, batch_size=4)
