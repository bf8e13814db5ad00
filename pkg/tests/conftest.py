import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> pathlib.Path:
    return DATA


@pytest.fixture
def chain_file() -> pathlib.Path:
    return DATA / "chain.scsp"


@pytest.fixture
def chain_text(chain_file) -> str:
    return chain_file.read_text()
