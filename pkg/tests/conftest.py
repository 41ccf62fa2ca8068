import pathlib

import pytest

from msa_decide import default_model

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def model():
    return default_model()


@pytest.fixture
def write_kb(tmp_path):
    def _write(text: str, name: str = "model.dmkb.json") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
