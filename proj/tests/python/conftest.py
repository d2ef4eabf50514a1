import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("GRPD_CLI") or shutil.which("grpd")
    if not path:
        candidate = ROOT / "build" / "grpd"
        path = str(candidate) if candidate.exists() else None
    if not path:
        pytest.skip("grpd executable not found")
    return path


@pytest.fixture(scope="session")
def data_dir():
    return pathlib.Path(os.environ.get("GRPD_DATA_DIR", ROOT / "data"))


@pytest.fixture(scope="session")
def schema_dir():
    return pathlib.Path(os.environ.get("GRPD_SCHEMA_DIR", ROOT / "schema"))
