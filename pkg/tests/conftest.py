import numpy as np
import pytest

from core.group import group_from_alias
from core.settings import reset_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Every test starts from the default settings and logs into its own folder."""
    monkeypatch.setenv("TQFT_LOG_DIR", str(tmp_path / "logs"))
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def np_random() -> np.random.Generator:
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture
def z2():
    return group_from_alias('Z2')


@pytest.fixture
def z3():
    return group_from_alias('Z3')


@pytest.fixture
def s3():
    return group_from_alias('S3')


@pytest.fixture
def d4():
    return group_from_alias('D4')


@pytest.fixture
def q8():
    return group_from_alias('Q8')
