import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from neurotrade.core.config import Config  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in (Config.DATA_DIR_ENV, Config.OUTPUT_DIR_ENV, Config.CONFIG_FILE_ENV, Config.PARALLELISM_ENV):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(Config, 'LOG_TO_FILE', False)
