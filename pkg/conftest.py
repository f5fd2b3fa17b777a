import tempfile
from collections.abc import Iterator

import pytest


@pytest.fixture(autouse=True)
def isolated_config_dir(monkeypatch: pytest.MonkeyPatch) -> Iterator[str]:
    """Point the configuration directory at a throwaway location for every test."""

    from coxskel.core.configuration import get_config_manager

    with tempfile.TemporaryDirectory() as temp_dir:
        monkeypatch.setenv("COXSKEL_CONFIG_DIR", temp_dir)
        for key in ("COXSKEL_LOG_LEVEL", "COXSKEL_WORKERS"):
            monkeypatch.delenv(key, raising=False)
        get_config_manager.cache_clear()
        yield temp_dir
        get_config_manager.cache_clear()
