from pathlib import Path

import pytest

from mixdiff.config import ENV_VARS, reset_guards

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Run every test with no config files and no MIXDIFF_* variables."""
    for var in ENV_VARS.values():
        monkeypatch.delenv(var, raising=False)
    config_home = tmp_path / "config-home"
    monkeypatch.setenv("XDG_CONFIG_HOME", str(config_home))
    monkeypatch.setenv("APPDATA", str(config_home))
    workdir = tmp_path / "work"
    workdir.mkdir()
    monkeypatch.chdir(workdir)
    reset_guards()
    yield config_home
    reset_guards()


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")
    return read
