import pytest

from mixdiff.config import (
    Guards,
    current_guards,
    guards_from_env,
    parse_size,
    reset_guards,
    resolve_limit,
)
from mixdiff.errors import InvalidConfigError
from mixdiff.utils.config_file import (
    GlobalConfig,
    create_default_config,
    get_config_value,
    get_global_config_path,
    get_project_config_path,
    load_config,
)


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults():
    guards = current_guards()
    assert guards == Guards()
    assert guards.max_set_size == 15
    assert guards.max_oracle_composition == 6
    assert guards.max_oracle_sweep == 8
    assert guards.seed == 1729


def test_parse_size():
    assert parse_size(" 12 ") == 12
    assert parse_size(0) == 0
    for bad in (True, "1.5", "ten", -3):
        with pytest.raises(InvalidConfigError):
            parse_size(bad, "max_set_size")


def test_overrides_accept_dashed_keys_and_ignore_unknown():
    guards = Guards().with_overrides({"max-set-size": 9, "colour": "red"})
    assert guards.max_set_size == 9
    assert guards.max_multiset_size == 15


def test_global_config_file(isolated_config):
    write(get_global_config_path(), "[guards]\nmax_set_size = 10\nseed = 7\n")
    reset_guards()
    guards = current_guards()
    assert guards.max_set_size == 10
    assert guards.seed == 7
    assert load_config().source == get_global_config_path()


def test_project_file_overrides_global(tmp_path, monkeypatch):
    write(get_global_config_path(), "[guards]\nmax_set_size = 10\nmax_oracle_sweep = 5\n")
    project = tmp_path / "project"
    write(project / ".mixdiff.toml", "[guards]\nmax_set_size = 12\n")
    nested = project / "a" / "b"
    nested.mkdir(parents=True)
    monkeypatch.chdir(nested)
    reset_guards()

    assert get_project_config_path() == (project / ".mixdiff.toml").resolve()
    guards = current_guards()
    assert guards.max_set_size == 12
    assert guards.max_oracle_sweep == 5


def test_environment_wins(monkeypatch):
    write(get_global_config_path(), "[guards]\nmax_set_size = 10\n")
    monkeypatch.setenv("MIXDIFF_MAX_SET_SIZE", "4")
    reset_guards()
    assert current_guards().max_set_size == 4
    assert resolve_limit(None, "max_set_size") == 4
    assert resolve_limit(11, "max_set_size") == 11


def test_bad_environment_value_raises(monkeypatch):
    monkeypatch.setenv("MIXDIFF_SEED", "abc")
    reset_guards()
    with pytest.raises(InvalidConfigError, match="MIXDIFF_SEED"):
        current_guards()


def test_guards_from_explicit_environ():
    guards = guards_from_env(Guards(), {"MIXDIFF_MAX_ORACLE_COMPOSITION": "3", "MIXDIFF_SEED": " "})
    assert guards.max_oracle_composition == 3
    assert guards.seed == 1729


def test_malformed_config_file_is_ignored():
    write(get_global_config_path(), "[guards\nmax_set_size = ")
    reset_guards()
    assert current_guards() == Guards()


def test_invalid_value_in_config_file_is_ignored():
    write(get_global_config_path(), "[guards]\nmax_set_size = -1\n")
    reset_guards()
    assert current_guards() == Guards()


def test_guards_are_cached_until_reset(monkeypatch):
    assert current_guards().seed == 1729
    monkeypatch.setenv("MIXDIFF_SEED", "5")
    assert current_guards().seed == 1729
    reset_guards()
    assert current_guards().seed == 5


def test_create_default_config_round_trips(tmp_path):
    path = create_default_config(tmp_path / "mixdiff" / "config.toml")
    assert path.exists()
    config = load_config(include_project=False)
    assert config.guards == Guards()

    path = create_default_config(get_global_config_path())
    assert load_config().source == path
    assert load_config().guards == Guards()


def test_get_config_value():
    write(get_global_config_path(), "[guards]\nmax_oracle_sweep = 6\n")
    assert get_config_value("guards.max_oracle_sweep") == 6
    assert get_config_value("guards.unknown", "fallback") == "fallback"
    assert get_config_value("nonsense") is None


def test_global_config_dict_round_trip():
    config = GlobalConfig.from_dict({"guards": {"seed": 3}})
    assert GlobalConfig.from_dict(config.to_dict()).guards == config.guards
