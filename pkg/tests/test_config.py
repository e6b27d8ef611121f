"""
Test configurazione (variabili d'ambiente) e setup del logging
"""
import logging

import pytest

from config import AppConfig, CliConfig, LimitsConfig, config
from utils.logging_setup import ColorFormatter, LOG_FORMAT

ENV_VARS = (
    "FORCING_MAX_LEN_CAP", "FORCING_DEFAULT_MAX_LEN", "FORCING_REALIZE_BOUND",
    "FORCING_NORMAL_FORM_BOUND", "FORCING_DEFAULT_FORMAT", "FORCING_DEFAULT_METHOD", "LOG_LEVEL",
)


def _clear_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)


def test_defaults(monkeypatch):
    _clear_env(monkeypatch)
    app = AppConfig.from_env()
    assert app.limits == LimitsConfig(max_len_cap=14, default_max_len=4, realize_bound=8, normal_form_bound=7)
    assert app.output.default_format == "text"
    assert app.output.default_method == "derive"
    assert app.log_level == "WARNING"
    assert app.validate() == []


def test_global_config_is_valid():
    assert config.validate() == []


def test_env_overrides(monkeypatch):
    _clear_env(monkeypatch)
    monkeypatch.setenv("FORCING_MAX_LEN_CAP", "10")
    monkeypatch.setenv("FORCING_DEFAULT_METHOD", "Construct")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    app = AppConfig.from_env()
    assert app.limits.max_len_cap == 10
    assert app.output.default_method == "construct"
    assert app.log_level == "DEBUG"
    assert app.validate() == []


def test_invalid_env(monkeypatch):
    _clear_env(monkeypatch)
    monkeypatch.setenv("FORCING_DEFAULT_MAX_LEN", "20")
    monkeypatch.setenv("FORCING_DEFAULT_FORMAT", "svg")
    monkeypatch.setenv("LOG_LEVEL", "LOUD")
    errors = AppConfig.from_env().validate()
    assert len(errors) == 3
    assert any("FORCING_DEFAULT_FORMAT" in error for error in errors)


def test_cli_config_validate():
    assert CliConfig(subcommand="hasse", max_len=14).validate(14) == []
    errors = CliConfig(subcommand="hasse", max_len=15, method="guess", format="png").validate(14)
    assert len(errors) == 3
    assert CliConfig(subcommand="publish").validate(14) == ["Sottocomando sconosciuto: publish"]
    assert CliConfig(subcommand="verify", realize_bound=-2).validate(14) != []


def test_color_formatter():
    record = logging.LogRecord("forcing", logging.ERROR, __file__, 1, "❌ errore", None, None)
    plain = ColorFormatter(LOG_FORMAT, use_color=False).format(record)
    assert " - forcing - ERROR - ❌ errore" in plain
    colored = ColorFormatter(LOG_FORMAT, use_color=True).format(record)
    assert "\x1b[" in colored
    assert record.levelname == "ERROR"


if __name__ == "__main__":
    import sys
    print("🧪 Test configurazione\n")
    sys.exit(pytest.main([__file__, "-v"]))
