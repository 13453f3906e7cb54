import pytest

from knot.skein.homfly._config import Settings, load_settings
from knot.skein.homfly.young import CACHE_ENV


@pytest.fixture(autouse=True)
def _no_cache_env(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.to_json() == {
        "bits": 192,
        "threads": 2,
        "max_strands": 8,
        "cache_dir": None,
        "tolerance": 1e-9,
    }


def test_settings_file(tmp_path):
    """Known keys are read, unknown keys are dropped."""
    path = tmp_path / "skein.yml"
    path.write_text(
        "bits: 256\nmax_strands: 6\ntolerance: 1.0e-12\ncolour: blue\n",
        encoding="utf-8",
    )
    settings = load_settings(str(path))
    assert settings.bits == 256
    assert settings.max_strands == 6
    assert settings.tolerance == 1e-12
    assert settings.threads == 2


def test_missing_or_empty_file(tmp_path):
    assert load_settings(str(tmp_path / "missing.yml")) == Settings()
    empty = tmp_path / "empty.yml"
    empty.write_text("", encoding="utf-8")
    assert load_settings(str(empty)) == Settings()


def test_malformed_file(tmp_path):
    path = tmp_path / "list.yml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_settings(str(path))
    path.write_text("bits: many\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_settings(str(path))


def test_precedence(tmp_path, monkeypatch):
    """Defaults < file < environment < explicit overrides."""
    path = tmp_path / "skein.yml"
    path.write_text("cache_dir: /from/file\nthreads: 4\n", encoding="utf-8")
    assert load_settings(str(path)).cache_dir == "/from/file"
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    settings = load_settings(str(path), threads=None, bits=320)
    assert settings.cache_dir == str(tmp_path)
    assert settings.threads == 4
    assert settings.bits == 320
    assert load_settings(str(path), threads=1).threads == 1


def test_validation():
    with pytest.raises(ValueError):
        Settings(bits=64)
    with pytest.raises(ValueError):
        Settings(threads=0)
    with pytest.raises(ValueError):
        Settings(tolerance=2.0)
    with pytest.raises(ValueError):
        load_settings(bits=100)
