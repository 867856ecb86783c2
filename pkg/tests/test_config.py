import pytest

from ontoclir.config import ENV_VAR, Config, load_config, parse_config


def test_defaults():
    cfg = Config()
    assert cfg.damping == 0.85
    assert cfg.epsilon == 1e-8
    assert cfg.max_iter == 100
    assert cfg.alpha == 0.5


def test_parse_dotted_keys():
    cfg = parse_config(
        "damping = 0.9\n"
        "shortlist.min_expansion_hits = 3  # noisier corpus\n"
        "extraction.top_k = 2\n"
    )
    assert cfg.damping == 0.9
    assert cfg.shortlist_min_expansion_hits == 3
    assert cfg.extraction_top_k == 2


def test_unknown_key_rejected():
    with pytest.raises(ValueError):
        parse_config("mystery = 1\n")


def test_validation():
    with pytest.raises(ValueError):
        parse_config("damping = 1.5\n")


def test_env_var(tmp_path, monkeypatch):
    path = tmp_path / "ontoclir.conf"
    path.write_text("alpha = 1.0\n", encoding="utf-8")
    monkeypatch.setenv(ENV_VAR, str(path))
    assert load_config().alpha == 1.0


def test_no_env_gives_defaults(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert load_config() == Config()
