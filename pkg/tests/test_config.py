import pytest

from wpcurves.config import Config, ConfigError, load_config, parse_config_text


def test_defaults():
    cfg = Config()
    assert cfg.max_group_order_cap == 10**7
    assert cfg.max_witness_degree == 24
    assert cfg.worker_count >= 1
    assert cfg.output_format == "text"


def test_parse_text():
    text = "# run settings\nmax_group_order_cap = 1_000\noutput_format=json  # inline\n\n"
    assert parse_config_text(text) == {"max_group_order_cap": 1000, "output_format": "json"}


@pytest.mark.parametrize("text", ["colour = red", "max_witness_degree", "worker_count = many"])
def test_bad_text(text):
    with pytest.raises(ConfigError):
        parse_config_text(text)


@pytest.mark.parametrize("kwargs", [{"max_group_order_cap": 0}, {"worker_count": -1}, {"output_format": "xml"}])
def test_invariants(kwargs):
    with pytest.raises(ConfigError):
        Config(**kwargs)


def test_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("worker_count = 3\nmax_witness_degree = 10\n")
    assert load_config(str(path), environ={}).worker_count == 3
    env = {"WPCURVES_WORKERS": "5"}
    cfg = load_config(str(path), environ=env)
    assert (cfg.worker_count, cfg.max_witness_degree) == (5, 10)
    cfg = load_config(str(path), {"worker_count": 7, "max_witness_degree": None}, environ=env)
    assert (cfg.worker_count, cfg.max_witness_degree) == (7, 10)


def test_bad_env():
    with pytest.raises(ConfigError):
        load_config(environ={"WPCURVES_WORKERS": "lots"})
