"""Tests for run configuration files"""

import pytest

from multihntf.errors import ConfigError
from multihntf.models import RunConfig


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults():
    config = RunConfig()
    assert config.ranks == [7, 4, 2]
    assert config.seeds == [0]
    assert config.input is None
    assert config.synthetic.noise_sigma2 == 0.1
    assert config.hierarchy_spec(5).options[0].seed == 5


def test_toml_config(tmp_path):
    path = _write(
        tmp_path / "run.toml",
        """
version = 1
method = "hncpd"
ranks = [6, 3]
seeds = [0, 1, 2]
output_dir = "results"

[fit]
max_iters = 50

[synthetic]
noise_sigma2 = 0.4
""",
    )
    config = RunConfig.from_file(path)
    assert config.method == "hncpd"
    assert config.fit.max_iters == 50
    assert config.synthetic.to_spec().noise_sigma2 == 0.4
    assert config.out_dir == tmp_path / "results"


def test_json_config_and_relative_paths(tmp_path):
    path = _write(
        tmp_path / "run.json",
        '{"method": "nmf", "ranks": [3, 2], "input": {"path": "x.csv"},'
        ' "supervision": {"labels": "y.csv", "lam": 2.0}}',
    )
    config = RunConfig.from_file(path)
    assert config.resolve(config.input.path) == tmp_path / "x.csv"
    assert config.hierarchy_spec(0).lam == 2.0


def test_errors_name_the_field(tmp_path):
    path = _write(tmp_path / "run.toml", "[fit]\nmax_iters = 0\n")
    with pytest.raises(ConfigError) as exc:
        RunConfig.from_file(path)
    assert "fit.max_iters" in str(exc.value)


@pytest.mark.parametrize(
    "text",
    [
        "version = 2\n",
        'method = "lda"\n',
        "ranks = [2, 4]\n",
        "seeds = []\n",
        "colour = 1\n",
        'method = "hnmf"\n',
        '[supervision]\nlabels = "y.csv"\n',
        "ranks = [\n",
    ],
)
def test_invalid_configs(tmp_path, text):
    with pytest.raises(ConfigError):
        RunConfig.from_file(_write(tmp_path / "run.toml", text))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig.from_file(tmp_path / "absent.toml")


def test_overrides(tmp_path):
    config = RunConfig.from_file(_write(tmp_path / "run.toml", "seeds = [1, 2]\n"))
    changed = config.with_overrides(seed=7, out=str(tmp_path / "elsewhere"))
    assert changed.seeds == [7]
    assert changed.out_dir == tmp_path / "elsewhere"
    assert changed.base_dir == tmp_path
    assert config.seeds == [1, 2]


def test_bad_synthetic_shape_is_a_config_error():
    config = RunConfig.model_validate({"synthetic": {"shape": [20, 20, 20]}})
    with pytest.raises(ConfigError):
        config.synthetic.to_spec()
