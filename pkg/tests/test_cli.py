"""End-to-end tests for the multihntf command line"""

import json

import numpy as np
import pytest

from multihntf.cli import build_parser, main
from multihntf.data import load_tensor, write_matrix

FAST = "[fit]\nmax_iters = 20\n"


def _config(tmp_path, body="", name="run.toml"):
    path = tmp_path / name
    path.write_text(body + FAST, encoding="utf-8")
    return path


@pytest.fixture(autouse=True)
def _no_timings(monkeypatch):
    monkeypatch.setenv("MHNTF_RECORD_TIMINGS", "false")
    monkeypatch.delenv("MHNTF_JOBS", raising=False)


def _labelled_matrix(tmp_path):
    rng = np.random.default_rng(4)
    x = rng.random((12, 9))
    write_matrix(tmp_path / "x.csv", x)
    rows = ["sample_id,class_name"] + [f"s{j},c{j % 3}" for j in range(9)]
    (tmp_path / "y.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def test_parser_lists_commands():
    args = build_parser().parse_args(["export", "chain.json", "--out", "o"])
    assert (args.command, args.chain, args.out) == ("export", "chain.json", "o")


def test_synth_writes_tensor_and_truth(tmp_path):
    assert main(["synth", "--config", str(_config(tmp_path)), "--seed", "3"]) == 0
    out = tmp_path / "out"
    assert load_tensor(out / "tensor.dtf").shape == (40, 40, 40)
    assert (out / "noiseless.dtf").exists()
    assert (out / "truth_rank7_mode1.csv").exists()
    assert (out / "membership_7_to_4.csv").exists()
    assert json.loads((out / "synthetic.json").read_text(encoding="utf-8"))["seed"] == 3


def test_fit_is_reproducible(tmp_path):
    config = str(_config(tmp_path, "ranks = [4, 2]\n"))
    assert main(["fit", "--config", config, "--out", str(tmp_path / "a")]) == 0
    assert main(["fit", "--config", config, "--out", str(tmp_path / "b")]) == 0
    for name in ["chains/multi-hntf_seed0.json", "report.csv", "report.json"]:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_jobs_do_not_change_results(tmp_path):
    config = str(_config(tmp_path, "ranks = [4, 2]\nseeds = [0, 1, 2]\n"))
    assert main(["fit", "--config", config, "--out", str(tmp_path / "one"), "--jobs", "1"]) == 0
    assert main(["fit", "--config", config, "--out", str(tmp_path / "two"), "--jobs", "2"]) == 0
    for seed in range(3):
        name = f"chains/multi-hntf_seed{seed}.json"
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()
    assert (tmp_path / "one" / "report.csv").read_bytes() == (
        tmp_path / "two" / "report.csv"
    ).read_bytes()


def test_compare_table(tmp_path, capsys):
    body = 'methods = ["multi-hntf", "hncpd", "hntf-i"]\nseeds = [0, 1]\n'
    assert main(["compare", "--config", str(_config(tmp_path, body))]) == 0
    table = (tmp_path / "out" / "summary.md").read_text(encoding="utf-8").splitlines()
    assert table[0] == "| method | r=7 | r=4 | r=2 |"
    assert [line.split(" | ")[0] for line in table[2:]] == [
        "| multi-hntf",
        "| hncpd",
        "| hntf-1",
        "| hntf-2",
        "| hntf-3",
    ]
    summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
    assert len(summary) == 15 and all(s["n_seeds"] == 2 for s in summary)
    assert "| multi-hntf |" in capsys.readouterr().out


def test_export_heatmaps(tmp_path):
    config = str(_config(tmp_path, "ranks = [4, 2]\n"))
    assert main(["fit", "--config", config]) == 0
    chain = str(tmp_path / "out" / "chains" / "multi-hntf_seed0.json")
    assert main(["export", chain, "--config", config]) == 0
    export = tmp_path / "out" / "export"
    names = sorted(p.name for p in export.iterdir())
    assert len(names) == 6
    assert "heatmap_layer1_mode3.csv" in names


def test_export_paths_resolve_against_the_config(tmp_path):
    (tmp_path / "vocab.txt").write_text(
        "\n".join(f"w{i}" for i in range(40)) + "\n", encoding="utf-8"
    )
    body = (
        "ranks = [4, 2]\n"
        '[export]\nchain = "out/chains/multi-hntf_seed0.json"\n'
        'word_mode = 1\ntop_k = 3\nvocab = "vocab.txt"\n'
    )
    config = str(_config(tmp_path, body))
    assert main(["fit", "--config", config]) == 0
    assert main(["export", "--config", config]) == 0
    keywords = tmp_path / "out" / "export" / "keywords_layer0.csv"
    lines = keywords.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "topic,position,word,weight"
    assert len(lines) == 1 + 4 * 3


def test_supervised_fit_reports_accuracy(tmp_path):
    _labelled_matrix(tmp_path)
    body = (
        'method = "hnmf"\nranks = [4, 3]\n'
        '[input]\npath = "x.csv"\n[supervision]\nlabels = "y.csv"\nlam = 2.0\n'
    )
    assert main(["fit", "--config", str(_config(tmp_path, body))]) == 0
    rows = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
    assert [r["accuracy_source"] for r in rows] == ["supervised", "supervised"]
    assert all(0.0 <= r["accuracy"] <= 1.0 for r in rows)


def test_unsupported_supervised_method_fails(tmp_path):
    _labelled_matrix(tmp_path)
    body = (
        'method = "ncpd"\nranks = [4, 3]\n'
        '[input]\npath = "x.csv"\n[supervision]\nlabels = "y.csv"\n'
    )
    assert main(["fit", "--config", str(_config(tmp_path, body))]) == 1


def test_config_error_exit_code(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("[fit]\nmax_iters = 0\n", encoding="utf-8")
    assert main(["fit", "--config", str(path)]) == 1


def test_missing_input_exit_code(tmp_path):
    body = '[input]\npath = "absent.dtf"\n'
    assert main(["fit", "--config", str(_config(tmp_path, body))]) == 1


def test_bad_jobs_is_a_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["fit", "--jobs", "0", "--out", str(tmp_path)])
    assert exc.value.code == 2
