"""Tests for file readers and writers"""

import numpy as np
import pytest

from multihntf.data import (
    DataLoader,
    load_chain,
    load_labels,
    load_matrix,
    load_tensor,
    load_vocab,
    write_matrix,
    write_tensor,
)
from multihntf.errors import LoadError
from multihntf.models import DenseTensor


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_dtf_identity(tmp_path):
    t = load_tensor(_write(tmp_path / "eye.dtf", "dtf 2 2 2\n1 0\n0 1\n"))
    assert np.array_equal(t.data, np.eye(2))


def test_dtf_values_may_span_lines_freely(tmp_path):
    t = load_tensor(_write(tmp_path / "t.dtf", "dtf 3 2 1 2\n1 2 3\n4\n"))
    assert t.shape == (2, 1, 2)
    assert list(t.values) == [1.0, 2.0, 3.0, 4.0]


def test_coo_duplicates_are_summed(tmp_path):
    text = "coo 3 2 2 2 3\n1 1 1 1.5\n2 2 2 4\n1 1 1 2.5\n"
    t = load_tensor(_write(tmp_path / "t.coo", text))
    assert t.data[0, 0, 0] == 4.0
    assert t.data[1, 1, 1] == 4.0
    assert t.data.sum() == 8.0


@pytest.mark.parametrize(
    "text, line",
    [
        ("dtf 2 2 2\n1 0\n0 -1\n", 3),
        ("dtf 2 2 2\n1 0\n0\n", 3),
        ("dtf 2 2 2\n1 0\n0 1 5\n", 3),
        ("dtf 2 2 x\n1 0 0 1\n", 1),
        ("coo 2 2 2 1\n3 1 1.0\n", 2),
        ("coo 2 2 2 2\n1 1 1.0\n", 2),
        ("csr 2 2 2\n", 1),
    ],
)
def test_tensor_errors_carry_line_numbers(tmp_path, text, line):
    path = _write(tmp_path / "bad.dtf", text)
    with pytest.raises(LoadError) as exc:
        load_tensor(path)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"{path}:{line}:")


def test_missing_file_is_a_load_error(tmp_path):
    with pytest.raises(LoadError):
        load_tensor(tmp_path / "absent.dtf")


def test_csv_matrix_with_header(tmp_path):
    m = load_matrix(_write(tmp_path / "m.csv", "d1,d2,d3\n1,2,3\n4,5,6\n"))
    assert np.array_equal(m, [[1, 2, 3], [4, 5, 6]])
    assert load_tensor(tmp_path / "m.csv").shape == (2, 3)


def test_csv_matrix_ragged_row(tmp_path):
    with pytest.raises(LoadError) as exc:
        load_matrix(_write(tmp_path / "m.csv", "1,2\n3\n"))
    assert exc.value.line == 2


@pytest.mark.parametrize("reader", [load_matrix, load_labels, load_tensor])
def test_non_utf8_bytes_are_a_load_error(tmp_path, reader):
    path = tmp_path / "bad.csv"
    path.write_bytes(b"1,2\n\xff\xfe,3\n")
    with pytest.raises(LoadError) as exc:
        reader(path)
    assert exc.value.line == 2
    assert "UTF-8" in exc.value.message


def test_labels_grow_with_new_classes(tmp_path):
    """A class first seen in row 5 gets the next index and a correct one-hot column"""
    text = "sample_id,class_name\nd1,sports\nd2,politics\nd3,sports\nd4,politics\nd5,science\n"
    labels = load_labels(_write(tmp_path / "labels.csv", text))
    assert labels.class_names == ["sports", "politics", "science"]
    assert labels.sample_ids == ["d1", "d2", "d3", "d4", "d5"]
    assert list(labels.y[:, 4]) == [0.0, 0.0, 1.0]


def test_duplicate_label_is_rejected(tmp_path):
    with pytest.raises(LoadError) as exc:
        load_labels(_write(tmp_path / "labels.csv", "d1,a\nd2,b\nd1,a\n"))
    assert exc.value.line == 3


def test_vocab(tmp_path):
    assert load_vocab(_write(tmp_path / "vocab.txt", "game\nvote\nteam\n")) == [
        "game",
        "vote",
        "team",
    ]


def test_tensor_writers_read_back(tmp_path):
    t = DenseTensor(data=np.random.default_rng(0).random((2, 3, 4)) * (np.arange(4) % 2))
    for fmt in ("dtf", "coo"):
        back = load_tensor(write_tensor(tmp_path / f"t.{fmt}", t, fmt=fmt))
        assert np.array_equal(back.data, t.data)


def test_matrix_writer_keeps_full_precision(tmp_path):
    m = np.array([[1 / 3, 2 / 7], [0.1, 5.0]])
    back = load_matrix(write_matrix(tmp_path / "m.csv", m, header=["a", "b"]))
    assert np.array_equal(back, m)


def test_invalid_chain_json(tmp_path):
    with pytest.raises(LoadError) as exc:
        load_chain(_write(tmp_path / "chain.json", "{\n  \"method\": \n"))
    assert exc.value.line >= 2
    with pytest.raises(LoadError):
        load_chain(_write(tmp_path / "chain2.json", '{"method": "x"}'))


def test_data_loader_resolves_relative_paths(tmp_path):
    _write(tmp_path / "eye.dtf", "dtf 2 2 2\n1 0 0 1\n")
    loader = DataLoader(tmp_path)
    assert loader.resolve("eye.dtf") == tmp_path / "eye.dtf"
    assert loader.load_tensor("eye.dtf").shape == (2, 2)
    _write(tmp_path / "labels.csv", "d1,a\nd2,b\n")
    assert loader.load_labels("labels.csv").n_samples == 2
