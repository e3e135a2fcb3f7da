"""Tests for the pydantic data models"""

import numpy as np
import pytest
from pydantic import ValidationError

from multihntf.models import (
    DenseTensor,
    FactorSet,
    FitOptions,
    HierarchySpec,
    LabelMatrix,
    MixingMatrix,
)


def test_dense_tensor_from_values_is_row_major():
    """dtf 2 2 2 with 1 0 0 1 is the 2x2 identity"""
    t = DenseTensor.from_values([2, 2], [1, 0, 0, 1])
    assert np.array_equal(t.data, np.eye(2))
    assert t.order == 2
    assert list(t.values) == [1.0, 0.0, 0.0, 1.0]


def test_dense_tensor_is_read_only():
    t = DenseTensor(data=np.ones((2, 3)))
    with pytest.raises(ValueError):
        t.data[0, 0] = 5.0


@pytest.mark.parametrize(
    "data",
    [np.ones(3), np.array([[1.0, -1.0]]), np.array([[1.0, np.nan]]), np.zeros((0, 2))],
)
def test_dense_tensor_rejects_invalid_data(data):
    with pytest.raises(ValidationError):
        DenseTensor(data=data)


def test_dense_tensor_from_values_rejects_wrong_count():
    with pytest.raises(ValueError):
        DenseTensor.from_values([2, 2], [1, 2, 3])


def test_factor_set_requires_shared_rank():
    with pytest.raises(ValidationError):
        FactorSet(factors=[np.ones((3, 2)), np.ones((4, 3))])
    with pytest.raises(ValidationError):
        FactorSet(factors=[np.ones((3, 2))])
    f = FactorSet(factors=[np.ones((3, 2)), np.ones((4, 2)), np.ones((5, 2))])
    assert (f.rank, f.order, f.shape) == (2, 3, (3, 4, 5))


def test_fit_options_defaults_and_bounds():
    opts = FitOptions()
    assert (opts.max_iters, opts.tol, opts.seed) == (500, 1e-6, 0)
    assert opts.with_seed(4).seed == 4
    with pytest.raises(ValidationError):
        FitOptions(max_iters=0)


def test_hierarchy_spec_broadcasts_options():
    spec = HierarchySpec(ranks=[7, 4, 2], options=FitOptions(max_iters=3))
    assert spec.depth == 2
    assert [o.max_iters for o in spec.options] == [3, 3, 3]
    assert spec.with_seed(9).options[2].seed == 9
    assert spec.tail(1).ranks == [4, 2]


@pytest.mark.parametrize("ranks", [[], [4, 4], [2, 3], [3, 0]])
def test_hierarchy_spec_rejects_bad_ranks(ranks):
    with pytest.raises(ValidationError):
        HierarchySpec(ranks=ranks)


def test_hierarchy_spec_rejects_option_count_mismatch():
    with pytest.raises(ValidationError):
        HierarchySpec(ranks=[3, 2, 1], options=[FitOptions(), FitOptions()])


def test_mixing_matrix_must_reduce_rank():
    MixingMatrix(w=np.ones((4, 2)))
    with pytest.raises(ValidationError):
        MixingMatrix(w=np.ones((2, 2)))
    with pytest.raises(ValidationError):
        MixingMatrix(w=-np.ones((4, 2)))


def test_label_matrix_from_classes_first_appearance():
    """An unseen class in row 5 grows the class list"""
    labels = LabelMatrix.from_classes(["b", "a", "b", "a", "c"])
    assert labels.class_names == ["b", "a", "c"]
    assert labels.y.shape == (3, 5)
    assert list(labels.classes) == [0, 1, 0, 1, 2]
    assert labels.y[2, 4] == 1.0


def test_label_matrix_rejects_bad_one_hot():
    with pytest.raises(ValidationError):
        LabelMatrix(y=np.array([[1.0, 1.0], [1.0, 0.0]]), class_names=["a", "b"])
    with pytest.raises(ValidationError):
        LabelMatrix(y=np.eye(2), class_names=["a"])
