"""Tests for the synthetic hierarchical block tensor"""

import numpy as np
import pytest
from pydantic import ValidationError

from multihntf.core import cp_reconstruct, relative_loss
from multihntf.data import gen_synthetic
from multihntf.factorization import ncpd
from multihntf.models import Block, FitOptions, SyntheticSpec


def test_default_spec():
    spec = SyntheticSpec()
    assert spec.shape == [40, 40, 40]
    assert spec.ranks == [7, 4, 2]
    assert spec.noise_sigma2 == 0.1


def test_noiseless_tensor_is_rank_seven_truth():
    data = gen_synthetic(SyntheticSpec(noise_sigma2=0.0))
    assert [truth.rank for truth in data.truths] == [7, 4, 2]
    assert relative_loss(data.tensor, cp_reconstruct(data.truths[0])) <= 1e-12
    assert np.array_equal(data.tensor.data, data.noiseless.data)


def test_group_truths_sum_member_blocks():
    """rank-4 == rank-7 @ M(7->4) and rank-2 == rank-4 @ M(4->2) in every mode"""
    data = gen_synthetic(SyntheticSpec(noise_sigma2=0.0))
    for depth, membership in enumerate(data.memberships):
        assert np.all(membership.sum(axis=1) == 1.0)
        for fine, coarse in zip(data.truths[depth].factors, data.truths[depth + 1].factors):
            assert np.array_equal(fine @ membership, coarse)


def test_noise_is_reproducible_per_seed():
    a = gen_synthetic(SyntheticSpec(seed=3))
    b = gen_synthetic(SyntheticSpec(seed=3))
    c = gen_synthetic(SyntheticSpec(seed=4))
    assert np.array_equal(a.tensor.data, b.tensor.data)
    assert not np.array_equal(a.tensor.data, c.tensor.data)
    assert np.array_equal(a.noiseless.data, c.noiseless.data)
    loss = relative_loss(a.noiseless, a.tensor)
    assert 0.0 < loss < 1.0


@pytest.mark.parametrize("mode", ["clip", "abs"])
def test_noise_is_nonnegative(mode):
    data = gen_synthetic(SyntheticSpec(noise_sigma2=0.4, noise_mode=mode))
    assert np.all(data.tensor.data >= data.noiseless.data)


def test_block_outside_its_parent_is_rejected():
    levels = [
        [Block(ranges=[(0, 3), (0, 3)], parent=0), Block(ranges=[(2, 6), (2, 6)], parent=0)],
        [Block(ranges=[(0, 5), (0, 6)])],
    ]
    with pytest.raises(ValidationError):
        SyntheticSpec(shape=[6, 6], levels=levels)


def test_group_without_members_is_rejected():
    levels = [
        [Block(ranges=[(0, 3), (0, 3)], parent=0)],
        [Block(ranges=[(0, 3), (0, 3)]), Block(ranges=[(3, 6), (3, 6)])],
    ]
    with pytest.raises(ValidationError):
        SyntheticSpec(shape=[6, 6], levels=levels)


def test_block_outside_shape_is_rejected():
    with pytest.raises(ValidationError):
        SyntheticSpec(shape=[30, 30, 30])


@pytest.mark.slow
def test_ncpd_recovers_noiseless_tensor():
    """Rank-7 NCPD of the noiseless tensor fits within 0.05 for the best of 5 seeds"""
    data = gen_synthetic(SyntheticSpec(noise_sigma2=0.0))
    losses = []
    for seed in range(5):
        f = ncpd(data.tensor, 7, FitOptions(max_iters=2000, tol=1e-9, seed=seed))
        losses.append(relative_loss(data.tensor, cp_reconstruct(f)))
    assert min(losses) < 0.05
