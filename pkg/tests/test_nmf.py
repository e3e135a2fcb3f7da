"""Tests for multiplicative-update NMF"""

import numpy as np
import pytest

from multihntf.errors import ArgumentError
from multihntf.factorization import fit_ncpd, nmf, nmf_objective
from multihntf.models import DenseTensor, FitOptions


def test_objective_never_increases():
    """Every recorded iterate is no worse than the previous one (100 random matrices)"""
    rng = np.random.default_rng(0)
    opts = FitOptions(max_iters=60, tol=0.0)
    for trial in range(100):
        m, n = int(rng.integers(3, 51)), int(rng.integers(3, 41))
        r = int(rng.integers(2, min(10, min(m, n) - 1) + 1))
        x = rng.random((m, n))
        history = nmf(x, r, opts.with_seed(trial)).loss_history
        assert np.all(np.diff(history) <= 1e-10), (trial, m, n, r)


def test_history_ends_at_returned_factors():
    rng = np.random.default_rng(1)
    x = rng.random((12, 9))
    res = nmf(x, 3, FitOptions(max_iters=40))
    assert res.rank == 3
    assert res.a.shape == (12, 3) and res.s.shape == (3, 9)
    assert res.loss_history[-1] == pytest.approx(nmf_objective(x, res.a, res.s))
    assert np.all(res.a >= 0) and np.all(res.s >= 0)


def test_same_seed_same_result():
    x = np.random.default_rng(2).random((10, 8))
    a = nmf(x, 3, FitOptions(max_iters=25, seed=5))
    b = nmf(x, 3, FitOptions(max_iters=25, seed=5))
    assert np.array_equal(a.a, b.a) and np.array_equal(a.s, b.s)


def test_matches_order_two_ncpd():
    """NMF and order-2 NCPD start from the same draw and take the same steps"""
    x = np.random.default_rng(3).random((9, 11))
    opts = FitOptions(max_iters=50, tol=0.0, seed=4)
    res = nmf(x, 4, opts)
    cp = fit_ncpd(DenseTensor(data=x), 4, opts)
    np.testing.assert_allclose(res.a, cp.factors.factors[0], rtol=1e-8, atol=1e-12)
    np.testing.assert_allclose(res.s.T, cp.factors.factors[1], rtol=1e-8, atol=1e-12)
    np.testing.assert_allclose(res.loss_history, cp.loss_history, rtol=1e-8)


def test_exact_low_rank_matrix_is_recovered():
    rng = np.random.default_rng(4)
    x = rng.random((20, 3)) @ rng.random((3, 15))
    res = nmf(x, 3, FitOptions(max_iters=3000, tol=1e-12))
    assert np.linalg.norm(x - res.a @ res.s) / np.linalg.norm(x) < 0.05


@pytest.mark.parametrize("r", [0, 6, 10])
def test_rank_bounds(r):
    with pytest.raises(ArgumentError):
        nmf(np.ones((5, 9)), r)


def test_rejects_negative_or_non_matrix_input():
    with pytest.raises(ArgumentError):
        nmf(-np.ones((4, 4)), 2)
    with pytest.raises(ArgumentError):
        nmf(np.ones((4, 4, 4)), 2)


def test_rank_one_outer_product():
    rng = np.random.default_rng(6)
    x = np.outer(0.5 + rng.random(8), 0.5 + rng.random(6))
    res = nmf(x, 1, FitOptions(max_iters=2000, tol=0.0))
    assert np.linalg.norm(x - res.a @ res.s) / np.linalg.norm(x) < 1e-4


def test_identity_at_full_rank():
    """r = min(m, n) is allowed; the 2 x 2 identity has an exact nonnegative rank-2 split"""
    x = np.eye(2)
    losses = []
    for seed in range(3):
        res = nmf(x, 2, FitOptions(max_iters=20000, tol=0.0, seed=seed))
        losses.append(np.linalg.norm(x - res.a @ res.s) / np.linalg.norm(x))
    assert min(losses) < 1e-3


def test_zero_row_stays_finite():
    x = np.random.default_rng(7).random((6, 5))
    x[2] = 0.0
    res = nmf(x, 3, FitOptions(max_iters=200, tol=0.0))
    assert np.all(np.isfinite(res.a)) and np.all(np.isfinite(res.s))
    assert np.all(np.isfinite(res.loss_history))


def test_every_iterate_is_nonnegative():
    x = np.random.default_rng(8).random((7, 6))
    for iters in range(1, 21):
        res = nmf(x, 3, FitOptions(max_iters=iters, tol=0.0, seed=1))
        assert res.a.min() >= 0 and res.s.min() >= 0, iters
