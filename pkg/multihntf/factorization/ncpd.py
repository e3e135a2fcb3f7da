"""Nonnegative CP decomposition by multiplicative updates"""

import logging
from typing import List

import numpy as np

from multihntf.core.tensor_ops import khatri_rao_except, squared_residual, unfold
from multihntf.errors import ArgumentError
from multihntf.factorization.common import converged, make_rng, mu_step, random_factor
from multihntf.models import DenseTensor, FactorSet, FitOptions, NcpdResult

logger = logging.getLogger(__name__)


def init_factors(rng: np.random.Generator, shape, r: int) -> List[np.ndarray]:
    return [random_factor(rng, (n, r)) for n in shape]


def update_factor(
    unfolded: np.ndarray, factors: List[np.ndarray], mode: int, eps: float
) -> np.ndarray:
    """X_i <- X_i * (T_(i) K_i) / (X_i (K_i^T K_i) + eps)"""
    k = khatri_rao_except(factors, mode)
    x_i = factors[mode]
    return mu_step(x_i, unfolded @ k, x_i @ (k.T @ k), eps)


def fit_ncpd(t: DenseTensor, r: int, opts: FitOptions = FitOptions()) -> NcpdResult:
    """Rank-r NCPD of t with the objective recorded after every sweep over modes"""
    if r < 1:
        raise ArgumentError(f"rank must be >= 1, got {r}")
    unfolded = [unfold(t, i) for i in range(t.order)]
    factors = init_factors(make_rng(opts.seed), t.shape, r)

    history = []
    prev = None
    for _ in range(opts.max_iters):
        for mode in range(t.order):
            factors[mode] = update_factor(unfolded[mode], factors, mode, opts.epsilon)
        cur = squared_residual(t.data, factors)
        history.append(cur)
        if converged(prev, cur, opts.tol):
            break
        prev = cur

    logger.debug(f"ncpd rank={r} shape={t.shape} iters={len(history)} objective={history[-1]:.6g}")
    return NcpdResult(factors=FactorSet(factors=factors), loss_history=history)


def ncpd(t: DenseTensor, r: int, opts: FitOptions = FitOptions()) -> FactorSet:
    """t ~ [[X_1, ..., X_k]] with nonnegative rank-r factors"""
    return fit_ncpd(t, r, opts).factors
