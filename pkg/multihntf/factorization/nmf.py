"""Frobenius NMF by Lee-Seung multiplicative updates"""

import logging

import numpy as np

from multihntf.errors import ArgumentError
from multihntf.factorization.common import converged, make_rng, mu_step, random_factor
from multihntf.models import FitOptions, NmfResult

logger = logging.getLogger(__name__)


def check_matrix(x, name: str = "x") -> np.ndarray:
    """Validate a nonnegative finite 2-D array and return it as float64"""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise ArgumentError(f"{name} must be a matrix, got ndim={x.ndim}")
    if not np.all(np.isfinite(x)):
        raise ArgumentError(f"{name} has non-finite entries")
    if np.any(x < 0):
        raise ArgumentError(f"{name} has negative entries")
    return x


def nmf_objective(x: np.ndarray, a: np.ndarray, s: np.ndarray) -> float:
    diff = x - a @ s
    return float(np.vdot(diff, diff))


def init_nmf(rng: np.random.Generator, m: int, n: int, r: int):
    """A then S; S is drawn as n x r and transposed so that NCPD on the same
    matrix starts from identical values"""
    a = random_factor(rng, (m, r))
    s = random_factor(rng, (n, r)).T.copy()
    return a, s


def update_a(x, a, s, eps):
    return mu_step(a, x @ s.T, a @ (s @ s.T), eps)


def update_s(x, a, s, eps):
    return mu_step(s, a.T @ x, (a.T @ a) @ s, eps)


def nmf(x, r: int, opts: FitOptions = FitOptions()) -> NmfResult:
    """Minimize ||X - A S||_F^2 over A, S >= 0

    Args:
        x: nonnegative m x n matrix
        r: inner rank, 1 <= r <= min(m, n)
        opts: iteration controls; opts.seed fixes the initialization

    Returns:
        NmfResult with the squared residual recorded after every iteration
    """
    x = check_matrix(x)
    m, n = x.shape
    if not 1 <= r <= min(m, n):
        raise ArgumentError(f"rank {r} must satisfy 1 <= r <= min(m, n) = {min(m, n)}")

    a, s = init_nmf(make_rng(opts.seed), m, n, r)
    history = []
    prev = None
    for _ in range(opts.max_iters):
        a = update_a(x, a, s, opts.epsilon)
        s = update_s(x, a, s, opts.epsilon)
        cur = nmf_objective(x, a, s)
        history.append(cur)
        if converged(prev, cur, opts.tol):
            break
        prev = cur

    logger.debug(f"nmf rank={r} iters={len(history)} objective={history[-1]:.6g}")
    return NmfResult(a=a, s=s, loss_history=history)
