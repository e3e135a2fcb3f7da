"""Supervised NMF: joint factorization of data X and labels Y sharing S

Objective: ||X - A S||_F^2 + lam * ||Y - B S||_F^2
"""

import logging
from typing import Optional, Tuple

import numpy as np

from multihntf.errors import ArgumentError
from multihntf.factorization.common import converged, make_rng, mu_step, random_factor
from multihntf.factorization.nmf import check_matrix, init_nmf, update_a
from multihntf.models import FitOptions, LabelMatrix

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-12


def _label_array(y) -> np.ndarray:
    return y.y if isinstance(y, LabelMatrix) else check_matrix(y, "y")


def joint_objective(x, y, a, b, s, lam: float) -> float:
    rx = x - a @ s
    ry = _label_array(y) - b @ s
    return float(np.vdot(rx, rx) + lam * np.vdot(ry, ry))


def _check_shapes(x, y, a, b, s, lam):
    if lam < 0:
        raise ArgumentError(f"lambda must be >= 0, got {lam}")
    m, n = x.shape
    r = s.shape[0]
    if s.shape != (r, n):
        raise ArgumentError(f"S has shape {s.shape}, expected ({r}, {n})")
    if a.shape != (m, r):
        raise ArgumentError(f"A has shape {a.shape}, expected ({m}, {r})")
    if y.shape[1] != n:
        raise ArgumentError(f"Y has {y.shape[1]} columns but X has {n}")
    if b.shape != (y.shape[0], r):
        raise ArgumentError(f"B has shape {b.shape}, expected ({y.shape[0]}, {r})")


def supervised_nmf_step(
    x, y, a, b, s, lam: float, eps: float = DEFAULT_EPSILON
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One multiplicative step on the joint objective, in the order A, B, S"""
    x = check_matrix(x)
    y = _label_array(y)
    a, b, s = (np.asarray(m, dtype=np.float64) for m in (a, b, s))
    _check_shapes(x, y, a, b, s, lam)

    a = update_a(x, a, s, eps)
    b = update_a(y, b, s, eps)
    numerator = a.T @ x + lam * (b.T @ y)
    denominator = (a.T @ a) @ s + lam * ((b.T @ b) @ s)
    s = mu_step(s, numerator, denominator, eps)
    return a, b, s


def supervised_nmf(x, y, r: int, lam: float = 1.0, opts: FitOptions = FitOptions()):
    """Alternate supervised_nmf_step until the joint objective settles

    A and S are drawn exactly as in nmf and B afterwards, so lam = 0 reproduces
    the unsupervised (A, S) iterates.

    Returns:
        (a, b, s, history)
    """
    x = check_matrix(x)
    y = _label_array(y)
    m, n = x.shape
    if not 1 <= r <= min(m, n):
        raise ArgumentError(f"rank {r} must satisfy 1 <= r <= min(m, n) = {min(m, n)}")
    rng = make_rng(opts.seed)
    a, s = init_nmf(rng, m, n, r)
    b = random_factor(rng, (y.shape[0], r))

    history = []
    prev = None
    for _ in range(opts.max_iters):
        a, b, s = supervised_nmf_step(x, y, a, b, s, lam, opts.epsilon)
        cur = joint_objective(x, y, a, b, s, lam)
        history.append(cur)
        if converged(prev, cur, opts.tol):
            break
        prev = cur

    logger.debug(f"supervised nmf rank={r} lam={lam} iters={len(history)} objective={cur:.6g}")
    return a, b, s, history


def fit_label_dictionary(
    y, s, opts: FitOptions = FitOptions(), b0: Optional[np.ndarray] = None
) -> np.ndarray:
    """B minimizing ||Y - B S||_F^2 over B >= 0 with S held fixed

    Starts from b0 when given (e.g. B^(l) W^(l)), otherwise from a seeded draw.
    """
    y = _label_array(y)
    s = check_matrix(s, "s")
    if y.shape[1] != s.shape[1]:
        raise ArgumentError(f"Y has {y.shape[1]} columns but S has {s.shape[1]}")
    if b0 is None:
        b = random_factor(make_rng(opts.seed), (y.shape[0], s.shape[0]))
    else:
        b = np.array(b0, dtype=np.float64)
        if b.shape != (y.shape[0], s.shape[0]):
            raise ArgumentError(f"initial B has shape {b.shape}")
    gram = s @ s.T
    target = y @ s.T
    prev = None
    for _ in range(opts.max_iters):
        b = mu_step(b, target, b @ gram, opts.epsilon)
        diff = y - b @ s
        cur = float(np.vdot(diff, diff))
        if converged(prev, cur, opts.tol):
            break
        prev = cur
    return b
