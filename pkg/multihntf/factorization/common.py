"""Shared pieces of the multiplicative-update solvers"""

import logging
from typing import Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; every solver draws its initial factors from one of these"""
    return np.random.Generator(np.random.PCG64(seed))


def random_factor(rng: np.random.Generator, shape: Tuple[int, int]) -> np.ndarray:
    """Uniform entries in (0, 1]; zero would be a fixed point of the updates"""
    return 1.0 - rng.random(shape)


def mu_step(current: np.ndarray, numerator: np.ndarray, denominator: np.ndarray, eps: float):
    """current * numerator / (denominator + eps)"""
    return current * numerator / (denominator + eps)


def converged(prev: Optional[float], cur: float, tol: float) -> bool:
    """Relative objective improvement below tol (or nothing left to improve)"""
    if prev is None:
        return False
    if prev <= 0.0:
        return True
    return (prev - cur) / prev < tol
