"""Helpers shared by the hierarchical models"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from multihntf.core.tensor_ops import absolute_loss, reconstruct, relative_loss
from multihntf.errors import ArgumentError, UnsupportedFeatureError
from multihntf.factorization.common import mu_step
from multihntf.models import DenseTensor, FactorSet, LayerRecord, MixingMatrix

logger = logging.getLogger(__name__)

# An averaged W is kept if it raises the objective by no more than this
ACCEPT_SLACK = 1e-12
# Backtracking limit for the damped W step
MAX_HALVINGS = 40


def as_tensor(x) -> DenseTensor:
    if isinstance(x, DenseTensor):
        return x
    try:
        return DenseTensor(data=x)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from exc


def as_matrix_tensor(x, what: str) -> DenseTensor:
    """Order-2 input for the matrix-only models"""
    t = as_tensor(x)
    if t.order != 2:
        raise UnsupportedFeatureError(f"{what} needs an order-2 input, got order {t.order}")
    return t


def chain_layer(
    t: DenseTensor, factors: FactorSet, rank: int, mixing: Optional[MixingMatrix] = None
) -> LayerRecord:
    """Layer record with losses of [[factors]] against t"""
    xhat = reconstruct(factors.factors)
    return LayerRecord(
        rank=rank,
        factors=factors,
        mixing=mixing,
        relative_loss=relative_loss(t, xhat),
        absolute_loss=absolute_loss(t, xhat),
    )


def warn_large_rank(t: DenseTensor, r0: int) -> None:
    if r0 > min(t.shape):
        logger.warning(f"r_0={r0} exceeds the smallest mode size {min(t.shape)} of {t.shape}")


def select_candidate(
    current: float,
    candidates: Sequence[np.ndarray],
    objective: Callable[[np.ndarray], float],
) -> Tuple[Optional[np.ndarray], float]:
    """Averaging scheme for the per-mode W updates

    Take the mean of the candidates when it does not raise the objective, otherwise the
    best single candidate; (None, current) when neither improves.
    """
    mean = np.mean(np.stack(candidates), axis=0)
    mean_obj = objective(mean)
    if mean_obj <= current + ACCEPT_SLACK:
        return mean, mean_obj
    scores: List[float] = [objective(c) for c in candidates]
    best = int(np.argmin(scores))
    if scores[best] <= current:
        return candidates[best], scores[best]
    return None, current


def damped_step(
    w: np.ndarray,
    target: np.ndarray,
    current: float,
    objective: Callable[[np.ndarray], float],
) -> Tuple[Optional[np.ndarray], float]:
    """Backtrack along w + step * (target - w), halving step from 1 until the objective drops

    Convex combinations of nonnegative matrices stay nonnegative. (None, current) when
    MAX_HALVINGS halvings give no decrease.
    """
    direction = target - w
    step = 1.0
    for _ in range(MAX_HALVINGS + 1):
        trial = w + step * direction
        value = objective(trial)
        if value < current:
            return trial, value
        step *= 0.5
    return None, current


def mixing_step(
    w: np.ndarray,
    current: float,
    terms: Sequence[Tuple[np.ndarray, np.ndarray]],
    objective: Callable[[np.ndarray], float],
    eps: float,
) -> Tuple[Optional[np.ndarray], float]:
    """One W iteration from per-mode (numerator, denominator) pairs

    The per-mode multiplicative candidates go through select_candidate first. When
    neither their mean nor any single one improves, the step is damped along the
    multiplicative update built from the summed terms; the gradient of the shared
    objective is 2 * (sum of denominators - sum of numerators).
    """
    candidates = [mu_step(w, num, den, eps) for num, den in terms]
    accepted, value = select_candidate(current, candidates, objective)
    if accepted is not None:
        return accepted, value
    numerator = sum(num for num, _ in terms)
    denominator = sum(den for _, den in terms)
    return damped_step(w, mu_step(w, numerator, denominator, eps), current, objective)
