"""Multi-HNTF: one mixing matrix W per layer, shared by every mode

    X ~ [[X_1 W, X_2 W, ..., X_k W]]

Layer 0 is a rank-r_0 NCPD; each further layer multiplies every factor by the W
fitted for it.
"""

import logging
from typing import List, Tuple

import numpy as np

from multihntf.core.tensor_ops import khatri_rao_except, squared_residual, unfold
from multihntf.errors import ArgumentError
from multihntf.factorization.common import converged, make_rng, random_factor
from multihntf.factorization.ncpd import fit_ncpd
from multihntf.hierarchy.common import as_tensor, chain_layer, mixing_step, warn_large_rank
from multihntf.models import (
    DenseTensor,
    FactorSet,
    FitOptions,
    HierarchySpec,
    LayerChain,
    MixingMatrix,
)

logger = logging.getLogger(__name__)

METHOD = "multi-hntf"


def shared_objective(x: np.ndarray, factors: List[np.ndarray], w: np.ndarray) -> float:
    """||X - [[X_1 W, ..., X_k W]]||_F^2"""
    return squared_residual(x, [f @ w for f in factors])


def mode_terms(
    unfolded: np.ndarray, factors: List[np.ndarray], w: np.ndarray, mode: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Multiplicative-update numerator and denominator for W through mode `mode` only"""
    mixed = [f @ w for f in factors]
    k = khatri_rao_except(mixed, mode)
    x_i = factors[mode]
    numerator = x_i.T @ (unfolded @ k)
    denominator = (x_i.T @ x_i) @ w @ (k.T @ k)
    return numerator, denominator


def fit_w(
    t: DenseTensor, f: FactorSet, r_next: int, opts: FitOptions = FitOptions()
) -> MixingMatrix:
    """Approximately minimize the shared-W objective over W >= 0 (r_l x r_next)

    Each iteration forms one multiplicative candidate per mode and keeps their mean,
    falling back to the best single candidate when the mean raises the objective. When
    neither improves, a backtracking step along the summed multiplicative update is
    taken. The recorded history (initial value first) is therefore non-increasing.
    """
    t = as_tensor(t)
    if f.order != t.order or f.shape != t.shape:
        raise ArgumentError(f"factor shapes {f.shape} do not match tensor shape {t.shape}")
    if not 1 <= r_next < f.rank:
        raise ArgumentError(f"next rank {r_next} must satisfy 1 <= r_next < {f.rank}")

    factors = list(f.factors)
    unfolded = [unfold(t, i) for i in range(t.order)]
    w = random_factor(make_rng(opts.seed), (f.rank, r_next))

    def objective(candidate: np.ndarray) -> float:
        return shared_objective(t.data, factors, candidate)

    current = objective(w)
    history = [current]
    for _ in range(opts.max_iters):
        terms = [mode_terms(unfolded[i], factors, w, i) for i in range(t.order)]
        accepted, value = mixing_step(w, current, terms, objective, opts.epsilon)
        if accepted is None:
            logger.debug(f"fit_w stationary after {len(history) - 1} iterations at {current:.6g}")
            break
        history.append(value)
        done = converged(current, value, opts.tol)
        w, current = accepted, value
        if done:
            break

    return MixingMatrix(w=w, loss_history=history)


def multi_hntf(t, spec: HierarchySpec) -> LayerChain:
    """Fit a Multi-HNTF chain at ranks spec.ranks

    Args:
        t: order-k nonnegative tensor (DenseTensor or array)
        spec: ranks r_0 > ... > r_L and per-layer options

    Returns:
        LayerChain whose layer l + 1 factors are exactly layer l factors times W^(l)
    """
    t = as_tensor(t)
    warn_large_rank(t, spec.ranks[0])
    factors = fit_ncpd(t, spec.ranks[0], spec.options[0]).factors

    layers = []
    for layer in range(spec.depth):
        mixing = fit_w(t, factors, spec.ranks[layer + 1], spec.options[layer + 1])
        record = chain_layer(t, factors, spec.ranks[layer], mixing)
        layers.append(record)
        logger.info(
            f"{METHOD} layer {layer} rank {spec.ranks[layer]}: relative loss "
            f"{record.relative_loss:.4f}"
        )
        factors = FactorSet(factors=[x @ mixing.w for x in factors.factors])
    layers.append(chain_layer(t, factors, spec.ranks[-1]))
    logger.info(
        f"{METHOD} final rank {spec.ranks[-1]}: relative loss {layers[-1].relative_loss:.4f}"
    )

    return LayerChain(
        method=METHOD,
        ranks=list(spec.ranks),
        seed=spec.options[0].seed,
        options=list(spec.options),
        layers=layers,
    )
