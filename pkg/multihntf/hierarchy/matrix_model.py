"""Matrix form of Multi-HNTF written directly in terms of A, S and W

    A^(l+1) = A^(l) W^(l),   S^(l+1) = (W^(l))^T S^(l)

Used as an independent implementation of the order-2 case of multi_hntf.
"""

import logging

import numpy as np

from multihntf.errors import ArgumentError
from multihntf.factorization.common import converged, make_rng, random_factor
from multihntf.factorization.nmf import nmf
from multihntf.hierarchy.common import as_matrix_tensor, chain_layer, mixing_step
from multihntf.models import FactorSet, FitOptions, HierarchySpec, LayerChain, MixingMatrix

logger = logging.getLogger(__name__)


def matrix_objective(x: np.ndarray, a: np.ndarray, s: np.ndarray, w: np.ndarray) -> float:
    """||X - (A W)(W^T S)||_F^2"""
    diff = x - (a @ w) @ (s.T @ w).T
    return float(np.vdot(diff, diff))


def _dictionary_side(x, a, s, w):
    # W appears through A W; S side fixed at W^T S
    k = s.T @ w
    return a.T @ (x @ k), (a.T @ a) @ w @ (k.T @ k)


def _coefficient_side(x, a, s, w):
    # W appears through W^T S; A side fixed at A W
    k = a @ w
    return s @ (x.T @ k), (s @ s.T) @ w @ (k.T @ k)


def fit_matrix_w(
    x: np.ndarray, a: np.ndarray, s: np.ndarray, r_next: int, opts: FitOptions = FitOptions()
) -> MixingMatrix:
    """Mixing matrix for X ~ A W W^T S, same averaging and damping scheme as fit_w"""
    r = a.shape[1]
    if not 1 <= r_next < r:
        raise ArgumentError(f"next rank {r_next} must satisfy 1 <= r_next < {r}")
    w = random_factor(make_rng(opts.seed), (r, r_next))

    def objective(candidate):
        return matrix_objective(x, a, s, candidate)

    current = objective(w)
    history = [current]
    for _ in range(opts.max_iters):
        terms = [_dictionary_side(x, a, s, w), _coefficient_side(x, a, s, w)]
        accepted, value = mixing_step(w, current, terms, objective, opts.epsilon)
        if accepted is None:
            break
        history.append(value)
        done = converged(current, value, opts.tol)
        w, current = accepted, value
        if done:
            break
    return MixingMatrix(w=w, loss_history=history)


def matrix_multi_hntf(x, spec: HierarchySpec) -> LayerChain:
    """Multi-HNTF on a matrix, propagating (A, S) through W at each layer"""
    t = as_matrix_tensor(x, "matrix_multi_hntf")
    res = nmf(t.data, spec.ranks[0], spec.options[0])
    a, s = res.a, res.s

    layers = []
    for layer in range(spec.depth):
        mixing = fit_matrix_w(t.data, a, s, spec.ranks[layer + 1], spec.options[layer + 1])
        layers.append(chain_layer(t, FactorSet(factors=[a, s.T]), spec.ranks[layer], mixing))
        a = a @ mixing.w
        s = mixing.w.T @ s
    layers.append(chain_layer(t, FactorSet(factors=[a, s.T]), spec.ranks[-1]))

    return LayerChain(
        method="multi-hntf-matrix",
        ranks=list(spec.ranks),
        seed=spec.options[0].seed,
        options=list(spec.options),
        layers=layers,
    )
