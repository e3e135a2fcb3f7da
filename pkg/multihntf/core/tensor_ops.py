"""Dense tensor algebra: unfolding, Khatri-Rao products, CP reconstruction, losses

Modes are 0-based in this module. The unfolding of mode i lists the remaining
modes with the first remaining mode varying fastest, which pairs with the
Khatri-Rao product of the remaining factors taken in reverse mode order:

    unfold(cp_reconstruct(F), i) == F[i] @ khatri_rao(reversed others).T
"""

from typing import List, Sequence, Union

import numpy as np

from multihntf.errors import ArgumentError
from multihntf.models.tensor import DenseTensor, FactorSet

ArrayLike = Union[DenseTensor, np.ndarray]


def _array(t: ArrayLike) -> np.ndarray:
    return t.data if isinstance(t, DenseTensor) else np.asarray(t, dtype=np.float64)


def unfold(t: ArrayLike, mode: int) -> np.ndarray:
    """Mode-`mode` matricization, shape n_mode x prod(other dims)"""
    x = _array(t)
    if not 0 <= mode < x.ndim:
        raise ArgumentError(f"mode {mode} out of range for order-{x.ndim} tensor")
    return np.reshape(np.moveaxis(x, mode, 0), (x.shape[mode], -1), order="F")


def fold(m: np.ndarray, mode: int, shape: Sequence[int]) -> np.ndarray:
    """Inverse of unfold"""
    shape = tuple(shape)
    if not 0 <= mode < len(shape):
        raise ArgumentError(f"mode {mode} out of range for order-{len(shape)} tensor")
    moved = (shape[mode],) + shape[:mode] + shape[mode + 1:]
    if m.shape != (shape[mode], int(np.prod(moved[1:]))):
        raise ArgumentError(f"matrix of shape {m.shape} cannot fold into {shape} along {mode}")
    return np.moveaxis(np.reshape(m, moved, order="F"), 0, mode)


def khatri_rao(ms: Sequence[np.ndarray]) -> np.ndarray:
    """Column-wise Kronecker product; the last matrix's row index varies fastest"""
    if len(ms) == 0:
        raise ArgumentError("khatri_rao needs at least one matrix")
    ranks = {m.shape[1] for m in ms}
    if len(ranks) != 1:
        raise ArgumentError(f"khatri_rao inputs disagree on column count: {sorted(ranks)}")
    r = ranks.pop()
    out = np.asarray(ms[0], dtype=np.float64)
    for m in ms[1:]:
        out = (out[:, None, :] * m[None, :, :]).reshape(-1, r)
    return out


def khatri_rao_except(factors: Sequence[np.ndarray], mode: int) -> np.ndarray:
    """Reverse-order Khatri-Rao of every factor but `mode`, matching unfold(., mode)"""
    others = [f for i, f in enumerate(factors) if i != mode]
    return khatri_rao(others[::-1])


def reconstruct(factors: Sequence[np.ndarray]) -> np.ndarray:
    """[[X_1, ..., X_k]] as a dense ndarray"""
    shape = tuple(f.shape[0] for f in factors)
    return fold(factors[0] @ khatri_rao_except(factors, 0).T, 0, shape)


def cp_reconstruct(f: FactorSet) -> DenseTensor:
    """Sum over columns j of the outer products of column j of every factor"""
    # clip guards the -0.0 / tiny negative rounding of a nonnegative sum
    return DenseTensor(data=np.maximum(reconstruct(f.factors), 0.0))


def frobenius_norm(t: ArrayLike) -> float:
    return float(np.linalg.norm(_array(t).ravel()))


def absolute_loss(x: ArrayLike, xhat: ArrayLike) -> float:
    """||x - xhat||_F"""
    a, b = _array(x), _array(xhat)
    if a.shape != b.shape:
        raise ArgumentError(f"shape mismatch: {a.shape} vs {b.shape}")
    return frobenius_norm(a - b)


def relative_loss(x: ArrayLike, xhat: ArrayLike) -> float:
    """||x - xhat||_F / ||x||_F"""
    norm = frobenius_norm(x)
    if norm == 0.0:
        raise ArgumentError("relative loss is undefined for a zero-norm tensor")
    return absolute_loss(x, xhat) / norm


def squared_residual(x: np.ndarray, factors: Sequence[np.ndarray]) -> float:
    """||x - [[factors]]||_F^2, the objective tracked by every solver"""
    diff = x - reconstruct(factors)
    return float(np.vdot(diff, diff))


def permute_modes(t: DenseTensor, order: Sequence[int]) -> DenseTensor:
    """Tensor with axes reordered so that new mode j is old mode order[j]"""
    if sorted(order) != list(range(t.order)):
        raise ArgumentError(f"{list(order)} is not a permutation of the {t.order} modes")
    return DenseTensor(data=np.transpose(t.data, tuple(order)))


def normalize_columns(m: np.ndarray) -> np.ndarray:
    """L1-normalize each column; all-zero columns stay zero"""
    m = np.asarray(m, dtype=np.float64)
    sums = m.sum(axis=0)
    safe = np.where(sums > 0, sums, 1.0)
    return m / safe


def zero_columns(m: np.ndarray) -> List[int]:
    return [int(j) for j in np.flatnonzero(np.asarray(m).sum(axis=0) <= 0)]
