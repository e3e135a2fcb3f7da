"""Supervised hierarchies for matrix data with a label matrix Y"""

import logging
from typing import List

import numpy as np

from multihntf.errors import ArgumentError
from multihntf.factorization.supervised import fit_label_dictionary, supervised_nmf
from multihntf.hierarchy.common import as_matrix_tensor, chain_layer
from multihntf.hierarchy.multi_hntf import METHOD, fit_w
from multihntf.models import (
    DenseTensor,
    FactorSet,
    HierarchySpec,
    LabelMatrix,
    LayerChain,
    MixingMatrix,
)

logger = logging.getLogger(__name__)


def _check_labels(t: DenseTensor, y: LabelMatrix) -> None:
    if y.n_samples != t.shape[1]:
        raise ArgumentError(f"labels cover {y.n_samples} samples but X has {t.shape[1]} columns")


def multi_hntf_supervised(x, y: LabelMatrix, spec: HierarchySpec) -> LayerChain:
    """Multi-HNTF on X (features x samples) with label supervision of weight spec.lam

    Layer 0 minimizes ||X - A S||^2 + lam ||Y - B S||^2. Each W is fitted on the stacked
    matrix [X; sqrt(lam) Y] with factors ([A; sqrt(lam) B], S^T), after which
    A <- A W, S <- W^T S and B is refitted against the new S starting from B W.
    """
    t = as_matrix_tensor(x, "supervision")
    _check_labels(t, y)
    lam = spec.lam
    root = np.sqrt(lam)
    stacked = DenseTensor(data=np.vstack([t.data, root * y.y]))

    a, b, s, _ = supervised_nmf(t.data, y, spec.ranks[0], lam, spec.options[0])
    factors = FactorSet(factors=[a, s.T])
    dictionaries: List[np.ndarray] = [b]

    layers = []
    for layer in range(spec.depth):
        opts = spec.options[layer + 1]
        a_cur, st_cur = factors.factors
        stacked_factors = FactorSet(factors=[np.vstack([a_cur, root * b]), st_cur])
        mixing = fit_w(stacked, stacked_factors, spec.ranks[layer + 1], opts)
        layers.append(chain_layer(t, factors, spec.ranks[layer], mixing))
        factors = FactorSet(factors=[f @ mixing.w for f in factors.factors])
        b = fit_label_dictionary(y, factors.factors[1].T, opts, b0=b @ mixing.w)
        dictionaries.append(b)
    layers.append(chain_layer(t, factors, spec.ranks[-1]))

    return LayerChain(
        method=METHOD,
        ranks=list(spec.ranks),
        seed=spec.options[0].seed,
        options=list(spec.options),
        layers=layers,
        lam=lam,
        label_dictionaries=dictionaries,
        class_names=list(y.class_names),
    )


def hnmf_supervised(x, y: LabelMatrix, spec: HierarchySpec) -> LayerChain:
    """HNMF where every layer is a supervised NMF against the same labels"""
    t = as_matrix_tensor(x, "supervision")
    _check_labels(t, y)
    lam = spec.lam
    dictionary, b, s, _ = supervised_nmf(t.data, y, spec.ranks[0], lam, spec.options[0])
    dictionaries: List[np.ndarray] = [b]

    layers = []
    for layer in range(spec.depth):
        a_next, b, s_next, history = supervised_nmf(
            s, y, spec.ranks[layer + 1], lam, spec.options[layer + 1]
        )
        mixing = MixingMatrix(w=a_next, loss_history=history)
        record = chain_layer(t, FactorSet(factors=[dictionary, s.T]), spec.ranks[layer], mixing)
        layers.append(record)
        dictionary = record.factors.factors[0] @ mixing.w
        s = s_next
        dictionaries.append(b)
    layers.append(chain_layer(t, FactorSet(factors=[dictionary, s.T]), spec.ranks[-1]))

    return LayerChain(
        method="hnmf",
        ranks=list(spec.ranks),
        seed=spec.options[0].seed,
        options=list(spec.options),
        layers=layers,
        lam=lam,
        label_dictionaries=dictionaries,
        class_names=list(y.class_names),
    )
