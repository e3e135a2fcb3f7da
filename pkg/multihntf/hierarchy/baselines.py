"""Baseline hierarchies: HNMF, HNTF-i, Standard HNCPD and per-rank flat fits"""

import logging
from typing import List

import numpy as np

from multihntf.core.tensor_ops import permute_modes, reconstruct
from multihntf.errors import ArgumentError
from multihntf.factorization.ncpd import fit_ncpd
from multihntf.factorization.nmf import nmf
from multihntf.hierarchy.common import as_matrix_tensor, as_tensor, chain_layer, warn_large_rank
from multihntf.models import (
    DenseTensor,
    FactorSet,
    HierarchySpec,
    LayerChain,
    LayerRecord,
    MixingMatrix,
)

logger = logging.getLogger(__name__)


def _chain(method: str, spec: HierarchySpec, layers: List[LayerRecord], **extra) -> LayerChain:
    return LayerChain(
        method=method,
        ranks=list(spec.ranks),
        seed=spec.options[0].seed,
        options=list(spec.options),
        layers=layers,
        **extra,
    )


def hnmf(x, spec: HierarchySpec) -> LayerChain:
    """Hierarchical NMF: X ~ A^(0) S^(0), then S^(l) ~ A^(l+1) S^(l+1)

    Layer l stores the cascaded dictionary A^(0)...A^(l) with S^(l), so its losses are
    those of the full product. A^(l+1) is recorded as the layer's mixing matrix.
    """
    t = as_matrix_tensor(x, "hnmf")
    res = nmf(t.data, spec.ranks[0], spec.options[0])
    dictionary, s = res.a, res.s

    layers = []
    for layer in range(spec.depth):
        nxt = nmf(s, spec.ranks[layer + 1], spec.options[layer + 1])
        mixing = MixingMatrix(w=nxt.a, loss_history=nxt.loss_history)
        record = chain_layer(t, FactorSet(factors=[dictionary, s.T]), spec.ranks[layer], mixing)
        layers.append(record)
        dictionary = record.factors.factors[0] @ mixing.w
        s = nxt.s
    layers.append(chain_layer(t, FactorSet(factors=[dictionary, s.T]), spec.ranks[-1]))
    return _chain("hnmf", spec, layers)


def independent_nmf(x, spec: HierarchySpec) -> LayerChain:
    """Unrelated NMF at every rank"""
    t = as_matrix_tensor(x, "nmf")
    layers = []
    for rank, opts in zip(spec.ranks, spec.options):
        res = nmf(t.data, rank, opts)
        layers.append(chain_layer(t, res.as_factor_set(), rank))
    return _chain("nmf", spec, layers)


def independent_ncpd(t, spec: HierarchySpec) -> LayerChain:
    """Unrelated NCPD at every rank (no mixing between layers)"""
    t = as_tensor(t)
    warn_large_rank(t, spec.ranks[0])
    layers = []
    for rank, opts in zip(spec.ranks, spec.options):
        layers.append(chain_layer(t, fit_ncpd(t, rank, opts).factors, rank))
    return _chain("ncpd", spec, layers)


def _lead_order(order: int, lead_mode: int) -> List[int]:
    lead = lead_mode - 1
    return [lead] + [i for i in range(order) if i != lead]


def hntf_i(t, spec: HierarchySpec, lead_mode: int) -> LayerChain:
    """HNTF with mode `lead_mode` (1-based) held as the carried factor

    With the modes reordered so the lead mode is first, each layer decomposes
    Y^(l) = [[I, X_2^(l), ..., X_k^(l)]] as [[W, Z_2, ..., Z_k]] and continues with
    X_1^(l+1) = X_1^(l) W, X_j^(l+1) = Z_j. Factors are returned in the original mode
    order; each layer's mixing matrix is the W applied to the lead mode only.
    """
    t = as_tensor(t)
    if not 1 <= lead_mode <= t.order:
        raise ArgumentError(f"lead mode {lead_mode} out of range 1..{t.order}")
    order = _lead_order(t.order, lead_mode)
    inverse = [order.index(m) for m in range(t.order)]
    permuted = permute_modes(t, order)
    warn_large_rank(permuted, spec.ranks[0])

    def restore(factors: List[np.ndarray]) -> FactorSet:
        return FactorSet(factors=[factors[j] for j in inverse])

    factors = list(fit_ncpd(permuted, spec.ranks[0], spec.options[0]).factors.factors)
    layers = []
    for layer in range(spec.depth):
        core = [np.eye(spec.ranks[layer])] + factors[1:]
        carried = DenseTensor(data=reconstruct(core))
        sub = fit_ncpd(carried, spec.ranks[layer + 1], spec.options[layer + 1])
        mixing = MixingMatrix(w=sub.factors.factors[0], loss_history=sub.loss_history)
        layers.append(chain_layer(t, restore(factors), spec.ranks[layer], mixing))
        factors = [factors[0] @ mixing.w] + list(sub.factors.factors[1:])
    layers.append(chain_layer(t, restore(factors), spec.ranks[-1]))
    return _chain(f"hntf-{lead_mode}", spec, layers, lead_mode=lead_mode)


def standard_hncpd(t, spec: HierarchySpec) -> LayerChain:
    """NCPD at r_0 followed by an independent HNMF of every factor matrix

    Mode i's factor X_i^(0) (n_i x r_0) is factored with ranks r_1 > ... > r_L; the
    depth-l product D_i^(l) S_i^(l) replaces X_i^(0) in the layer-l reconstruction.
    The per-mode HNMF chains are kept in `mode_chains`.
    """
    t = as_tensor(t)
    warn_large_rank(t, spec.ranks[0])
    base = fit_ncpd(t, spec.ranks[0], spec.options[0]).factors
    layers = [chain_layer(t, base, spec.ranks[0])]
    if spec.depth == 0:
        return _chain("hncpd", spec, layers)

    sub_spec = spec.tail(1)
    mode_chains = [hnmf(DenseTensor(data=x), sub_spec) for x in base.factors]
    for layer in range(spec.depth):
        effective = [
            reconstruct(chain.layers[layer].factors.factors) for chain in mode_chains
        ]
        layers.append(chain_layer(t, FactorSet(factors=effective), spec.ranks[layer + 1]))
    return _chain("hncpd", spec, layers, mode_chains=mode_chains)
