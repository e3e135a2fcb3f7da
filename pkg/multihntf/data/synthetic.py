"""Synthetic hierarchical block tensor generator"""

import logging

import numpy as np

from multihntf.core.tensor_ops import reconstruct
from multihntf.factorization.common import make_rng
from multihntf.models import DenseTensor, FactorSet
from multihntf.models.synthetic import SyntheticData, SyntheticSpec

logger = logging.getLogger(__name__)


def leaf_factors(spec: SyntheticSpec):
    """Rank-(#leaves) CP factors: column j of mode m is amp^(1/k) on leaf j's range"""
    order = len(spec.shape)
    leaves = spec.levels[0]
    factors = [np.zeros((n, len(leaves))) for n in spec.shape]
    for j, block in enumerate(leaves):
        scale = block.amplitude ** (1.0 / order)
        for mode, (lo, hi) in enumerate(block.ranges):
            factors[mode][lo:hi, j] = scale
    return factors


def add_noise(x: np.ndarray, spec: SyntheticSpec) -> np.ndarray:
    if spec.noise_sigma2 == 0.0:
        return x.copy()
    noise = make_rng(spec.seed).normal(0.0, np.sqrt(spec.noise_sigma2), x.shape)
    if spec.noise_mode == "abs":
        noise = np.abs(noise)
    else:
        noise = np.maximum(noise, 0.0)
    return x + noise


def gen_synthetic(spec: SyntheticSpec = SyntheticSpec()) -> SyntheticData:
    """Build the block tensor; truths[d] are the exact CP factors of level d

    truths[d + 1] == truths[d] @ membership(d) for every mode, and the noiseless
    tensor is exactly [[truths[0]]]. Only the noise depends on spec.seed.
    """
    factors = leaf_factors(spec)
    noiseless = reconstruct(factors)
    truths = [FactorSet(factors=factors)]
    memberships = []
    for depth in range(len(spec.levels) - 1):
        m = spec.membership(depth)
        memberships.append(m)
        truths.append(FactorSet(factors=[f @ m for f in truths[-1].factors]))

    noisy = add_noise(noiseless, spec)
    logger.info(
        f"synthetic tensor {tuple(spec.shape)} ranks {spec.ranks} "
        f"sigma2={spec.noise_sigma2} ({spec.noise_mode}) seed={spec.seed}"
    )
    return SyntheticData(
        tensor=DenseTensor(data=noisy),
        noiseless=DenseTensor(data=noiseless),
        truths=truths,
        memberships=memberships,
    )
