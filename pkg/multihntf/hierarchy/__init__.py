"""Hierarchical factorization models"""

from multihntf.hierarchy.baselines import (
    hnmf,
    hntf_i,
    independent_ncpd,
    independent_nmf,
    standard_hncpd,
)
from multihntf.hierarchy.matrix_model import matrix_multi_hntf
from multihntf.hierarchy.multi_hntf import fit_w, multi_hntf, shared_objective
from multihntf.hierarchy.multistart import best_of_seeds, trial_seeds
from multihntf.hierarchy.supervised import hnmf_supervised, multi_hntf_supervised

__all__ = [
    "best_of_seeds",
    "fit_w",
    "hnmf",
    "hnmf_supervised",
    "hntf_i",
    "independent_ncpd",
    "independent_nmf",
    "matrix_multi_hntf",
    "multi_hntf",
    "multi_hntf_supervised",
    "shared_objective",
    "standard_hncpd",
    "trial_seeds",
]
