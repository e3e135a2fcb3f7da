"""Flat nonnegative factorization solvers"""

from multihntf.factorization.ncpd import fit_ncpd, ncpd
from multihntf.factorization.nmf import nmf, nmf_objective
from multihntf.factorization.supervised import (
    fit_label_dictionary,
    joint_objective,
    supervised_nmf,
    supervised_nmf_step,
)

__all__ = [
    "fit_label_dictionary",
    "fit_ncpd",
    "joint_objective",
    "ncpd",
    "nmf",
    "nmf_objective",
    "supervised_nmf",
    "supervised_nmf_step",
]
