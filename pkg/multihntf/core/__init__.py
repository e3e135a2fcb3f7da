"""Dense tensor algebra"""

from multihntf.core.tensor_ops import (
    absolute_loss,
    cp_reconstruct,
    fold,
    frobenius_norm,
    khatri_rao,
    khatri_rao_except,
    normalize_columns,
    permute_modes,
    reconstruct,
    relative_loss,
    squared_residual,
    unfold,
)

__all__ = [
    "absolute_loss",
    "cp_reconstruct",
    "fold",
    "frobenius_norm",
    "khatri_rao",
    "khatri_rao_except",
    "normalize_columns",
    "permute_modes",
    "reconstruct",
    "relative_loss",
    "squared_residual",
    "unfold",
]
