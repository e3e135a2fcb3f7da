"""Dataset readers, writers and the synthetic tensor generator"""

from multihntf.data.loader import (
    DataLoader,
    load_chain,
    load_labels,
    load_matrix,
    load_tensor,
    load_vocab,
    write_chain,
    write_matrix,
    write_tensor,
)
from multihntf.data.synthetic import gen_synthetic

__all__ = [
    "DataLoader",
    "gen_synthetic",
    "load_chain",
    "load_labels",
    "load_matrix",
    "load_tensor",
    "load_vocab",
    "write_chain",
    "write_matrix",
    "write_tensor",
]
