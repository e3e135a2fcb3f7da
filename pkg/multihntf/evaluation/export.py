"""Topic keywords and heatmap CSVs from fitted chains"""

import csv
import logging
from pathlib import Path
from typing import List, Sequence

import numpy as np

from multihntf.core.tensor_ops import normalize_columns, zero_columns
from multihntf.data.loader import write_matrix
from multihntf.errors import ArgumentError
from multihntf.models import LayerChain

logger = logging.getLogger(__name__)


def top_keyword_indices(word_factor, m: int) -> List[List[int]]:
    """Indices of the m largest entries of each L1-normalized column, descending

    Equal weights keep the lower index first.
    """
    word_factor = np.asarray(word_factor, dtype=np.float64)
    if word_factor.ndim != 2:
        raise ArgumentError("word factor must be a matrix")
    if m < 1:
        raise ArgumentError(f"keyword count must be >= 1, got {m}")
    n_words = word_factor.shape[0]
    if m > n_words:
        logger.warning(f"Asked for {m} keywords but only {n_words} words exist; using {n_words}")
        m = n_words
    normalized = normalize_columns(word_factor)
    return [
        [int(i) for i in np.argsort(-normalized[:, j], kind="stable")[:m]]
        for j in range(normalized.shape[1])
    ]


def top_keywords(word_factor, vocab: Sequence[str], m: int) -> List[List[str]]:
    word_factor = np.asarray(word_factor, dtype=np.float64)
    if len(vocab) != word_factor.shape[0]:
        raise ArgumentError(
            f"vocabulary has {len(vocab)} words but the factor has {word_factor.shape[0]} rows"
        )
    return [[vocab[i] for i in column] for column in top_keyword_indices(word_factor, m)]


def _check_mode(chain: LayerChain, mode: int) -> None:
    order = chain.layers[0].factors.order
    if not 1 <= mode <= order:
        raise ArgumentError(f"mode {mode} out of range 1..{order}")


def heatmap_export(chain: LayerChain, modes: Sequence[int], out_dir) -> List[Path]:
    """Write heatmap_layer{l}_mode{i}.csv for every layer and every (1-based) mode

    Rows are the mode's entities and columns the layer's topics, each column
    L1-normalized; all-zero columns are written as zeros.
    """
    for mode in modes:
        _check_mode(chain, mode)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for layer, record in enumerate(chain.layers):
        for mode in modes:
            factor = record.factors.factors[mode - 1]
            empty = zero_columns(factor)
            if empty:
                logger.warning(f"layer {layer} mode {mode}: all-zero topic columns {empty}")
            header = [f"topic_{j + 1}" for j in range(factor.shape[1])]
            path = out_dir / f"heatmap_layer{layer}_mode{mode}.csv"
            written.append(write_matrix(path, normalize_columns(factor), header))
    logger.info(f"Wrote {len(written)} heatmap files to {out_dir}")
    return written


def keywords_export(
    chain: LayerChain, word_mode: int, vocab: Sequence[str], m: int, out_dir
) -> List[Path]:
    """keywords_layer{l}.csv with columns topic,position,word,weight"""
    _check_mode(chain, word_mode)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for layer, record in enumerate(chain.layers):
        factor = record.factors.factors[word_mode - 1]
        if len(vocab) != factor.shape[0]:
            raise ArgumentError(
                f"vocabulary has {len(vocab)} words, mode {word_mode} has {factor.shape[0]}"
            )
        normalized = normalize_columns(factor)
        path = out_dir / f"keywords_layer{layer}.csv"
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["topic", "position", "word", "weight"])
            for topic, column in enumerate(top_keyword_indices(factor, m), start=1):
                for position, i in enumerate(column, start=1):
                    weight = repr(float(normalized[i, topic - 1]))
                    writer.writerow([topic, position, vocab[i], weight])
        written.append(path)
    return written
