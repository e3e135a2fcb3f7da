"""Classification metrics for label-supervised chains"""

import logging
from typing import List, Tuple

import numpy as np

from multihntf.errors import ArgumentError, UnsupportedFeatureError
from multihntf.factorization.supervised import fit_label_dictionary
from multihntf.models import FitOptions, LabelMatrix, LayerChain

logger = logging.getLogger(__name__)


def classify(b, s) -> np.ndarray:
    """Predicted class per sample: argmax over the rows of B S (lowest index on ties)"""
    b = np.asarray(b, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    if b.ndim != 2 or s.ndim != 2:
        raise ArgumentError("B and S must both be matrices")
    if b.shape[1] != s.shape[0]:
        raise ArgumentError(f"B has {b.shape[1]} columns but S has {s.shape[0]} rows")
    return np.argmax(b @ s, axis=0)


def accuracy(pred, truth) -> float:
    """Fraction of samples whose predicted class equals the true one"""
    if isinstance(truth, LabelMatrix):
        truth = truth.classes
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.ndim != 1 or pred.shape != truth.shape:
        raise ArgumentError(f"prediction shape {pred.shape} does not match truth {truth.shape}")
    if pred.size == 0:
        raise ArgumentError("accuracy of an empty prediction")
    return float(np.mean(pred == truth))


def label_accuracy_rows(
    chain: LayerChain, labels: LabelMatrix, opts: FitOptions = FitOptions()
) -> List[Tuple[float, str]]:
    """(accuracy, source) for every layer of an order-2 chain

    Supervised chains use their own label dictionaries; for unsupervised chains a
    dictionary is fitted post hoc to each layer's S with S held fixed.
    """
    accuracies = []
    for layer, record in enumerate(chain.layers):
        if record.factors.order != 2:
            raise UnsupportedFeatureError("accuracy needs a chain fitted to a matrix")
        s = record.factors.factors[1].T
        if s.shape[1] != labels.n_samples:
            raise ArgumentError(f"labels cover {labels.n_samples} samples, S has {s.shape[1]}")
        if chain.supervised:
            b, source = chain.label_dictionaries[layer], "supervised"
        else:
            b, source = fit_label_dictionary(labels, s, opts), "posthoc"
        value = accuracy(classify(b, s), labels)
        logger.debug(f"{chain.method} layer {layer}: accuracy {value:.4f} ({source})")
        accuracies.append((value, source))
    return accuracies
