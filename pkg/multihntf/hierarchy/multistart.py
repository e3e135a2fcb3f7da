"""Multi-start selection over seeds"""

import logging
from typing import Callable, Iterable, List

from multihntf.errors import ArgumentError
from multihntf.models import LayerChain

logger = logging.getLogger(__name__)


def trial_seeds(base_seed: int, starts: int) -> List[int]:
    """Seeds tried for one reported run: base * starts + t for t < starts"""
    if starts < 1:
        raise ArgumentError(f"multi-start count must be >= 1, got {starts}")
    return [base_seed * starts + t for t in range(starts)]


def best_of_seeds(fit: Callable[[int], LayerChain], seeds: Iterable[int]) -> LayerChain:
    """Run fit(seed) for every seed and keep the chain with the lowest final-layer loss

    Ties keep the earlier seed.
    """
    best = None
    for seed in seeds:
        chain = fit(seed)
        logger.debug(f"{chain.method} seed {seed}: final relative loss {chain.final_loss:.6f}")
        if best is None or chain.final_loss < best.final_loss:
            best = chain
    if best is None:
        raise ArgumentError("best_of_seeds needs at least one seed")
    return best
