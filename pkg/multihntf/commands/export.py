"""export: heatmap and keyword CSVs from a saved chain"""

import logging
from typing import Optional

from multihntf.data import DataLoader, load_chain
from multihntf.errors import ConfigError
from multihntf.evaluation import heatmap_export, keywords_export
from multihntf.models import RunConfig

logger = logging.getLogger(__name__)


def cmd_export(config: RunConfig, chain_path: Optional[str] = None) -> int:
    """Write heatmaps for export.modes (all modes by default) and, with a word mode, keywords

    A chain given on the command line is read as given; export.chain and the vocabulary
    paths resolve against the config file's directory.
    """
    loader = DataLoader(config.base_dir)
    if chain_path is not None:
        chain = load_chain(chain_path)
    elif config.export.chain is not None:
        chain = loader.load_chain(config.export.chain)
    else:
        raise ConfigError("export needs a chain file (argument or export.chain)")
    order = chain.layers[0].factors.order
    modes = config.export.modes or list(range(1, order + 1))
    out = config.out_dir / "export"

    heatmap_export(chain, modes, out)
    if config.export.word_mode is not None:
        vocab_path = config.export.vocab or (config.input.vocab if config.input else None)
        if vocab_path is None:
            raise ConfigError("keyword export needs export.vocab or input.vocab")
        vocab = loader.load_vocab(vocab_path)
        keywords_export(chain, config.export.word_mode, vocab, config.export.top_k, out)
    logger.info(f"Exported {chain.method} chain to {out}")
    return 0
