"""synth: write the synthetic block tensor and its ground truth"""

import logging
from typing import Optional

from multihntf.data import gen_synthetic, write_matrix, write_tensor
from multihntf.models import RunConfig

logger = logging.getLogger(__name__)


def cmd_synth(config: RunConfig, seed: Optional[int] = None) -> int:
    """Write tensor.dtf, noiseless.dtf, truth_rank{r}_mode{i}.csv and membership CSVs

    Args:
        config: run configuration; its synthetic section defines the tensor
        seed: noise seed overriding synthetic.seed

    Returns:
        Process exit code
    """
    spec = config.synthetic.to_spec(seed=seed)
    data = gen_synthetic(spec)
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)

    write_tensor(out / "tensor.dtf", data.tensor)
    write_tensor(out / "noiseless.dtf", data.noiseless)
    for truth in data.truths:
        for mode, factor in enumerate(truth.factors, start=1):
            write_matrix(out / f"truth_rank{truth.rank}_mode{mode}.csv", factor)
    ranks = spec.ranks
    for depth, membership in enumerate(data.memberships):
        write_matrix(out / f"membership_{ranks[depth]}_to_{ranks[depth + 1]}.csv", membership)
    (out / "synthetic.json").write_text(spec.model_dump_json(indent=2) + "\n", encoding="utf-8")

    logger.info(f"Synthetic tensor {data.tensor.shape} written to {out}")
    return 0
