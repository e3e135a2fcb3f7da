"""fit: one method over the configured seeds"""

import logging

from multihntf.commands.common import expand_methods, load_input, report_failures, run_tasks
from multihntf.data import write_chain
from multihntf.evaluation import write_rows_csv, write_rows_json
from multihntf.models import RunConfig

logger = logging.getLogger(__name__)


def cmd_fit(config: RunConfig, jobs: int = 1) -> int:
    """Fit config.method for every seed; writes chains/<method>_seed<n>.json and report files"""
    t, labels = load_input(config)
    tags = expand_methods([config.method], t.order, config.lead_modes)
    results = run_tasks(config, tags, t, labels, jobs)

    out = config.out_dir
    chains_dir = out / "chains"
    chains_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for result in results:
        if not result.ok:
            continue
        write_chain(chains_dir / f"{result.method}_seed{result.seed}.json", result.chain)
        rows.extend(result.rows)
    write_rows_csv(out / "report.csv", rows)
    write_rows_json(out / "report.json", rows)
    logger.info(f"Wrote {len(rows)} report rows to {out}")
    return report_failures(results)
