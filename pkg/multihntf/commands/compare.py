"""compare: methods x seeds summarized into one table"""

import logging

from multihntf.commands.common import expand_methods, load_input, report_failures, run_tasks
from multihntf.evaluation import render_markdown, summarize_rows, write_rows_csv, write_rows_json
from multihntf.models import RunConfig

logger = logging.getLogger(__name__)


def cmd_compare(config: RunConfig, jobs: int = 1) -> int:
    """Fit every configured method for every seed and write the comparison table

    Writes report.csv (every row), summary.csv/summary.json (median, min, max per
    method and layer) and summary.md (one row per method, one column per rank).
    """
    t, labels = load_input(config)
    tags = expand_methods(config.methods or [config.method], t.order, config.lead_modes)
    results = run_tasks(config, tags, t, labels, jobs)

    rows = [row for result in results if result.ok for row in result.rows]
    summaries = summarize_rows(rows)
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    write_rows_csv(out / "report.csv", rows)
    write_rows_csv(out / "summary.csv", summaries)
    write_rows_json(out / "summary.json", summaries)
    table = render_markdown(summaries)
    (out / "summary.md").write_text(table, encoding="utf-8")
    print(table, end="")
    return report_failures(results)
