"""Metrics, keyword/heatmap exports and comparison reports"""

from multihntf.evaluation.export import (
    heatmap_export,
    keywords_export,
    top_keyword_indices,
    top_keywords,
)
from multihntf.evaluation.metrics import accuracy, classify, label_accuracy_rows
from multihntf.evaluation.report import (
    chain_rows,
    pivot_table,
    render_markdown,
    summarize_rows,
    write_rows_csv,
    write_rows_json,
)

__all__ = [
    "accuracy",
    "chain_rows",
    "classify",
    "heatmap_export",
    "keywords_export",
    "label_accuracy_rows",
    "pivot_table",
    "render_markdown",
    "summarize_rows",
    "top_keyword_indices",
    "top_keywords",
    "write_rows_csv",
    "write_rows_json",
]
