"""Per-layer report rows, cross-seed summaries and their CSV/JSON/markdown forms"""

import csv
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from multihntf.models import LayerChain
from multihntf.models.report import ReportRow, SummaryRow

logger = logging.getLogger(__name__)


def chain_rows(
    chain: LayerChain,
    seed: Optional[int] = None,
    wall_time: float = 0.0,
    accuracies: Optional[Sequence[Tuple[float, str]]] = None,
) -> List[ReportRow]:
    """One row per layer; seed defaults to the seed the chain was fitted with"""
    rows = []
    for layer, record in enumerate(chain.layers):
        acc, source = accuracies[layer] if accuracies is not None else (None, None)
        rows.append(
            ReportRow(
                method=chain.method,
                layer=layer,
                rank=record.rank,
                relative_loss=record.relative_loss,
                absolute_loss=record.absolute_loss,
                accuracy=acc,
                accuracy_source=source,
                seed=chain.seed if seed is None else seed,
                wall_time=wall_time,
            )
        )
    return rows


def summarize_rows(rows: Sequence[ReportRow]) -> List[SummaryRow]:
    """Median, min and max relative loss per (method, layer), in first-seen order"""
    groups: Dict[Tuple[str, int], List[ReportRow]] = {}
    for row in rows:
        groups.setdefault((row.method, row.layer), []).append(row)

    summaries = []
    for (method, layer), members in groups.items():
        losses = np.array([r.relative_loss for r in members])
        accs = [r.accuracy for r in members if r.accuracy is not None]
        summaries.append(
            SummaryRow(
                method=method,
                layer=layer,
                rank=members[0].rank,
                median=float(np.median(losses)),
                min=float(losses.min()),
                max=float(losses.max()),
                n_seeds=len(members),
                accuracy_median=float(np.median(accs)) if accs else None,
            )
        )
    return summaries


def pivot_table(summaries: Sequence[SummaryRow]) -> Tuple[List[str], List[List[str]]]:
    """One row per method, one "median [min, max]" column per layer rank"""
    ranks: List[int] = []
    cells: Dict[str, Dict[int, str]] = {}
    for s in summaries:
        if s.rank not in ranks:
            ranks.append(s.rank)
        cell = f"{s.median:.3f} [{s.min:.3f}, {s.max:.3f}]"
        if s.accuracy_median is not None:
            cell += f" acc {s.accuracy_median:.3f}"
        cells.setdefault(s.method, {})[s.rank] = cell
    header = ["method"] + [f"r={r}" for r in ranks]
    body = [[method] + [row.get(r, "") for r in ranks] for method, row in cells.items()]
    return header, body


def render_markdown(summaries: Sequence[SummaryRow]) -> str:
    header, body = pivot_table(summaries)
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in body)
    return "\n".join(lines) + "\n"


def write_rows_csv(path, rows: Sequence[BaseModel]) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        if rows:
            fields = list(type(rows[0]).model_fields)
            writer.writerow(fields)
            for row in rows:
                values = row.model_dump()
                writer.writerow(["" if values[k] is None else values[k] for k in fields])
    logger.debug(f"Wrote {len(rows)} rows to {path}")
    return path


def write_rows_json(path, rows: Sequence[BaseModel]) -> Path:
    path = Path(path)
    payload = [row.model_dump(mode="json") for row in rows]
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path
