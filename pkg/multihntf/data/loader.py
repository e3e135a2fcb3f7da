"""Readers and writers for tensors, matrices, labels and vocabularies

Tensor files:
    dtf k n_1 ... n_k            then prod(n_i) values, row-major, any whitespace
    coo k n_1 ... n_k nnz        then nnz lines "i_1 ... i_k value" (1-based);
                                 unlisted entries are 0, repeated indices are summed
Matrices: CSV, one row per line (rows = first mode), optional non-numeric header row.
Labels: CSV "sample_id,class_name", optional header; classes indexed by first appearance.
Vocabulary: one token per line, line i = word i.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from multihntf.errors import LoadError
from multihntf.models import DenseTensor, LabelMatrix, LayerChain

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _read_lines(path: Path) -> List[str]:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise LoadError(str(path), 0, f"cannot read file: {exc.strerror or exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = raw[: exc.start].count(b"\n") + 1
        raise LoadError(str(path), line, f"invalid UTF-8 byte 0x{raw[exc.start]:02x}") from exc
    return text.splitlines()


def _parse_float(path: Path, lineno: int, token: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise LoadError(str(path), lineno, f"'{token}' is not a number") from None
    if not np.isfinite(value):
        raise LoadError(str(path), lineno, f"'{token}' is not finite")
    if value < 0:
        raise LoadError(str(path), lineno, f"negative value {token}")
    return value


def _parse_int(path: Path, lineno: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise LoadError(str(path), lineno, f"{what} '{token}' is not an integer") from None


def _header(path: Path, lines: List[str]) -> Tuple[int, List[str]]:
    for lineno, line in enumerate(lines, start=1):
        if line.strip():
            return lineno, line.split()
    raise LoadError(str(path), 0, "file is empty")


def _dims(path: Path, lineno: int, tokens: List[str]) -> List[int]:
    if len(tokens) < 2:
        raise LoadError(str(path), lineno, "header is missing the tensor order")
    k = _parse_int(path, lineno, tokens[1], "order")
    if k < 2:
        raise LoadError(str(path), lineno, f"tensor order must be >= 2, got {k}")
    if len(tokens) < 2 + k:
        raise LoadError(str(path), lineno, f"header lists {len(tokens) - 2} of {k} mode sizes")
    dims = [_parse_int(path, lineno, tok, "mode size") for tok in tokens[2:2 + k]]
    if any(n < 1 for n in dims):
        raise LoadError(str(path), lineno, f"mode sizes must be positive, got {dims}")
    return dims


def _load_dtf(path: Path, lines: List[str], start: int, tokens: List[str]) -> DenseTensor:
    dims = _dims(path, start, tokens)
    if len(tokens) != 2 + len(dims):
        raise LoadError(str(path), start, "unexpected tokens after the mode sizes")
    expected = int(np.prod(dims))
    values: List[float] = []
    last = start
    for lineno, line in enumerate(lines[start:], start=start + 1):
        for token in line.split():
            if len(values) == expected:
                raise LoadError(str(path), lineno, f"more than {expected} values")
            values.append(_parse_float(path, lineno, token))
            last = lineno
    if len(values) != expected:
        raise LoadError(str(path), last, f"found {len(values)} values, expected {expected}")
    return DenseTensor.from_values(dims, values)


def _load_coo(path: Path, lines: List[str], start: int, tokens: List[str]) -> DenseTensor:
    dims = _dims(path, start, tokens)
    k = len(dims)
    if len(tokens) != 3 + k:
        raise LoadError(str(path), start, "coo header must end with the entry count")
    nnz = _parse_int(path, start, tokens[2 + k], "entry count")
    data = np.zeros(dims)
    seen = 0
    last = start
    for lineno, line in enumerate(lines[start:], start=start + 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != k + 1:
            raise LoadError(str(path), lineno, f"expected {k} indices and a value")
        index = []
        for mode, tok in enumerate(parts[:k]):
            i = _parse_int(path, lineno, tok, "index")
            if not 1 <= i <= dims[mode]:
                raise LoadError(str(path), lineno, f"index {i} outside 1..{dims[mode]}")
            index.append(i - 1)
        data[tuple(index)] += _parse_float(path, lineno, parts[k])
        seen += 1
        last = lineno
    if seen != nnz:
        raise LoadError(str(path), last, f"found {seen} entries, header declares {nnz}")
    return DenseTensor(data=data)


def load_tensor(path: PathLike) -> DenseTensor:
    """Read a DTF or COO tensor file (a .csv path is read as an order-2 tensor)"""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return DenseTensor(data=load_matrix(path))
    lines = _read_lines(path)
    lineno, tokens = _header(path, lines)
    kind = tokens[0].lower()
    if kind == "dtf":
        tensor = _load_dtf(path, lines, lineno, tokens)
    elif kind == "coo":
        tensor = _load_coo(path, lines, lineno, tokens)
    else:
        raise LoadError(str(path), lineno, f"unknown tensor format '{tokens[0]}'")
    logger.info(f"Loaded tensor {tensor.shape} from {path}")
    return tensor


def _is_numeric_row(row: List[str]) -> bool:
    try:
        [float(cell) for cell in row]
        return True
    except ValueError:
        return False


def load_matrix(path: PathLike) -> np.ndarray:
    """Read a nonnegative CSV matrix"""
    path = Path(path)
    rows: List[List[float]] = []
    reader = csv.reader(_read_lines(path))
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        if not rows and not _is_numeric_row(row):
            continue  # header
        values = [_parse_float(path, reader.line_num, cell.strip()) for cell in row]
        if rows and len(values) != len(rows[0]):
            raise LoadError(
                str(path),
                reader.line_num,
                f"row has {len(values)} columns, expected {len(rows[0])}",
            )
        rows.append(values)
    if not rows:
        raise LoadError(str(path), 0, "no numeric rows")
    return np.array(rows, dtype=np.float64)


def load_labels(path: PathLike) -> LabelMatrix:
    """Read sample_id,class_name rows into a one-hot LabelMatrix"""
    path = Path(path)
    sample_ids: List[str] = []
    classes: List[str] = []
    seen: Dict[str, int] = {}
    reader = csv.reader(_read_lines(path))
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if not sample_ids and [c.lower() for c in cells] == ["sample_id", "class_name"]:
            continue
        if len(cells) != 2 or not cells[0] or not cells[1]:
            raise LoadError(str(path), reader.line_num, "expected 'sample_id,class_name'")
        if cells[0] in seen:
            raise LoadError(
                str(path),
                reader.line_num,
                f"sample '{cells[0]}' already labelled on line {seen[cells[0]]}",
            )
        seen[cells[0]] = reader.line_num
        sample_ids.append(cells[0])
        classes.append(cells[1])
    if not sample_ids:
        raise LoadError(str(path), 0, "no labels")
    labels = LabelMatrix.from_classes(classes)
    return labels.model_copy(update={"sample_ids": sample_ids})


def load_vocab(path: PathLike) -> List[str]:
    path = Path(path)
    tokens = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        token = line.strip()
        if not token:
            raise LoadError(str(path), lineno, "empty vocabulary entry")
        tokens.append(token)
    return tokens


def _fmt(value: float) -> str:
    return repr(float(value))


def write_tensor(path: PathLike, t: DenseTensor, fmt: str = "dtf") -> Path:
    """Write t as DTF (one last-mode fiber per line) or COO (nonzeros only)"""
    path = Path(path)
    dims = " ".join(str(n) for n in t.shape)
    with open(path, "w", encoding="utf-8") as f:
        if fmt == "dtf":
            f.write(f"dtf {t.order} {dims}\n")
            for fiber in t.data.reshape(-1, t.shape[-1]):
                f.write(" ".join(_fmt(v) for v in fiber) + "\n")
        elif fmt == "coo":
            nonzero = np.argwhere(t.data != 0)
            f.write(f"coo {t.order} {dims} {len(nonzero)}\n")
            for index in nonzero:
                coords = " ".join(str(int(i) + 1) for i in index)
                f.write(f"{coords} {_fmt(t.data[tuple(index)])}\n")
        else:
            raise ValueError(f"unknown tensor format '{fmt}'")
    return path


def write_matrix(path: PathLike, m: np.ndarray, header: Optional[List[str]] = None) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        if header is not None:
            writer.writerow(header)
        for row in np.asarray(m):
            writer.writerow([_fmt(v) for v in row])
    return path


def write_chain(path: PathLike, chain: LayerChain) -> Path:
    path = Path(path)
    path.write_text(chain.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return path


def load_chain(path: PathLike) -> LayerChain:
    """Read a chain written by write_chain"""
    path = Path(path)
    text = "\n".join(_read_lines(path))
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(str(path), exc.lineno, exc.msg) from exc
    try:
        return LayerChain.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = ".".join(str(p) for p in first.get("loc", ()))
        message = f"invalid chain at {loc or '<root>'}: {first['msg']}"
        raise LoadError(str(path), 0, message) from exc


class DataLoader:
    """Resolves input paths relative to a base directory (the config file's)"""

    def __init__(self, base_dir: Optional[Path] = None):
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()

    def resolve(self, path: PathLike) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self.base_dir / path

    def load_tensor(self, path: PathLike) -> DenseTensor:
        return load_tensor(self.resolve(path))

    def load_matrix(self, path: PathLike) -> np.ndarray:
        return load_matrix(self.resolve(path))

    def load_labels(self, path: PathLike) -> LabelMatrix:
        return load_labels(self.resolve(path))

    def load_vocab(self, path: PathLike) -> List[str]:
        return load_vocab(self.resolve(path))

    def load_chain(self, path: PathLike) -> LayerChain:
        return load_chain(self.resolve(path))
