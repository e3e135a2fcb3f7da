"""Input resolution, method dispatch and the parallel fit runner shared by the commands"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from multihntf import settings
from multihntf.data import DataLoader, gen_synthetic
from multihntf.errors import ArgumentError, ConfigError, MultiHntfError, UnsupportedFeatureError
from multihntf.evaluation import chain_rows, label_accuracy_rows
from multihntf.hierarchy import (
    best_of_seeds,
    hnmf,
    hnmf_supervised,
    hntf_i,
    independent_ncpd,
    independent_nmf,
    multi_hntf,
    multi_hntf_supervised,
    standard_hncpd,
    trial_seeds,
)
from multihntf.models import (
    DenseTensor,
    HierarchySpec,
    LabelMatrix,
    LayerChain,
    ReportRow,
    RunConfig,
)
from multihntf.models.config import MATRIX_ONLY, SUPERVISED_METHODS, lead_mode_of

logger = logging.getLogger(__name__)

Fitter = Callable[[DenseTensor, HierarchySpec], LayerChain]


def _unsupervised_fitters() -> Dict[str, Fitter]:
    return {
        "multi-hntf": multi_hntf,
        "hnmf": hnmf,
        "hncpd": standard_hncpd,
        "ncpd": independent_ncpd,
        "nmf": independent_nmf,
    }


def _supervised_fitters() -> Dict[str, Callable[..., LayerChain]]:
    return {
        "multi-hntf": multi_hntf_supervised,
        "hnmf": hnmf_supervised,
    }


def load_input(config: RunConfig) -> Tuple[DenseTensor, Optional[LabelMatrix]]:
    """The configured tensor (file or synthetic) and, when supervision is set, its labels"""
    loader = DataLoader(config.base_dir)
    if config.input is not None:
        t = loader.load_tensor(config.input.path)
    else:
        t = gen_synthetic(config.synthetic.to_spec()).tensor

    labels = None
    if config.supervision is not None:
        if t.order != 2:
            raise ConfigError(f"supervision needs order-2 input, got order {t.order}")
        labels = loader.load_labels(config.supervision.labels)
        if labels.n_samples != t.shape[1]:
            raise ConfigError(
                f"{labels.n_samples} labelled samples but the input has {t.shape[1]} columns"
            )
    return t, labels


def expand_methods(tags: Sequence[str], order: int, lead_modes: Optional[List[int]]) -> List[str]:
    """Replace "hntf-i" by one hntf-<mode> tag per lead mode and check order requirements"""
    expanded: List[str] = []
    for tag in tags:
        if tag == "hntf-i":
            modes = lead_modes if lead_modes is not None else list(range(1, order + 1))
            expanded.extend(f"hntf-{m}" for m in modes)
        else:
            expanded.append(tag)
    for tag in expanded:
        mode = lead_mode_of(tag)
        if mode is not None and mode > order:
            raise ConfigError(f"{tag}: the input only has {order} modes")
        if tag in MATRIX_ONLY and order != 2:
            raise ConfigError(f"{tag} needs order-2 input, got order {order}")
    # keep first occurrence only
    return list(dict.fromkeys(expanded))


def fit_method(
    tag: str, t: DenseTensor, spec: HierarchySpec, labels: Optional[LabelMatrix] = None
) -> LayerChain:
    """Fit one chain; labels switch the method to its supervised form"""
    if labels is not None:
        fitter = _supervised_fitters().get(tag)
        if fitter is None:
            raise UnsupportedFeatureError(
                f"{tag} has no supervised form (supervised: {', '.join(SUPERVISED_METHODS)})"
            )
        return fitter(t, labels, spec)
    lead_mode = lead_mode_of(tag)
    if lead_mode is not None:
        return hntf_i(t, spec, lead_mode)
    fitter = _unsupervised_fitters().get(tag)
    if fitter is None:
        raise ArgumentError(f"unknown method '{tag}'")
    return fitter(t, spec)


class TaskResult(BaseModel):
    """Outcome of one (method, seed) fit"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    method: str
    seed: int
    chain: Optional[LayerChain] = None
    rows: List[ReportRow] = []
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def run_task(
    config: RunConfig, tag: str, seed: int, t: DenseTensor, labels: Optional[LabelMatrix]
) -> TaskResult:
    """Fit (best of config.multi_start starts) and build the report rows"""
    started = time.perf_counter()
    spec = config.hierarchy_spec(seed)
    supervising = None
    if config.supervision is not None and config.supervision.supervised:
        supervising = labels
    try:
        chain = best_of_seeds(
            lambda s: fit_method(tag, t, spec.with_seed(s), supervising),
            trial_seeds(seed, config.multi_start),
        )
        elapsed = time.perf_counter() - started if settings.record_timings() else 0.0
        accuracies = None
        if labels is not None:
            accuracies = label_accuracy_rows(chain, labels, spec.options[0])
        rows = chain_rows(chain, seed=seed, wall_time=elapsed, accuracies=accuracies)
    except (MultiHntfError, ValueError) as e:
        logger.error(f"{tag} seed {seed} failed: {e}")
        return TaskResult(method=tag, seed=seed, error=str(e))
    logger.info(
        f"{tag} seed {seed}: relative losses "
        + ", ".join(f"{loss:.4f}" for loss in chain.relative_losses)
    )
    return TaskResult(method=tag, seed=seed, chain=chain, rows=rows)


def run_tasks(
    config: RunConfig,
    tags: Sequence[str],
    t: DenseTensor,
    labels: Optional[LabelMatrix],
    jobs: int = 1,
) -> List[TaskResult]:
    """Every (method, seed) pair, in that order, on up to `jobs` worker threads"""
    pairs = [(tag, seed) for tag in tags for seed in config.seeds]
    logger.info(f"Running {len(pairs)} fits on {jobs} worker(s)")
    if jobs <= 1:
        return [run_task(config, tag, seed, t, labels) for tag, seed in pairs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_task, config, tag, seed, t, labels) for tag, seed in pairs]
        return [f.result() for f in futures]


def report_failures(results: Sequence[TaskResult]) -> int:
    """Log the failing (method, seed) pairs; exit code 0 only when there are none"""
    failed = [r for r in results if not r.ok]
    if not failed:
        return 0
    pairs = ", ".join(f"({r.method}, {r.seed})" for r in failed)
    logger.error(f"{len(failed)} of {len(results)} fits failed: {pairs}")
    return 1
