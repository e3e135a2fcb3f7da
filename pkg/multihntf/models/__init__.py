"""Pydantic models for multihntf data structures"""

from multihntf.models.tensor import DenseTensor, FactorSet
from multihntf.models.factorization import FitOptions, NcpdResult, NmfResult
from multihntf.models.hierarchy import (
    HierarchySpec,
    LabelMatrix,
    LayerChain,
    LayerRecord,
    MixingMatrix,
)
from multihntf.models.synthetic import Block, SyntheticData, SyntheticSpec
from multihntf.models.report import ReportRow, SummaryRow
from multihntf.models.config import RunConfig

__all__ = [
    "Block",
    "DenseTensor",
    "FactorSet",
    "FitOptions",
    "HierarchySpec",
    "LabelMatrix",
    "LayerChain",
    "LayerRecord",
    "MixingMatrix",
    "NcpdResult",
    "NmfResult",
    "ReportRow",
    "RunConfig",
    "SummaryRow",
    "SyntheticData",
    "SyntheticSpec",
]
