"""Report rows written by fit and compare"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

AccuracySource = Literal["supervised", "posthoc"]


class ReportRow(BaseModel):
    """Losses (and accuracy, when labels are known) of one layer of one fitted chain"""
    model_config = ConfigDict(frozen=True)

    method: str
    layer: int = Field(ge=0)
    rank: int = Field(ge=1)
    relative_loss: float = Field(ge=0.0)
    absolute_loss: float = Field(ge=0.0)
    accuracy: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    accuracy_source: Optional[AccuracySource] = None
    seed: int = Field(ge=0)
    wall_time: float = Field(default=0.0, ge=0.0)  # seconds, whole chain


class SummaryRow(BaseModel):
    """Relative-loss statistics of one (method, layer) across seeds"""
    model_config = ConfigDict(frozen=True)

    method: str
    layer: int = Field(ge=0)
    rank: int = Field(ge=1)
    median: float
    min: float
    max: float
    n_seeds: int = Field(ge=1)
    accuracy_median: Optional[float] = None
