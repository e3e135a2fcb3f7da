"""Hierarchy data models: mixing matrices, layer chains, labels"""

from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from multihntf.models.arrays import FloatArray
from multihntf.models.factorization import FitOptions
from multihntf.models.tensor import FactorSet


class MixingMatrix(BaseModel):
    """Nonnegative r_l x r_(l+1) matrix collecting subtopics into supertopics"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    w: FloatArray
    loss_history: List[float] = Field(default_factory=list)

    @field_validator("w")
    @classmethod
    def _check_w(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 2:
            raise ValueError(f"mixing matrix must be 2-D, got ndim={v.ndim}")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("mixing matrix must be finite and nonnegative")
        if not 1 <= v.shape[1] < v.shape[0]:
            raise ValueError(f"mixing matrix must map r_l to fewer topics, got shape {v.shape}")
        return v

    @property
    def shape(self) -> tuple:
        return self.w.shape


class LabelMatrix(BaseModel):
    """Class-indicator matrix Y (classes x samples)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    y: FloatArray
    class_names: List[str]
    sample_ids: Optional[List[str]] = None

    @field_validator("y")
    @classmethod
    def _check_y(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 2:
            raise ValueError(f"label matrix must be 2-D, got ndim={v.ndim}")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("label matrix must be finite and nonnegative")
        if np.all((v == 0) | (v == 1)) and not np.all(v.sum(axis=0) == 1):
            raise ValueError("one-hot label columns must each contain exactly one 1")
        return v

    @model_validator(mode="after")
    def _check_names(self) -> "LabelMatrix":
        if len(self.class_names) != self.y.shape[0]:
            raise ValueError(
                f"{len(self.class_names)} class names for {self.y.shape[0]} label rows"
            )
        if self.sample_ids is not None and len(self.sample_ids) != self.y.shape[1]:
            raise ValueError(
                f"{len(self.sample_ids)} sample ids for {self.y.shape[1]} label columns"
            )
        return self

    @classmethod
    def from_classes(
        cls, labels: Sequence, class_names: Optional[Sequence[str]] = None
    ) -> "LabelMatrix":
        """One-hot matrix from a per-sample class sequence

        Classes are indexed in first-appearance order unless class_names is given.
        """
        names = [str(c) for c in class_names] if class_names is not None else []
        if class_names is None:
            for label in labels:
                if str(label) not in names:
                    names.append(str(label))
        index = {name: i for i, name in enumerate(names)}
        y = np.zeros((len(names), len(labels)))
        for j, label in enumerate(labels):
            y[index[str(label)], j] = 1.0
        return cls(y=y, class_names=names)

    @property
    def n_classes(self) -> int:
        return self.y.shape[0]

    @property
    def n_samples(self) -> int:
        return self.y.shape[1]

    @property
    def classes(self) -> np.ndarray:
        """Class index per sample (argmax per column, lowest index on ties)"""
        return np.argmax(self.y, axis=0)


def check_ranks(v: List[int]) -> List[int]:
    if not v:
        raise ValueError("at least one rank is required")
    if v[-1] < 1:
        raise ValueError("ranks must be positive")
    if any(b >= a for a, b in zip(v, v[1:])):
        raise ValueError(f"ranks must be strictly decreasing, got {v}")
    return v


class HierarchySpec(BaseModel):
    """Strictly decreasing ranks r_0 > ... > r_L plus per-layer options

    options[0] drives the layer-0 fit; options[l + 1] drives the step into layer l + 1.
    A single FitOptions is broadcast to every layer.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ranks: List[int]
    options: List[FitOptions] = Field(default_factory=list)
    labels: Optional[LabelMatrix] = None
    lam: float = Field(default=1.0, ge=0.0)

    @model_validator(mode="before")
    @classmethod
    def _broadcast_options(cls, data):
        if isinstance(data, dict):
            opts = data.get("options")
            ranks = data.get("ranks") or []
            if opts is None or (isinstance(opts, (list, tuple)) and len(opts) == 0):
                opts = [FitOptions()]
            if isinstance(opts, (FitOptions, dict)):
                opts = [opts]
            if len(opts) == 1 and len(ranks) > 1:
                opts = list(opts) * len(ranks)
            data = {**data, "options": list(opts)}
        return data

    @field_validator("ranks")
    @classmethod
    def _check_ranks(cls, v: List[int]) -> List[int]:
        return check_ranks(v)

    @model_validator(mode="after")
    def _check_options(self) -> "HierarchySpec":
        if len(self.options) != len(self.ranks):
            raise ValueError(f"{len(self.options)} option sets for {len(self.ranks)} ranks")
        return self

    @property
    def depth(self) -> int:
        """Number of layers after the first (L)"""
        return len(self.ranks) - 1

    def with_seed(self, seed: int) -> "HierarchySpec":
        return self.model_copy(update={"options": [o.with_seed(seed) for o in self.options]})

    def tail(self, start: int) -> "HierarchySpec":
        """Spec for ranks[start:] with the matching options"""
        return HierarchySpec(
            ranks=self.ranks[start:], options=self.options[start:], labels=self.labels, lam=self.lam
        )


class LayerRecord(BaseModel):
    """One layer of a fitted hierarchy"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    rank: int
    factors: FactorSet
    mixing: Optional[MixingMatrix] = None  # into the next layer
    relative_loss: float = Field(ge=0.0)
    absolute_loss: float = Field(ge=0.0)

    @field_validator("relative_loss", "absolute_loss")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not np.isfinite(v):
            raise ValueError("loss must be finite")
        return v


class LayerChain(BaseModel):
    """A fitted hierarchy and the algorithm that produced it"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    method: str
    ranks: List[int]
    seed: int = 0
    options: List[FitOptions] = Field(default_factory=list)
    layers: List[LayerRecord]
    lead_mode: Optional[int] = None
    lam: Optional[float] = None
    label_dictionaries: Optional[List[FloatArray]] = None
    class_names: Optional[List[str]] = None
    mode_chains: Optional[List["LayerChain"]] = None

    @model_validator(mode="after")
    def _check_layers(self) -> "LayerChain":
        if len(self.layers) != len(self.ranks):
            raise ValueError(f"{len(self.layers)} layers for ranks {self.ranks}")
        if self.label_dictionaries is not None and len(self.label_dictionaries) != len(
            self.layers
        ):
            raise ValueError("one label dictionary per layer is required")
        return self

    @property
    def relative_losses(self) -> List[float]:
        return [layer.relative_loss for layer in self.layers]

    @property
    def absolute_losses(self) -> List[float]:
        return [layer.absolute_loss for layer in self.layers]

    @property
    def final_loss(self) -> float:
        return self.layers[-1].relative_loss

    @property
    def supervised(self) -> bool:
        return self.label_dictionaries is not None

    def mixing_residual(self) -> float:
        """Largest |X_i^(l+1) - X_i^(l) W^(l)| over layers and modes

        Zero for Multi-HNTF chains built in this process.
        """
        worst = 0.0
        for cur, nxt in zip(self.layers, self.layers[1:]):
            if cur.mixing is None:
                continue
            for x_cur, x_next in zip(cur.factors.factors, nxt.factors.factors):
                worst = max(worst, float(np.max(np.abs(x_cur @ cur.mixing.w - x_next))))
        return worst


LayerChain.model_rebuild()
