"""Synthetic hierarchical block tensor definitions"""

from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from multihntf.models.arrays import FloatArray
from multihntf.models.tensor import DenseTensor, FactorSet


class Block(BaseModel):
    """Axis-aligned block: one half-open index range per mode"""
    model_config = ConfigDict(frozen=True)

    ranges: List[Tuple[int, int]]
    amplitude: float = Field(default=1.0, gt=0.0)
    parent: Optional[int] = None  # index into the next (coarser) level


def _cube(lo12: Tuple[int, int], lo3: Tuple[int, int], parent: Optional[int] = None) -> Block:
    return Block(ranges=[lo12, lo12, lo3], parent=parent)


def default_levels() -> List[List[Block]]:
    """7 leaves -> 4 groups -> 2 groups on a 40 x 40 x 40 grid

    Leaves are square in modes 1-2 and span their group's range in mode 3; the two
    halves overlap slightly so neighbouring blocks are overlaid.
    """
    leaves = [
        _cube((0, 6), (0, 24), 0),
        _cube((6, 12), (0, 24), 0),
        _cube((10, 16), (0, 24), 1),
        _cube((16, 22), (0, 24), 1),
        _cube((18, 24), (16, 40), 2),
        _cube((24, 30), (16, 40), 2),
        _cube((28, 40), (16, 40), 3),
    ]
    groups = [
        _cube((0, 12), (0, 24), 0),
        _cube((10, 22), (0, 24), 0),
        _cube((18, 30), (16, 40), 1),
        _cube((28, 40), (16, 40), 1),
    ]
    top = [_cube((0, 22), (0, 24)), _cube((18, 40), (16, 40))]
    return [leaves, groups, top]


class SyntheticSpec(BaseModel):
    """Hierarchical block tensor with additive positive Gaussian noise

    levels[0] holds the leaf blocks that generate the tensor; every coarser level only
    groups the level below it. Noise is N(0, noise_sigma2) with negatives clipped to 0
    ("clip") or replaced by their magnitude ("abs").
    """
    model_config = ConfigDict(frozen=True)

    shape: List[int] = Field(default_factory=lambda: [40, 40, 40])
    levels: List[List[Block]] = Field(default_factory=default_levels)
    noise_sigma2: float = Field(default=0.1, ge=0.0)
    noise_mode: Literal["clip", "abs"] = "clip"
    seed: int = Field(default=0, ge=0)

    @field_validator("shape")
    @classmethod
    def _check_shape(cls, v: List[int]) -> List[int]:
        if len(v) < 2 or any(n < 1 for n in v):
            raise ValueError(f"shape must list at least 2 positive sizes, got {v}")
        return v

    @model_validator(mode="after")
    def _check_blocks(self) -> "SyntheticSpec":
        if not self.levels or not self.levels[0]:
            raise ValueError("at least one leaf block is required")
        for depth, level in enumerate(self.levels):
            coarser = self.levels[depth + 1] if depth + 1 < len(self.levels) else None
            for j, block in enumerate(level):
                where = f"level {depth} block {j}"
                if len(block.ranges) != len(self.shape):
                    raise ValueError(
                        f"{where}: {len(block.ranges)} ranges for order {len(self.shape)}"
                    )
                for (lo, hi), n in zip(block.ranges, self.shape):
                    if not 0 <= lo < hi <= n:
                        raise ValueError(f"{where}: range [{lo}, {hi}) outside [0, {n})")
                if coarser is None:
                    if block.parent is not None:
                        raise ValueError(f"{where}: top-level blocks have no parent")
                    continue
                if block.parent is None or not 0 <= block.parent < len(coarser):
                    raise ValueError(f"{where}: parent {block.parent} does not exist")
                parent = coarser[block.parent]
                for (lo, hi), (plo, phi) in zip(block.ranges, parent.ranges):
                    if lo < plo or hi > phi:
                        raise ValueError(
                            f"{where}: range [{lo}, {hi}) is not inside its parent's [{plo}, {phi})"
                        )
            if coarser is not None:
                used = {b.parent for b in level}
                if used != set(range(len(coarser))):
                    raise ValueError(f"level {depth + 1} has groups without members")
        return self

    @property
    def ranks(self) -> List[int]:
        return [len(level) for level in self.levels]

    def membership(self, depth: int) -> np.ndarray:
        """0/1 matrix mapping level `depth` blocks to their level depth+1 groups"""
        level, coarser = self.levels[depth], self.levels[depth + 1]
        m = np.zeros((len(level), len(coarser)))
        for j, block in enumerate(level):
            m[j, block.parent] = 1.0
        return m


class SyntheticData(BaseModel):
    """Generated tensor with its noiseless part and ground truth at every level"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tensor: DenseTensor
    noiseless: DenseTensor
    truths: List[FactorSet]
    memberships: List[FloatArray]
