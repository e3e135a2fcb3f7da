"""Dense tensor and CP factor data models"""

from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from multihntf.models.arrays import FloatArray


class DenseTensor(BaseModel):
    """Order-k nonnegative dense array (k >= 2), row-major"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    data: FloatArray

    @field_validator("data")
    @classmethod
    def _check_data(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim < 2:
            raise ValueError(f"tensor order must be >= 2, got {v.ndim}")
        if v.size == 0:
            raise ValueError("tensor has an empty mode")
        if not np.all(np.isfinite(v)):
            raise ValueError("tensor entries must be finite")
        if np.any(v < 0):
            raise ValueError("tensor entries must be nonnegative")
        return v

    @classmethod
    def from_values(cls, shape: Sequence[int], values: Sequence[float]) -> "DenseTensor":
        """Build from a shape and a flat row-major value list"""
        shape = tuple(int(n) for n in shape)
        flat = np.asarray(values, dtype=np.float64).ravel()
        if any(n <= 0 for n in shape):
            raise ValueError(f"shape entries must be positive, got {shape}")
        if flat.size != int(np.prod(shape)):
            raise ValueError(
                f"{flat.size} values do not fill shape {shape} ({int(np.prod(shape))} entries)"
            )
        return cls(data=flat.reshape(shape))

    @property
    def shape(self) -> tuple:
        return self.data.shape

    @property
    def order(self) -> int:
        return self.data.ndim

    @property
    def values(self) -> np.ndarray:
        """Flat row-major view (last mode fastest)"""
        return self.data.ravel()


class FactorSet(BaseModel):
    """Factor matrices of a rank-r CP model, factor i of shape n_i x r

    For k = 2 the pair is (A, S^T) of the matrix model X ~ A S.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    factors: List[FloatArray]

    @field_validator("factors")
    @classmethod
    def _check_factors(cls, v: List[np.ndarray]) -> List[np.ndarray]:
        if len(v) < 2:
            raise ValueError(f"a factor set needs at least 2 factors, got {len(v)}")
        ranks = set()
        for i, f in enumerate(v):
            if f.ndim != 2:
                raise ValueError(f"factor {i} must be a matrix, got ndim={f.ndim}")
            if not np.all(np.isfinite(f)) or np.any(f < 0):
                raise ValueError(f"factor {i} must be finite and nonnegative")
            ranks.add(f.shape[1])
        if len(ranks) != 1:
            raise ValueError(f"factors disagree on column count: {sorted(ranks)}")
        if 0 in ranks:
            raise ValueError("rank must be positive")
        return v

    @property
    def rank(self) -> int:
        return self.factors[0].shape[1]

    @property
    def order(self) -> int:
        return len(self.factors)

    @property
    def shape(self) -> tuple:
        return tuple(f.shape[0] for f in self.factors)
