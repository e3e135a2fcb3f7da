"""Solver options and flat factorization results"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field

from multihntf.models.arrays import FloatArray
from multihntf.models.tensor import FactorSet


class FitOptions(BaseModel):
    """Iteration controls shared by every multiplicative-update solver"""
    model_config = ConfigDict(frozen=True)

    max_iters: int = Field(default=500, ge=1)
    tol: float = Field(default=1e-6, ge=0.0)  # relative objective improvement
    seed: int = Field(default=0, ge=0)
    epsilon: float = Field(default=1e-12, gt=0.0)  # denominator guard

    def with_seed(self, seed: int) -> "FitOptions":
        return self.model_copy(update={"seed": seed})


class NmfResult(BaseModel):
    """X ~ A S with A (m x r) and S (r x n)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    a: FloatArray
    s: FloatArray
    loss_history: List[float] = Field(default_factory=list)  # squared Frobenius residual

    @property
    def rank(self) -> int:
        return self.a.shape[1]

    def as_factor_set(self) -> FactorSet:
        return FactorSet(factors=[self.a, self.s.T])


class NcpdResult(BaseModel):
    """NCPD factors together with the per-iteration objective"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    factors: FactorSet
    loss_history: List[float] = Field(default_factory=list)
