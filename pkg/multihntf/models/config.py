"""Run configuration read from TOML or JSON files"""

import json
import re
import sys
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    ValidationError,
    field_validator,
    model_validator,
)

from multihntf.errors import ConfigError
from multihntf.models.factorization import FitOptions
from multihntf.models.hierarchy import HierarchySpec, check_ranks
from multihntf.models.synthetic import SyntheticSpec

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

CONFIG_VERSION = 1
METHODS = ("multi-hntf", "hnmf", "hntf-i", "hncpd", "ncpd", "nmf")
MATRIX_ONLY = ("hnmf", "nmf")
SUPERVISED_METHODS = ("multi-hntf", "hnmf")
_LEAD_MODE_TAG = re.compile(r"^hntf-([1-9][0-9]*)$")


def check_method(tag: str) -> str:
    """Accept the method names plus explicit hntf-<mode> tags"""
    if tag not in METHODS and not _LEAD_MODE_TAG.match(tag):
        raise ValueError(f"unknown method '{tag}', expected one of {', '.join(METHODS)}")
    return tag


def lead_mode_of(tag: str) -> Optional[int]:
    match = _LEAD_MODE_TAG.match(tag)
    return int(match.group(1)) if match else None


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class FitSection(_Section):
    max_iters: int = Field(default=500, ge=1)
    tol: float = Field(default=1e-6, ge=0.0)
    epsilon: float = Field(default=1e-12, gt=0.0)


class InputSection(_Section):
    path: str
    vocab: Optional[str] = None


class SyntheticSection(_Section):
    noise_sigma2: float = Field(default=0.1, ge=0.0)
    noise_mode: Literal["clip", "abs"] = "clip"
    seed: int = Field(default=0, ge=0)
    shape: Optional[List[int]] = None

    def to_spec(self, seed: Optional[int] = None) -> SyntheticSpec:
        """SyntheticSpec with the default block layout; ConfigError if the shape cannot hold it"""
        fields = {
            "noise_sigma2": self.noise_sigma2,
            "noise_mode": self.noise_mode,
            "seed": self.seed if seed is None else seed,
        }
        if self.shape is not None:
            fields["shape"] = self.shape
        try:
            return SyntheticSpec(**fields)
        except ValidationError as exc:
            raise ConfigError.from_validation_error("synthetic", exc) from exc


class SupervisionSection(_Section):
    labels: str
    lam: float = Field(default=1.0, ge=0.0)
    # false: labels only score the chains (post-hoc accuracy), fits stay unsupervised
    supervised: bool = True


class ExportSection(_Section):
    chain: Optional[str] = None
    modes: Optional[List[int]] = None  # 1-based; all modes when omitted
    word_mode: Optional[int] = Field(default=None, ge=1)
    top_k: int = Field(default=10, ge=1)
    vocab: Optional[str] = None


class RunConfig(BaseModel):
    """Everything one synth/fit/compare/export invocation needs

    Relative paths are resolved against the directory of the config file.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    version: int = CONFIG_VERSION
    method: str = "multi-hntf"
    methods: List[str] = Field(default_factory=list)
    ranks: List[int] = Field(default_factory=lambda: [7, 4, 2])
    seeds: List[int] = Field(default_factory=lambda: [0])
    multi_start: int = Field(default=1, ge=1)
    fit: FitSection = Field(default_factory=FitSection)
    input: Optional[InputSection] = None
    synthetic: SyntheticSection = Field(default_factory=SyntheticSection)
    supervision: Optional[SupervisionSection] = None
    lead_modes: Optional[List[int]] = None
    output_dir: str = "out"
    export: ExportSection = Field(default_factory=ExportSection)

    _base_dir: Path = PrivateAttr(default_factory=Path.cwd)

    @field_validator("version")
    @classmethod
    def _check_version(cls, v: int) -> int:
        if v != CONFIG_VERSION:
            raise ValueError(f"unsupported config version {v}, expected {CONFIG_VERSION}")
        return v

    @field_validator("method")
    @classmethod
    def _check_method(cls, v: str) -> str:
        return check_method(v)

    @field_validator("methods")
    @classmethod
    def _check_methods(cls, v: List[str]) -> List[str]:
        for tag in v:
            check_method(tag)
        if len(set(v)) != len(v):
            raise ValueError("methods must not repeat")
        return v

    @field_validator("ranks")
    @classmethod
    def _check_ranks(cls, v: List[int]) -> List[int]:
        return check_ranks(v)

    @field_validator("seeds")
    @classmethod
    def _check_seeds(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("at least one seed is required")
        if any(s < 0 for s in v):
            raise ValueError("seeds must be >= 0")
        return v

    @field_validator("lead_modes")
    @classmethod
    def _check_lead_modes(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is not None and (not v or any(m < 1 for m in v)):
            raise ValueError("lead_modes must list 1-based modes")
        return v

    @model_validator(mode="after")
    def _check_compatibility(self) -> "RunConfig":
        if self.input is None:
            order = len(self.synthetic.shape) if self.synthetic.shape is not None else 3
            tags = set(self.methods) | {self.method}
            if order != 2:
                bad = sorted(tags & set(MATRIX_ONLY))
                if bad:
                    raise ValueError(
                        f"{', '.join(bad)} need order-2 input, synthetic data has order {order}"
                    )
                if self.supervision is not None:
                    raise ValueError("supervision needs order-2 input")
        return self

    @property
    def base_dir(self) -> Path:
        return self._base_dir

    def resolve(self, path: str) -> Path:
        p = Path(path)
        return p if p.is_absolute() else self._base_dir / p

    @property
    def out_dir(self) -> Path:
        return self.resolve(self.output_dir)

    def fit_options(self, seed: int) -> FitOptions:
        return FitOptions(
            max_iters=self.fit.max_iters, tol=self.fit.tol, epsilon=self.fit.epsilon, seed=seed
        )

    def hierarchy_spec(self, seed: int) -> HierarchySpec:
        lam = self.supervision.lam if self.supervision is not None else 1.0
        return HierarchySpec(ranks=self.ranks, options=[self.fit_options(seed)], lam=lam)

    def with_overrides(self, seed: Optional[int] = None, out: Optional[str] = None) -> "RunConfig":
        """Copy with CLI --seed / --out applied (a seed replaces the seed list)"""
        update = {}
        if seed is not None:
            if seed < 0:
                raise ConfigError("--seed must be >= 0")
            update["seeds"] = [seed]
        if out is not None:
            update["output_dir"] = str(Path(out).resolve())
        copy = self.model_copy(update=update)
        copy._base_dir = self._base_dir
        return copy

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        """Parse a .toml or .json config; any problem becomes a ConfigError"""
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"Cannot read config {path}: {exc.strerror or exc}") from exc
        try:
            if path.suffix.lower() == ".json":
                data = json.loads(text)
            else:
                data = tomllib.loads(text)
        except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
            raise ConfigError(f"Cannot parse config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"Config {path} must hold a table/object at the top level")
        try:
            config = cls.model_validate(data)
        except ValidationError as exc:
            raise ConfigError.from_validation_error(str(path), exc) from exc
        config._base_dir = path.resolve().parent
        return config
