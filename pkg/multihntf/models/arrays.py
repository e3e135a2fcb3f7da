"""Annotated numpy field types for pydantic models"""

from typing import Annotated

import numpy as np
from pydantic import BeforeValidator, PlainSerializer


def as_readonly_array(value) -> np.ndarray:
    """Copy into a float64 array that cannot be modified in place"""
    arr = np.array(value, dtype=np.float64, copy=True)
    arr.setflags(write=False)
    return arr


def _to_nested_list(arr: np.ndarray) -> list:
    return arr.tolist()


# Coerced from any array-like (JSON lists included), dumped as nested lists, so
# models round-trip through model_dump_json / json.loads + model_validate.
FloatArray = Annotated[
    np.ndarray,
    BeforeValidator(as_readonly_array),
    PlainSerializer(_to_nested_list, return_type=list),
]
