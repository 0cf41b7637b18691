"""Hybrid genetic search for vehicle routing."""

from ._core import (
    InvalidModelError,
    MaxIterations,
    MaxRuntime,
    Model,
    NoImprovement,
    Result,
    StoppingCriterion,
)

__all__ = [
    "InvalidModelError",
    "MaxIterations",
    "MaxRuntime",
    "Model",
    "NoImprovement",
    "Result",
    "StoppingCriterion",
]
