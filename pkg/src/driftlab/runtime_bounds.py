"""Hitting-time bound calculators from the standard drift theorems.

These consume a drift strength delta supplied by the caller; establishing
that the drift hypothesis actually holds is the drift engine's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BoundPrediction",
    "additive_time_bound",
    "multiplicative_time_bound",
    "onemax_drift_lower",
]


@dataclass(frozen=True, slots=True)
class BoundPrediction:
    """A bound value together with the inputs that produced it."""

    kind: str
    inputs: dict
    bound: float

    def __post_init__(self) -> None:
        if not self.bound > 0:
            raise ValueError(f"bound must be positive, got {self.bound}")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "inputs": dict(self.inputs), "bound": self.bound}


def additive_time_bound(initial: float, delta: float) -> float:
    """E[T] <= initial/delta when the potential drops by >= delta per step."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    if not initial > 0:
        raise ValueError(f"initial must be positive, got {initial}")
    return initial / delta


def multiplicative_time_bound(s0: float, s_min: float, delta: float) -> float:
    """E[T] <= (1 + ln(s0/s_min))/delta under proportional expected decrease.

    s0 is the starting potential, s_min the smallest positive value the
    potential can take.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    if not (s0 >= s_min > 0):
        raise ValueError(f"need s0 >= s_min > 0, got s0={s0}, s_min={s_min}")
    return (1.0 + math.log(s0 / s_min)) / delta


def onemax_drift_lower(k: int, n: int) -> float:
    """Lower bound (e-2)k/(en) on the expected one-step drop of the number
    of ones, at mutation rate 1/n, for states with k ones."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    return (math.e - 2.0) * k / (math.e * n)
