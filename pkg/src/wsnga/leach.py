"""LEACH rotating cluster heads, used as the comparison baseline."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clustering import fallback_head
from .energy import RadioModel
from .network import Deployment
from .traffic import RoundOutcome, serve_round


@dataclass(frozen=True)
class LeachParams:
    head_probability: float = 0.05

    def __post_init__(self):
        if not 0 < self.head_probability < 1:
            raise ValueError("head_probability must lie in (0, 1)")

    @property
    def round_length(self) -> int:
        """Rounds per rotation cycle, ceil(1/P)."""
        # 1/0.05 is 20.000000000000004 in floating point
        return math.ceil(round(1 / self.head_probability, 9))


@dataclass
class LeachState:
    """Which nodes already served as head in the current cycle."""

    served: np.ndarray

    @classmethod
    def fresh(cls, node_count: int) -> LeachState:
        return cls(np.zeros(node_count, dtype=bool))


def threshold(params: LeachParams, round_index: int) -> float:
    p = params.head_probability
    return min(1.0, p / (1 - p * (round_index % params.round_length)))


def leach_elect_heads(
    round_index: int,
    deployment: Deployment,
    params: LeachParams,
    state: LeachState,
    rng: np.random.Generator,
) -> np.ndarray:
    """Elect this round's heads and mark them as served.

    Each alive node that has not served this cycle becomes head with
    probability ``P / (1 - P * (r mod ceil(1/P)))``. If nobody is elected the
    eligible node nearest the sink is forced to serve (any alive node once
    every node has served).
    """
    if round_index % params.round_length == 0:
        state.served[:] = False
    alive = deployment.alive
    eligible = alive & ~state.served
    draws = rng.random(deployment.node_count)
    heads = eligible & (draws < threshold(params, round_index))
    if not heads.any() and alive.any():
        pool = eligible if eligible.any() else alive
        heads[fallback_head(deployment.with_energies(np.where(pool, deployment.energies, 0.0)))] = True
    state.served |= heads
    return heads


def leach_round(
    deployment: Deployment,
    radio: RadioModel,
    params: LeachParams,
    state: LeachState,
    rng: np.random.Generator,
    round_index: int,
) -> RoundOutcome:
    heads = leach_elect_heads(round_index, deployment, params, state, rng)
    return serve_round(deployment, heads, radio)
