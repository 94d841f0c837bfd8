"""Sensor field model: nodes, sink and seeded uniform deployments."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Sequence

import numpy as np

DEFAULT_INITIAL_ENERGY = 0.5


@dataclass(frozen=True)
class NetworkConfig:
    """Geometry of the sensor field.

    The field is a ``field_width`` x ``field_height`` rectangle centred on
    ``field_center``. By default the sink sits at the centre, (0, 0).
    """

    node_count: int = 200
    field_width: float = 200.0
    field_height: float = 200.0
    sink_position: tuple[float, float] = (0.0, 0.0)
    seed: int = 0
    packet_bits: int = 2000
    field_center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise ValueError(f"node_count must be a positive integer, got {self.node_count}")
        if not (self.field_width > 0 and self.field_height > 0):
            raise ValueError("field dimensions must be positive")
        if int(self.packet_bits) != self.packet_bits or self.packet_bits <= 0:
            raise ValueError(f"packet_bits must be a positive integer, got {self.packet_bits}")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "sink_position", tuple(float(v) for v in self.sink_position))
        object.__setattr__(self, "field_center", tuple(float(v) for v in self.field_center))

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        """(xmin, xmax, ymin, ymax) of the field rectangle."""
        cx, cy = self.field_center
        hw, hh = self.field_width / 2, self.field_height / 2
        return cx - hw, cx + hw, cy - hh, cy + hh


@dataclass(frozen=True)
class Node:
    id: int
    position: tuple[float, float]
    residual_energy: float

    @property
    def alive(self) -> bool:
        return self.residual_energy > 0


@dataclass(frozen=True, eq=False)
class Deployment:
    """An immutable snapshot of the network.

    ``positions`` is an ``(N, 2)`` array and ``energies`` an ``(N,)`` array of
    residual energies. A node is alive while its residual energy is positive.
    """

    config: NetworkConfig
    positions: np.ndarray
    energies: np.ndarray = field(default=None)

    def __post_init__(self):
        pos = np.array(self.positions, dtype=float)
        if pos.shape != (self.config.node_count, 2):
            raise ValueError(
                f"positions must have shape ({self.config.node_count}, 2), got {pos.shape}"
            )
        if self.energies is None:
            en = np.full(len(pos), DEFAULT_INITIAL_ENERGY)
        else:
            en = np.maximum(np.array(self.energies, dtype=float), 0.0)
            if en.shape != (len(pos),):
                raise ValueError("energies must have one entry per node")
        pos.setflags(write=False)
        en.setflags(write=False)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "energies", en)

    @property
    def node_count(self) -> int:
        return self.config.node_count

    @property
    def sink(self) -> np.ndarray:
        return np.asarray(self.config.sink_position)

    @property
    def nodes(self) -> list[Node]:
        return [
            Node(i, (float(x), float(y)), float(e))
            for i, ((x, y), e) in enumerate(zip(self.positions, self.energies))
        ]

    @cached_property
    def alive(self) -> np.ndarray:
        mask = self.energies > 0
        mask.setflags(write=False)
        return mask

    @cached_property
    def sink_distances(self) -> np.ndarray:
        d = np.hypot(*(self.positions - self.sink).T)
        d.setflags(write=False)
        return d

    @cached_property
    def pairwise_distances(self) -> np.ndarray:
        diff = self.positions[:, None, :] - self.positions[None, :, :]
        d = np.hypot(diff[..., 0], diff[..., 1])
        d.setflags(write=False)
        return d

    def with_energies(self, energies) -> Deployment:
        return Deployment(self.config, self.positions, energies)

    def subset(self, ids: Sequence[int]) -> Deployment:
        """Deployment restricted to ``ids``, renumbered 0..len(ids)-1."""
        ids = np.asarray(ids, dtype=int)
        cfg = replace(self.config, node_count=len(ids))
        return Deployment(cfg, self.positions[ids], self.energies[ids])

    # -- serialisation ----------------------------------------------------

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "seed": cfg.seed,
            "field": {
                "width": cfg.field_width,
                "height": cfg.field_height,
                "center": list(cfg.field_center),
            },
            "sink": list(cfg.sink_position),
            "packet_bits": cfg.packet_bits,
            "nodes": [
                {"id": i, "x": float(x), "y": float(y), "energy": float(e)}
                for i, ((x, y), e) in enumerate(zip(self.positions, self.energies))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> Deployment:
        nodes = sorted(doc["nodes"], key=lambda n: n["id"])
        if [n["id"] for n in nodes] != list(range(len(nodes))):
            raise ValueError("node ids must be 0..N-1 without gaps")
        fld = doc["field"]
        cfg = NetworkConfig(
            node_count=len(nodes),
            field_width=fld["width"],
            field_height=fld["height"],
            field_center=tuple(fld.get("center", (0.0, 0.0))),
            sink_position=tuple(doc["sink"]),
            seed=doc["seed"],
            packet_bits=doc.get("packet_bits", NetworkConfig.packet_bits),
        )
        pos = [(n["x"], n["y"]) for n in nodes]
        return cls(cfg, pos, [n["energy"] for n in nodes])

    @classmethod
    def from_json(cls, text: str) -> Deployment:
        return cls.from_dict(json.loads(text))


def generate_deployment(
    config: NetworkConfig, initial_energy: float = DEFAULT_INITIAL_ENERGY
) -> Deployment:
    """Scatter ``config.node_count`` nodes uniformly over the field.

    Positions come from ``numpy.random.default_rng(config.seed)`` (PCG64),
    x coordinates first, then y, so equal seeds give bit-identical layouts.
    """
    if config.node_count < 2:
        raise ValueError("a deployment needs at least two nodes")
    rng = np.random.default_rng(config.seed)
    xmin, xmax, ymin, ymax = config.bounds
    n = config.node_count
    xs = rng.uniform(xmin, xmax, n)
    ys = rng.uniform(ymin, ymax, n)
    return Deployment(config, np.column_stack([xs, ys]), np.full(n, float(initial_energy)))


def distance(a, b) -> float:
    """Euclidean distance between two planar points."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


def total_distance(deployment: Deployment) -> float:
    """Sum of direct node-to-sink distances over alive nodes (TD)."""
    return float(deployment.sink_distances[deployment.alive].sum())
