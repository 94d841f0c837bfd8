"""First-order radio model and per-cluster transfer energy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RadioModel:
    """Radio constants, all per bit.

    Transmitting ``k`` bits over ``d`` metres costs
    ``k * electronics_energy + k * amplifier_energy * d**2``; receiving costs
    ``k * electronics_energy``. ``aggregation_energy`` is charged per bit a
    cluster head receives during lifetime simulation and never enters the
    clustering fitness.

    ``count_all_receptions`` switches the receive term of the cluster energy
    from ``(m - 1)`` receptions to ``m``.
    """

    electronics_energy: float = 50e-9
    amplifier_energy: float = 100e-12
    initial_node_energy: float = 0.5
    aggregation_energy: float = 5e-9
    count_all_receptions: bool = False

    def __post_init__(self):
        for name in ("electronics_energy", "amplifier_energy", "aggregation_energy"):
            if not getattr(self, name) >= 0:
                raise ValueError(f"{name} must be non-negative")
        if not self.initial_node_energy > 0:
            raise ValueError("initial_node_energy must be positive")


def _check_bits(bits):
    if int(bits) != bits or bits <= 0:
        raise ValueError(f"bits must be a positive integer, got {bits}")


def transmit_energy(model: RadioModel, bits: int, d):
    """Energy to send ``bits`` over distance ``d`` (scalar or array)."""
    _check_bits(bits)
    d = np.asarray(d, dtype=float)
    if np.any(d < 0):
        raise ValueError("distance must be non-negative")
    e = bits * model.electronics_energy + bits * model.amplifier_energy * d * d
    return float(e) if e.ndim == 0 else e


def receive_energy(model: RadioModel, bits: int) -> float:
    _check_bits(bits)
    return bits * model.electronics_energy


def cluster_transfer_energy(
    model: RadioModel, member_distances_to_head, head_to_sink: float, bits: int
) -> float:
    """Energy to move one round of a cluster's data to the sink.

    Members transmit to the head, the head receives ``m - 1`` packets (``m``
    with ``count_all_receptions``), then forwards one packet to the sink.
    """
    member_d = np.asarray(member_distances_to_head, dtype=float).reshape(-1)
    m = member_d.size
    receptions = m if model.count_all_receptions else max(m - 1, 0)
    members = float(np.sum(transmit_energy(model, bits, member_d))) if m else 0.0
    return members + receptions * receive_energy(model, bits) + transmit_energy(model, bits, head_to_sink)
