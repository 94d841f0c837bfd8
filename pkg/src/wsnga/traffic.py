"""One round of data collection: members -> heads -> sink."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clustering import nearest_heads
from .energy import RadioModel, receive_energy, transmit_energy
from .network import Deployment


@dataclass(frozen=True)
class RoundOutcome:
    deployment: Deployment
    spent: np.ndarray
    heads: np.ndarray
    owner: np.ndarray

    @property
    def energy(self) -> float:
        return float(self.spent.sum())


def round_costs(deployment: Deployment, heads, owner, radio: RadioModel) -> np.ndarray:
    """Energy each node would spend this round.

    Every alive member sends one packet to its head. Each head receives its
    members' packets, pays aggregation per received bit and sends a single
    fused packet to the sink. Dead nodes cost nothing.
    """
    k = deployment.config.packet_bits
    alive = deployment.alive
    heads = np.asarray(heads, dtype=bool) & alive
    members = alive & ~heads
    cost = np.zeros(deployment.node_count)
    if not alive.any():
        return cost
    ids = np.flatnonzero(members)
    cost[ids] = transmit_energy(radio, k, deployment.pairwise_distances[ids, owner[ids]])
    received = np.bincount(owner[ids], minlength=deployment.node_count)
    h = np.flatnonzero(heads)
    cost[h] = (
        transmit_energy(radio, k, deployment.sink_distances[h])
        + received[h] * (receive_energy(radio, k) + k * radio.aggregation_energy)
    )
    return cost


def serve_round(deployment: Deployment, heads, radio: RadioModel, owner=None) -> RoundOutcome:
    """Run one round and return the drained deployment.

    ``owner`` maps nodes to heads; when omitted members join their nearest
    alive head. A node never spends more than it has left, so the energy
    removed from the nodes equals ``outcome.energy`` exactly.
    """
    heads = np.asarray(heads, dtype=bool) & deployment.alive
    if owner is None:
        owner = nearest_heads(heads, deployment)[0] if heads.any() else np.full(deployment.node_count, -1)
    spent = np.minimum(round_costs(deployment, heads, owner, radio), deployment.energies)
    drained = deployment.with_energies(deployment.energies - spent)
    return RoundOutcome(drained, spent, heads, owner)
