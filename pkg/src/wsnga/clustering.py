"""Chromosome decoding and clustering fitness.

A chromosome is a boolean vector with one entry per node; ``True`` marks a
cluster head. Every alive regular node joins its nearest alive head (lowest
head id on ties). Dead nodes are ignored whatever their bit says.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from numba import njit

from .energy import RadioModel, receive_energy
from .network import Deployment, total_distance


class DegenerateChromosome(ValueError):
    """Raised when a chromosome selects no alive cluster head."""


@dataclass
class Chromosome:
    bits: np.ndarray
    fitness: float | None = None

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=bool).copy()

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return bits_to_string(self.bits)

    @classmethod
    def from_string(cls, text: str) -> Chromosome:
        return cls(bits_from_string(text))


def bits_to_string(bits) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bits, dtype=bool))


def bits_from_string(text: str) -> np.ndarray:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a bit string: {text!r}")
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) == ord("1")


@dataclass(frozen=True)
class ClusterAssignment:
    head_ids: frozenset[int]
    member_of: dict[int, int] = field(hash=False)

    @property
    def head_count(self) -> int:
        return len(self.head_ids)

    def members(self, head: int) -> list[int]:
        return sorted(v for v, h in self.member_of.items() if h == head)


@dataclass(frozen=True)
class FitnessBreakdown:
    F: float
    E: float
    TD: float
    RCSD: float
    TCH: int
    N: int


@dataclass(frozen=True)
class FitnessKind:
    """Which fitness formula to use.

    ``eq2`` is the raw form ``1/E + (TD - RCSD) + (N - TCH)``. ``eq3`` and
    ``weights`` use the normalised form
    ``wE/E + wD*(TD - RCSD)/TD + wC*(N - TCH)/N``; ``eq3`` fixes the weights
    at (100, 1, 1).
    """

    name: str = "eq3"
    weights: tuple[float, float, float] = (100.0, 1.0, 1.0)

    def __post_init__(self):
        if self.name not in ("eq2", "eq3", "weights"):
            raise ValueError(f"unknown fitness kind {self.name!r}")
        w = tuple(float(x) for x in self.weights)
        if len(w) != 3 or not all(np.isfinite(w)):
            raise ValueError("fitness weights must be three finite numbers")
        if self.name == "eq3":
            w = (100.0, 1.0, 1.0)
        object.__setattr__(self, "weights", w)

    @classmethod
    def generalized(cls, w_energy, w_distance, w_count) -> FitnessKind:
        return cls("weights", (w_energy, w_distance, w_count))

    @classmethod
    def parse(cls, text: str) -> FitnessKind:
        """Parse ``eq2``, ``eq3`` or ``weights:wE,wD,wC`` (also ``wE,wD,wC``)."""
        text = text.strip()
        if text in ("eq2", "eq3"):
            return cls(text)
        body = text.split(":", 1)[1] if text.startswith("weights") else text
        parts = [p for p in body.replace(" ", "").split(",") if p]
        if len(parts) != 3:
            raise ValueError(f"cannot parse fitness {text!r}")
        return cls.generalized(*map(float, parts))

    def __str__(self):
        if self.name == "weights":
            return "weights:" + ",".join(f"{w:g}" for w in self.weights)
        return self.name


EQ2 = FitnessKind("eq2")
EQ3 = FitnessKind("eq3")


def fallback_head(deployment: Deployment) -> int:
    """Alive node closest to the sink (lowest id on ties)."""
    alive = deployment.alive
    if not alive.any():
        raise DegenerateChromosome("no alive node to promote to cluster head")
    d = np.where(alive, deployment.sink_distances, np.inf)
    return int(np.argmin(d))


def repair(bits, deployment: Deployment) -> np.ndarray:
    """Return a copy of ``bits`` where every row has an alive head.

    Rows without one get the bit of :func:`fallback_head` set. Works on a
    single chromosome or a ``(P, N)`` population.
    """
    out = np.array(bits, dtype=bool)
    empty = ~(out & deployment.alive).any(axis=-1)
    if np.any(empty):
        out[..., fallback_head(deployment)] |= empty
    return out


@njit(cache=True)
def _cluster_kernel(heads, alive, dist, sink_dist):
    """Decode every row and accumulate the per-row distance statistics."""
    pop, n = heads.shape
    owner = np.full((pop, n), -1, dtype=np.intp)
    rcsd = np.zeros(pop)
    sq = np.zeros(pop)
    members = np.zeros(pop, dtype=np.int64)
    nonempty = np.zeros(pop, dtype=np.int64)
    idx = np.empty(n, dtype=np.intp)
    used = np.zeros(n, dtype=np.bool_)
    for p in range(pop):
        k = 0
        for j in range(n):
            used[j] = False
            if heads[p, j]:
                idx[k] = j
                k += 1
        for i in range(n):
            if not alive[i]:
                continue
            if heads[p, i]:
                owner[p, i] = i
                rcsd[p] += sink_dist[i]
                sq[p] += sink_dist[i] * sink_dist[i]
                continue
            best = idx[0]
            best_d = dist[i, best]
            # ascending head ids with strict '<' keeps the lowest id on ties
            for t in range(1, k):
                d = dist[i, idx[t]]
                if d < best_d:
                    best_d = d
                    best = idx[t]
            owner[p, i] = best
            rcsd[p] += best_d
            sq[p] += best_d * best_d
            members[p] += 1
            if not used[best]:
                used[best] = True
                nonempty[p] += 1
    return owner, rcsd, sq, members, nonempty


def _stats(bits, deployment: Deployment):
    heads = np.ascontiguousarray(np.atleast_2d(np.asarray(bits, dtype=bool)) & deployment.alive)
    if not heads.any(axis=1).all():
        raise DegenerateChromosome("chromosome has no alive cluster head")
    return heads, _cluster_kernel(heads, deployment.alive, deployment.pairwise_distances, deployment.sink_distances)


def nearest_heads(bits, deployment: Deployment) -> np.ndarray:
    """Head index serving each node, for a ``(P, N)`` batch of chromosomes.

    Heads serve themselves; dead nodes get ``-1``.
    """
    return _stats(bits, deployment)[1][0]


def nearest_heads_reference(bits, deployment: Deployment) -> np.ndarray:
    """Plain numpy version of :func:`nearest_heads`."""
    bits = np.atleast_2d(np.asarray(bits, dtype=bool))
    alive = deployment.alive
    heads = bits & alive
    if not heads.any(axis=1).all():
        raise DegenerateChromosome("chromosome has no alive cluster head")
    dist = deployment.pairwise_distances
    out = np.empty(heads.shape, dtype=np.intp)
    for r, row in enumerate(heads):
        idx = np.flatnonzero(row)
        out[r] = idx[np.argmin(dist[:, idx], axis=1)]
    rows, cols = np.nonzero(heads)
    out[rows, cols] = cols
    out[:, ~alive] = -1
    return out


def decode(chromosome, deployment: Deployment) -> ClusterAssignment:
    bits = chromosome.bits if isinstance(chromosome, Chromosome) else np.asarray(chromosome, dtype=bool)
    if bits.shape != (deployment.node_count,):
        raise ValueError(f"chromosome length {bits.size} != node count {deployment.node_count}")
    owner = nearest_heads(bits, deployment)[0]
    heads = frozenset(int(i) for i in np.flatnonzero(bits & deployment.alive))
    member_of = {
        int(v): int(h) for v, h in enumerate(owner) if h >= 0 and v not in heads
    }
    return ClusterAssignment(heads, member_of)


def rcsd(assignment: ClusterAssignment, deployment: Deployment) -> float:
    """Member-to-head distances plus head-to-sink distances."""
    dist = deployment.pairwise_distances
    total = sum(dist[v, h] for v, h in assignment.member_of.items())
    total += sum(deployment.sink_distances[h] for h in assignment.head_ids)
    return float(total)


class BatchFitness(NamedTuple):
    F: np.ndarray
    E: np.ndarray
    RCSD: np.ndarray
    TCH: np.ndarray
    TD: float
    N: int


def evaluate_batch(
    bits, deployment: Deployment, radio: RadioModel, kind: FitnessKind = EQ3
) -> BatchFitness:
    """Fitness of every row of a ``(P, N)`` boolean population.

    Rows must already contain an alive head (see :func:`repair`).
    """
    heads, (_, rcsd_, sq, n_members, nonempty) = _stats(bits, deployment)
    pop = len(heads)
    k = deployment.config.packet_bits
    n_alive = int(deployment.alive.sum())
    receptions = n_members if radio.count_all_receptions else n_members - nonempty
    # every alive node transmits exactly once: to its head, or a head to the sink
    energy = (
        n_alive * k * radio.electronics_energy
        + k * radio.amplifier_energy * sq
        + receptions * receive_energy(radio, k)
    )

    tch = heads.sum(axis=1)
    td = total_distance(deployment)
    with np.errstate(divide="ignore", invalid="ignore"):
        if kind.name == "eq2":
            f = 1.0 / energy + (td - rcsd_) + (n_alive - tch)
        else:
            w_e, w_d, w_c = kind.weights
            e_term = np.zeros(pop) if w_e == 0 else w_e / energy
            d_term = w_d * (td - rcsd_) / td if td > 0 else np.zeros(pop)
            f = e_term + d_term + w_c * (n_alive - tch) / n_alive
    return BatchFitness(f, energy, rcsd_, tch, td, n_alive)


def _breakdown(chromosome, deployment, radio, kind) -> FitnessBreakdown:
    bits = chromosome.bits if isinstance(chromosome, Chromosome) else np.asarray(chromosome, dtype=bool)
    if bits.shape != (deployment.node_count,):
        raise ValueError(f"chromosome length {bits.size} != node count {deployment.node_count}")
    r = evaluate_batch(bits[None, :], deployment, radio, kind)
    out = FitnessBreakdown(float(r.F[0]), float(r.E[0]), r.TD, float(r.RCSD[0]), int(r.TCH[0]), r.N)
    if isinstance(chromosome, Chromosome):
        chromosome.fitness = out.F
    return out


def fitness_eq2(chromosome, deployment: Deployment, radio: RadioModel) -> FitnessBreakdown:
    return _breakdown(chromosome, deployment, radio, EQ2)


def fitness_eq3(chromosome, deployment: Deployment, radio: RadioModel) -> FitnessBreakdown:
    return _breakdown(chromosome, deployment, radio, EQ3)


def generalized_fitness(
    weights, chromosome, deployment: Deployment, radio: RadioModel
) -> FitnessBreakdown:
    return _breakdown(chromosome, deployment, radio, FitnessKind.generalized(*weights))


def fitness(chromosome, deployment: Deployment, radio: RadioModel, kind: FitnessKind = EQ3) -> FitnessBreakdown:
    return _breakdown(chromosome, deployment, radio, kind)
