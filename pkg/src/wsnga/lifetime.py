"""Round-by-round network lifetime under GA clustering or LEACH."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .clustering import nearest_heads
from .energy import RadioModel
from .ga import GAParams, evolve
from .leach import LeachParams, LeachState, leach_round
from .network import Deployment
from .traffic import serve_round

ROUND_COLUMNS = ("round", "alive_count", "cumulative_energy_J", "heads")
SURVIVED = "survived"


@dataclass(frozen=True)
class LifetimeConfig:
    total_rounds: int = 1100
    rounds_per_configuration: int = 20
    protocol: str = "ga"
    ga: GAParams = field(default_factory=GAParams)
    leach: LeachParams = field(default_factory=LeachParams)

    def __post_init__(self):
        if self.total_rounds < 1:
            raise ValueError("total_rounds must be at least 1")
        if self.rounds_per_configuration < 1:
            raise ValueError("rounds_per_configuration must be at least 1")
        if self.protocol not in ("ga", "leach"):
            raise ValueError(f"protocol must be 'ga' or 'leach', got {self.protocol!r}")


@dataclass(frozen=True)
class RoundRecord:
    round: int
    alive_count: int
    cumulative_energy: float
    heads_this_round: int


@dataclass
class LifetimeRun:
    records: list[RoundRecord]
    node_count: int
    spent_per_node: np.ndarray
    final: Deployment
    reclusterings: int = 0


def _ga_clustering(deployment: Deployment, radio, params: GAParams, seed) -> tuple[np.ndarray, np.ndarray]:
    """Cluster the alive nodes with the GA; returns (heads mask, owner) over all nodes."""
    ids = np.flatnonzero(deployment.alive)
    sub = deployment.subset(ids)
    result = evolve(sub, radio, params, seed)
    heads = np.zeros(deployment.node_count, dtype=bool)
    heads[ids[result.best.bits]] = True
    return heads, nearest_heads(heads, deployment)[0]


def run_lifetime(
    deployment: Deployment, radio: RadioModel, config: LifetimeConfig = LifetimeConfig(), seed: int = 0
) -> LifetimeRun:
    """Simulate up to ``config.total_rounds`` rounds, stopping once every node is dead.

    GA mode re-clusters the surviving nodes every ``rounds_per_configuration``
    rounds and as soon as a serving head dies. Each re-clustering draws a
    fresh GA seed from ``seed``; LEACH draws its elections from the same root.
    """
    root = np.random.SeedSequence(seed)
    current = deployment
    spent_total = np.zeros(deployment.node_count)
    cumulative = 0.0
    records: list[RoundRecord] = []
    heads = owner = None
    age = 0
    reclusterings = 0
    if config.protocol == "leach":
        state = LeachState.fresh(deployment.node_count)
        rng = np.random.default_rng(root.spawn(1)[0])

    for rnd in range(1, config.total_rounds + 1):
        if not current.alive.any():
            records.append(RoundRecord(rnd, 0, cumulative, 0))
            break
        if config.protocol == "leach":
            outcome = leach_round(current, radio, config.leach, state, rng, rnd - 1)
        else:
            stale = heads is None or age >= config.rounds_per_configuration or not current.alive[heads].all()
            if stale:
                heads, owner = _ga_clustering(current, radio, config.ga, root.spawn(1)[0])
                age = 0
                reclusterings += 1
            outcome = serve_round(current, heads, radio, owner)
            age += 1
        current = outcome.deployment
        spent_total += outcome.spent
        cumulative += outcome.energy
        records.append(RoundRecord(rnd, int(current.alive.sum()), cumulative, int(outcome.heads.sum())))

    return LifetimeRun(records, deployment.node_count, spent_total, current, reclusterings)


def lifetime_summary(records: list[RoundRecord], node_count: int) -> dict:
    """First and last node-death rounds plus total energy.

    A death round that never happened is reported as ``"survived"``.
    """
    if not records:
        raise ValueError("no round records")
    first = next((r.round for r in records if r.alive_count < node_count), SURVIVED)
    last = next((r.round for r in records if r.alive_count == 0), SURVIVED)
    return {
        "first_death_round": first,
        "last_death_round": last,
        "total_energy_J": records[-1].cumulative_energy,
    }


def rounds_csv(records: list[RoundRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ROUND_COLUMNS)
    for r in records:
        w.writerow([r.round, r.alive_count, repr(r.cumulative_energy), r.heads_this_round])
    return buf.getvalue()


def write_rounds_csv(records: list[RoundRecord], path) -> Path:
    path = Path(path)
    path.write_text(rounds_csv(records))
    return path


def read_rounds_csv(path) -> list[RoundRecord]:
    with open(path, newline="") as fh:
        return [
            RoundRecord(int(r["round"]), int(r["alive_count"]), float(r["cumulative_energy_J"]), int(r["heads"]))
            for r in csv.DictReader(fh)
        ]


def write_summary_json(summary: dict, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(summary, indent=2) + "\n")
    return path
