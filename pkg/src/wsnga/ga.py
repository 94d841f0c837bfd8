"""Generational genetic algorithm for cluster-head selection."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .clustering import (
    EQ3,
    Chromosome,
    FitnessBreakdown,
    FitnessKind,
    bits_to_string,
    evaluate_batch,
    repair,
)
from .energy import RadioModel
from .network import Deployment

METRICS_COLUMNS = ("generation", "best_F", "mean_F", "best_TCH", "best_RCSD", "best_E", "best_chromosome")


@dataclass(frozen=True)
class GAParams:
    population_size: int = 100
    crossover_rate: float = 0.8
    mutation_rate: float = 0.3
    generations: int = 200
    elitism_count: int = 1
    fitness_kind: FitnessKind = field(default=EQ3)
    initial_head_probability: float = 0.5

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be positive")
        if self.generations < 1:
            raise ValueError("generations must be positive")
        for name in ("crossover_rate", "mutation_rate", "initial_head_probability"):
            if not 0 <= getattr(self, name) <= 1:
                raise ValueError(f"{name} must lie in [0, 1]")
        if not 0 <= self.elitism_count < self.population_size:
            raise ValueError("elitism_count must be in [0, population_size)")
        if isinstance(self.fitness_kind, str):
            object.__setattr__(self, "fitness_kind", FitnessKind.parse(self.fitness_kind))


@dataclass
class Population:
    bits: np.ndarray
    fitness: np.ndarray
    generation_index: int = 0

    def __len__(self):
        return len(self.bits)

    def chromosome(self, i: int) -> Chromosome:
        return Chromosome(self.bits[i], float(self.fitness[i]))


@dataclass(frozen=True)
class GenerationMetrics:
    generation: int
    best_F: float
    mean_F: float
    best_TCH: int
    best_RCSD: float
    best_E: float
    best_chromosome: str

    def row(self) -> list[str]:
        return [
            str(self.generation),
            repr(self.best_F),
            repr(self.mean_F),
            str(self.best_TCH),
            repr(self.best_RCSD),
            repr(self.best_E),
            self.best_chromosome,
        ]


@dataclass
class EvolutionResult:
    metrics: list[GenerationMetrics]
    best: Chromosome
    breakdown: FitnessBreakdown


def roulette_probabilities(fitness) -> np.ndarray:
    """Selection probability of each individual.

    If any fitness is non-positive, all values are shifted down by the
    minimum first. A wheel with zero total weight becomes uniform.
    """
    f = np.asarray(fitness, dtype=float)
    w = f - f.min() if np.any(f <= 0) else f
    total = w.sum()
    if not np.isfinite(total) or total <= 0:
        return np.full(len(f), 1.0 / len(f))
    return w / total


def roulette_select(fitness, rng: np.random.Generator, n_pairs: int | None = None) -> np.ndarray:
    """Spin the wheel twice per pair; returns ``(2,)`` or ``(n_pairs, 2)`` indices.

    Draws are independent, so both parents of a pair may be the same individual.
    """
    if isinstance(fitness, Population):
        fitness = fitness.fitness
    p = roulette_probabilities(fitness)
    cum = np.cumsum(p)
    shape = (2,) if n_pairs is None else (n_pairs, 2)
    u = rng.random(shape) * cum[-1]
    idx = np.searchsorted(cum, u, side="right")
    # rounding can push u onto the last edge; never land on a zero-weight tail
    return np.minimum(idx, np.flatnonzero(p > 0)[-1])


def crossover_at(parent_a, parent_b, cut: int) -> tuple[np.ndarray, np.ndarray]:
    """Swap the suffixes of two chromosomes after position ``cut``."""
    a, b = np.asarray(parent_a, dtype=bool), np.asarray(parent_b, dtype=bool)
    if a.shape != b.shape:
        raise ValueError(f"parent lengths differ: {a.shape} vs {b.shape}")
    c1, c2 = a.copy(), b.copy()
    c1[..., cut:], c2[..., cut:] = b[..., cut:], a[..., cut:]
    return c1, c2


def single_point_crossover(
    parent_a, parent_b, crossover_rate: float, rng: np.random.Generator, deployment: Deployment | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """One-point crossover of a pair, or of matching rows of two ``(M, N)`` arrays.

    Each pair crosses with probability ``crossover_rate`` at a cut drawn
    uniformly from ``1..N-1``; otherwise both parents are copied. Pass
    ``deployment`` to repair head-less offspring.
    """
    a, b = np.asarray(parent_a, dtype=bool), np.asarray(parent_b, dtype=bool)
    if a.shape != b.shape:
        raise ValueError(f"parent lengths differ: {a.shape} vs {b.shape}")
    a2, b2 = np.atleast_2d(a), np.atleast_2d(b)
    m, n = a2.shape
    do = rng.random(m) < crossover_rate
    cuts = rng.integers(1, n, size=m) if n > 1 else np.ones(m, dtype=int)
    # cut == n leaves the rows untouched
    cuts = np.where(do & (n > 1), cuts, n)
    swap = np.arange(n)[None, :] >= cuts[:, None]
    c1 = np.where(swap, b2, a2)
    c2 = np.where(swap, a2, b2)
    if deployment is not None:
        c1, c2 = repair(c1, deployment), repair(c2, deployment)
    if a.ndim == 1:
        return c1[0], c2[0]
    return c1, c2


def mutate(chromosome, mutation_rate: float, rng: np.random.Generator, deployment: Deployment | None = None) -> np.ndarray:
    """Flip every bit independently with probability ``mutation_rate``."""
    bits = np.asarray(chromosome, dtype=bool)
    flips = rng.random(bits.shape) < mutation_rate
    out = bits ^ flips
    return repair(out, deployment) if deployment is not None else out


def _metrics(gen: int, bits, result) -> GenerationMetrics:
    i = int(np.argmax(result.F))
    return GenerationMetrics(
        gen,
        float(result.F[i]),
        float(np.mean(result.F)),
        int(result.TCH[i]),
        float(result.RCSD[i]),
        float(result.E[i]),
        bits_to_string(bits[i]),
    )


def evolve(
    deployment: Deployment,
    radio: RadioModel,
    params: GAParams = GAParams(),
    seed: int | np.random.SeedSequence = 0,
) -> EvolutionResult:
    """Run the GA and return the metrics trace and best chromosome found.

    Generation 0 is the random initial population, so the trace holds
    ``params.generations + 1`` records. Elites carry their cached fitness
    over unchanged, which keeps the best fitness non-decreasing whenever
    ``elitism_count >= 1``.
    """
    rng = np.random.default_rng(seed)
    alive = deployment.alive
    pop_size, n = params.population_size, deployment.node_count
    kind = params.fitness_kind

    bits = repair((rng.random((pop_size, n)) < params.initial_head_probability) & alive, deployment)
    res = evaluate_batch(bits, deployment, radio, kind)
    metrics = [_metrics(0, bits, res)]
    best_i = int(np.argmax(res.F))
    best_bits, best_f = bits[best_i].copy(), float(res.F[best_i])

    for gen in range(1, params.generations + 1):
        order = np.argsort(-res.F, kind="stable")
        elite = order[: params.elitism_count]
        n_children = pop_size - len(elite)
        n_pairs = (n_children + 1) // 2
        parents = roulette_select(res.F, rng, n_pairs)
        c1, c2 = single_point_crossover(bits[parents[:, 0]], bits[parents[:, 1]], params.crossover_rate, rng)
        children = np.empty((2 * n_pairs, n), dtype=bool)
        children[0::2], children[1::2] = c1, c2
        children = mutate(children[:n_children], params.mutation_rate, rng) & alive
        children = repair(children, deployment)

        child_res = evaluate_batch(children, deployment, radio, kind) if n_children else None
        bits = np.concatenate([bits[elite], children])
        res = type(res)(
            *(
                np.concatenate([getattr(res, f)[elite], getattr(child_res, f)]) if child_res else getattr(res, f)[elite]
                for f in ("F", "E", "RCSD", "TCH")
            ),
            res.TD,
            res.N,
        )
        metrics.append(_metrics(gen, bits, res))
        i = int(np.argmax(res.F))
        if res.F[i] > best_f:
            best_bits, best_f = bits[i].copy(), float(res.F[i])

    best = Chromosome(best_bits, best_f)
    final = evaluate_batch(best_bits[None, :], deployment, radio, kind)
    breakdown = FitnessBreakdown(best_f, float(final.E[0]), final.TD, float(final.RCSD[0]), int(final.TCH[0]), final.N)
    return EvolutionResult(metrics, best, breakdown)


def metrics_csv(metrics: list[GenerationMetrics]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(METRICS_COLUMNS)
    for m in metrics:
        w.writerow(m.row())
    return buf.getvalue()


def write_metrics_csv(metrics: list[GenerationMetrics], path) -> Path:
    path = Path(path)
    path.write_text(metrics_csv(metrics))
    return path


def read_metrics_csv(path) -> list[GenerationMetrics]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        GenerationMetrics(
            int(r["generation"]),
            float(r["best_F"]),
            float(r["mean_F"]),
            int(r["best_TCH"]),
            float(r["best_RCSD"]),
            float(r["best_E"]),
            r["best_chromosome"],
        )
        for r in rows
    ]
