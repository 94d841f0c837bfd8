"""Exhaustive search over every non-empty head set, for small networks."""

from __future__ import annotations

import numpy as np

from .clustering import EQ3, Chromosome, FitnessBreakdown, FitnessKind, bits_from_string, bits_to_string, evaluate_batch
from .energy import RadioModel
from .network import Deployment

MAX_NODES = 20
_BLOCK = 1 << 14


def all_chromosomes(n: int, start: int = 1, stop: int | None = None) -> np.ndarray:
    """Rows for the integers ``start..stop-1``; bit i of the integer is node i."""
    stop = (1 << n) if stop is None else stop
    codes = np.arange(start, stop, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(bool)


def exhaustive_best(
    deployment: Deployment, radio: RadioModel, fitness_kind: FitnessKind = EQ3
) -> tuple[Chromosome, FitnessBreakdown]:
    """Best chromosome over all 2**N - 1 candidates.

    Exact fitness ties go to the lexicographically smallest bit string.
    Candidates whose heads are all dead nodes are skipped.
    """
    n = deployment.node_count
    if n > MAX_NODES:
        raise ValueError(f"exhaustive search is capped at {MAX_NODES} nodes, got {n}")
    alive = deployment.alive
    best_f, best_bits = -np.inf, None
    for lo in range(1, 1 << n, _BLOCK):
        bits = all_chromosomes(n, lo, min(lo + _BLOCK, 1 << n))
        bits = bits[(bits & alive).any(axis=1)]
        if not len(bits):
            continue
        f = evaluate_batch(bits, deployment, radio, fitness_kind).F
        top = f.max()
        if top < best_f:
            continue
        cand = min(bits_to_string(b) for b in bits[f == top])
        if top > best_f or cand < bits_to_string(best_bits):
            best_f, best_bits = top, bits_from_string(cand)
    if best_bits is None:
        raise ValueError("no alive node to cluster")
    r = evaluate_batch(best_bits[None, :], deployment, radio, fitness_kind)
    breakdown = FitnessBreakdown(float(r.F[0]), float(r.E[0]), r.TD, float(r.RCSD[0]), int(r.TCH[0]), r.N)
    return Chromosome(best_bits, breakdown.F), breakdown
