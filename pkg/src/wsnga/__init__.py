"""Genetic-algorithm clustering for static wireless sensor networks."""

from .clustering import (
    EQ2,
    EQ3,
    Chromosome,
    ClusterAssignment,
    DegenerateChromosome,
    FitnessBreakdown,
    FitnessKind,
    decode,
    evaluate_batch,
    fitness,
    fitness_eq2,
    fitness_eq3,
    generalized_fitness,
    rcsd,
    repair,
)
from .energy import RadioModel, cluster_transfer_energy, receive_energy, transmit_energy
from .ga import (
    GAParams,
    GenerationMetrics,
    Population,
    evolve,
    mutate,
    roulette_select,
    single_point_crossover,
)
from .leach import LeachParams, LeachState, leach_elect_heads, leach_round
from .lifetime import LifetimeConfig, RoundRecord, lifetime_summary, run_lifetime
from .network import Deployment, NetworkConfig, Node, distance, generate_deployment, total_distance
from .oracle import exhaustive_best

__version__ = "0.1.0"
